/*
   Copyright 2026 The rackrs Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "rackrs/field_tower.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "rackrs/error.hpp"

namespace rackrs {

namespace {

constexpr std::uint32_t kMaxFieldSize = 1u << 20;
constexpr std::uint32_t kTableLimit = 1u << 16;

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Remainder of a by b over GF(p); b monic-or-not, nonzero leading coefficient.
std::vector<std::uint32_t> poly_mod_prime(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& b,
                                          std::uint32_t p) {
    const std::size_t db = b.size() - 1;
    std::uint32_t lead_inv = 1;
    for (std::uint32_t c = 1; c < p; ++c)
        if ((c * b.back()) % p == 1) lead_inv = c;
    for (std::size_t i = a.size(); i-- > db;) {
        const std::uint32_t c = (a[i] * lead_inv) % p;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] = (a[i - db + j] + (p - c) * b[j]) % p;
    }
    a.resize(std::min(a.size(), db));
    return a;
}

bool has_factor_of_degree(const std::vector<std::uint32_t>& f, std::uint32_t p, unsigned d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    std::vector<std::uint32_t> g(d + 1);
    for (std::uint64_t packed = 0; packed < count; ++packed) {
        std::uint64_t rest = packed;
        for (unsigned i = 0; i < d; ++i) {
            g[i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        g[d] = 1;
        const auto r = poly_mod_prime(f, g, p);
        if (std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; })) return true;
    }
    return false;
}

}  // namespace

struct FieldTower::Impl {
    std::uint32_t p = 2;
    unsigned t = 1;
    std::uint32_t size = 2;
    std::vector<std::uint32_t> modulus;
    std::vector<std::uint32_t> place;  // p^i
    bool tables = false;
    Elem generator{1};
    std::vector<std::uint32_t> exp_table;  // length 2(size-1)
    std::vector<std::uint32_t> log_table;

    std::vector<std::uint32_t> digits(std::uint32_t v) const {
        std::vector<std::uint32_t> d(t);
        for (unsigned i = 0; i < t; ++i) {
            d[i] = v % p;
            v /= p;
        }
        return d;
    }

    std::uint32_t pack(const std::vector<std::uint32_t>& d) const {
        std::uint32_t v = 0;
        for (unsigned i = t; i-- > 0;) v = v * p + d[i];
        return v;
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (p == 2) return a ^ b;
        std::uint32_t out = 0;
        for (unsigned i = 0; i < t; ++i) {
            out += ((a % p + b % p) % p) * place[i];
            a /= p;
            b /= p;
        }
        return out;
    }

    std::uint32_t neg(std::uint32_t a) const {
        if (p == 2) return a;
        std::uint32_t out = 0;
        for (unsigned i = 0; i < t; ++i) {
            out += ((p - a % p) % p) * place[i];
            a /= p;
        }
        return out;
    }

    std::uint32_t mul_schoolbook(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        const auto da = digits(a);
        const auto db = digits(b);
        std::vector<std::uint64_t> prod(2 * t - 1, 0);
        for (unsigned i = 0; i < t; ++i) {
            if (da[i] == 0) continue;
            for (unsigned j = 0; j < t; ++j) prod[i + j] += static_cast<std::uint64_t>(da[i]) * db[j];
        }
        for (auto& c : prod) c %= p;
        for (std::size_t i = prod.size(); i-- > t;) {
            const std::uint64_t c = prod[i];
            if (c == 0) continue;
            for (unsigned j = 0; j <= t; ++j) prod[i - t + j] = (prod[i - t + j] + (p - c) * modulus[j]) % p;
        }
        std::vector<std::uint32_t> low(t);
        for (unsigned i = 0; i < t; ++i) low[i] = static_cast<std::uint32_t>(prod[i]);
        return pack(low);
    }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        if (tables) return exp_table[log_table[a] + log_table[b]];
        return mul_schoolbook(a, b);
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        if (e == 0) return 1;
        if (a == 0) return 0;
        if (tables) {
            const std::uint64_t n = size - 1;
            return exp_table[(static_cast<std::uint64_t>(log_table[a]) * (e % n)) % n];
        }
        std::uint32_t result = 1;
        std::uint32_t base = a;
        while (e != 0) {
            if (e & 1) result = mul_schoolbook(result, base);
            base = mul_schoolbook(base, base);
            e >>= 1;
        }
        return result;
    }
};

FieldTower FieldTower::build(std::uint32_t p, unsigned t, std::vector<std::uint32_t> modulus,
                             MulStrategy strategy) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (t == 0) throw Error(ErrorCode::BadModulus, "extension degree must be positive");
    std::uint64_t size = 1;
    for (unsigned i = 0; i < t; ++i) {
        size *= p;
        if (size > kMaxFieldSize) throw Error(ErrorCode::FieldTooLarge, "field exceeds 2^20 elements");
    }
    if (modulus.size() != t + 1 || modulus.back() != 1)
        throw Error(ErrorCode::BadModulus, "modulus must be monic of degree " + std::to_string(t));
    for (auto c : modulus)
        if (c >= p) throw Error(ErrorCode::BadModulus, "modulus coefficient out of range");
    for (unsigned d = 1; d <= t / 2; ++d)
        if (has_factor_of_degree(modulus, p, d))
            throw Error(ErrorCode::ReducibleModulus,
                        "modulus has a factor of degree " + std::to_string(d) + " over GF(" + std::to_string(p) + ")");

    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->t = t;
    impl->size = static_cast<std::uint32_t>(size);
    impl->modulus = std::move(modulus);
    impl->place.resize(t);
    std::uint32_t pl = 1;
    for (unsigned i = 0; i < t; ++i) {
        impl->place[i] = pl;
        pl *= p;
    }

    const std::uint64_t order = size - 1;
    const auto factors = prime_factors(order);
    for (std::uint32_t cand = 1; cand < size; ++cand) {
        if (impl->pow(cand, order) != 1) continue;
        const bool full = std::all_of(factors.begin(), factors.end(),
                                      [&](std::uint64_t r) { return impl->pow(cand, order / r) != 1; });
        if (full) {
            impl->generator = Elem{cand};
            break;
        }
    }

    const bool want_tables = strategy == MulStrategy::Tables || (strategy == MulStrategy::Auto && size <= kTableLimit);
    if (want_tables) {
        impl->exp_table.resize(2 * order);
        impl->log_table.assign(size, 0);
        std::uint32_t x = 1;
        for (std::uint64_t i = 0; i < order; ++i) {
            impl->exp_table[i] = x;
            impl->exp_table[i + order] = x;
            impl->log_table[x] = static_cast<std::uint32_t>(i);
            x = impl->mul_schoolbook(x, impl->generator.value);
        }
        impl->tables = true;
    }
    return FieldTower(std::move(impl));
}

FieldTower FieldTower::standard(std::uint32_t p, unsigned t, MulStrategy strategy) {
    for (const auto& row : modulus_table())
        if (row.p == p && row.t == t) return build(p, t, row.modulus, strategy);
    throw Error(ErrorCode::BadModulus,
                "no shipped modulus for p=" + std::to_string(p) + " t=" + std::to_string(t));
}

std::uint32_t FieldTower::characteristic() const noexcept { return impl_->p; }
unsigned FieldTower::degree() const noexcept { return impl_->t; }
std::uint32_t FieldTower::size() const noexcept { return impl_->size; }
const std::vector<std::uint32_t>& FieldTower::modulus() const noexcept { return impl_->modulus; }
bool FieldTower::uses_tables() const noexcept { return impl_->tables; }
Elem FieldTower::generator() const noexcept { return impl_->generator; }

std::vector<unsigned> FieldTower::subfield_degrees() const {
    std::vector<unsigned> out;
    for (unsigned d = 1; d <= impl_->t; ++d)
        if (impl_->t % d == 0) out.push_back(d);
    return out;
}

void FieldTower::require_subfield(unsigned delta) const {
    if (delta == 0 || impl_->t % delta != 0)
        throw Error(ErrorCode::BadSubfield,
                    std::to_string(delta) + " does not divide " + std::to_string(impl_->t));
}

Elem FieldTower::subfield_generator(unsigned delta) const {
    require_subfield(delta);
    std::uint64_t sub = 1;
    for (unsigned i = 0; i < delta; ++i) sub *= impl_->p;
    return Elem{impl_->pow(impl_->generator.value, (impl_->size - 1) / (sub - 1))};
}

Elem FieldTower::element(std::uint32_t packed) const {
    if (packed >= impl_->size)
        throw Error(ErrorCode::LevelMismatch,
                    std::to_string(packed) + " is not an element of a field of size " + std::to_string(impl_->size));
    return Elem{packed};
}

Elem FieldTower::from_prime(std::uint32_t c) const { return Elem{c % impl_->p}; }

std::vector<std::uint32_t> FieldTower::digits(Elem x) const { return impl_->digits(x.value); }

Elem FieldTower::from_digits(std::span<const std::uint32_t> d) const {
    if (d.size() != impl_->t) throw Error(ErrorCode::LevelMismatch, "digit count does not match degree");
    std::uint32_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) {
        if (d[i] >= impl_->p) throw Error(ErrorCode::LevelMismatch, "digit out of range");
        v = v * impl_->p + d[i];
    }
    return Elem{v};
}

namespace {
void check_operand(const FieldTower& f, Elem x) {
    if (!f.contains(x)) throw Error(ErrorCode::LevelMismatch, "operand outside the field");
}
}  // namespace

Elem FieldTower::add(Elem a, Elem b) const {
    check_operand(*this, a);
    check_operand(*this, b);
    return Elem{impl_->add(a.value, b.value)};
}

Elem FieldTower::sub(Elem a, Elem b) const {
    check_operand(*this, a);
    check_operand(*this, b);
    return Elem{impl_->add(a.value, impl_->neg(b.value))};
}

Elem FieldTower::neg(Elem a) const {
    check_operand(*this, a);
    return Elem{impl_->neg(a.value)};
}

Elem FieldTower::mul(Elem a, Elem b) const {
    check_operand(*this, a);
    check_operand(*this, b);
    return Elem{impl_->mul(a.value, b.value)};
}

Elem FieldTower::inv(Elem a) const {
    check_operand(*this, a);
    if (a.value == 0) throw Error(ErrorCode::DivideByZero, "inverse of zero");
    if (impl_->tables) {
        const std::uint32_t n = impl_->size - 1;
        return Elem{impl_->exp_table[(n - impl_->log_table[a.value]) % n]};
    }
    return Elem{impl_->pow(a.value, impl_->size - 2)};
}

Elem FieldTower::div(Elem a, Elem b) const {
    check_operand(*this, a);
    if (b.value == 0) throw Error(ErrorCode::DivideByZero, "division by zero");
    return mul(a, inv(b));
}

Elem FieldTower::pow(Elem a, std::uint64_t e) const {
    check_operand(*this, a);
    return Elem{impl_->pow(a.value, e)};
}

std::optional<std::uint32_t> FieldTower::log(Elem x) const {
    if (!impl_->tables || x.value == 0 || !contains(x)) return std::nullopt;
    return impl_->log_table[x.value];
}

Elem FieldTower::exp(std::uint64_t k) const {
    if (impl_->tables) return Elem{impl_->exp_table[k % (impl_->size - 1)]};
    return Elem{impl_->pow(impl_->generator.value, k)};
}

std::uint64_t FieldTower::order_key(Elem x) const {
    if (x.value == 0) return 0;
    if (auto l = log(x)) return 1 + static_cast<std::uint64_t>(*l);
    return x.value;
}

Elem FieldTower::frobenius(Elem x, unsigned k) const {
    std::uint64_t e = 1;
    for (unsigned i = 0; i < k % impl_->t; ++i) e *= impl_->p;
    return pow(x, e);
}

bool FieldTower::in_subfield(Elem x, unsigned delta) const {
    require_subfield(delta);
    return frobenius(x, delta) == x;
}

Elem FieldTower::trace(Elem x, unsigned delta) const {
    require_subfield(delta);
    check_operand(*this, x);
    Elem acc = zero();
    Elem term = x;
    for (unsigned i = 0; i < impl_->t / delta; ++i) {
        acc = add(acc, term);
        term = frobenius(term, delta);
    }
    return acc;
}

std::vector<Elem> FieldTower::subfield_elements(unsigned delta) const {
    const Elem g = subfield_generator(delta);
    std::vector<Elem> out{zero()};
    Elem x = one();
    do {
        out.push_back(x);
        x = mul(x, g);
    } while (x != one());
    return out;
}

std::string FieldTower::format_packed(Elem x) const { return std::to_string(x.value); }

std::string FieldTower::format_power(Elem x) const {
    if (x.value == 0) return "0";
    const auto l = log(x);
    if (!l) return std::to_string(x.value);
    if (*l == 0) return "1";
    if (*l == 1) return "γ";
    return "γ^" + std::to_string(*l);
}

// ---------------------------------------------------------------------------

std::optional<Matrix> invert(const FieldTower& field, Matrix m) {
    const std::size_t n = m.size();
    Matrix inv(n, std::vector<Elem>(n, field.zero()));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = field.one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == field.zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        const Elem scale = field.inv(m[col][col]);
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] = field.mul(m[col][j], scale);
            inv[col][j] = field.mul(inv[col][j], scale);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == field.zero()) continue;
            const Elem factor = m[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] = field.sub(m[r][j], field.mul(factor, m[col][j]));
                inv[r][j] = field.sub(inv[r][j], field.mul(factor, inv[col][j]));
            }
        }
    }
    return inv;
}

std::optional<std::vector<Elem>> solve(const FieldTower& field, Matrix a, std::vector<Elem> rhs) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) a[i].push_back(rhs[i]);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == field.zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[pivot], a[col]);
        const Elem scale = field.inv(a[col][col]);
        for (auto& v : a[col]) v = field.mul(v, scale);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == field.zero()) continue;
            const Elem factor = a[r][col];
            for (std::size_t j = col; j <= n; ++j) a[r][j] = field.sub(a[r][j], field.mul(factor, a[col][j]));
        }
    }
    std::vector<Elem> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

namespace {

// Coordinates of x over GF(p^delta) w.r.t. the trace form and the basis
// {1, g, ..., g^(t/delta - 1)}; an injective GF(p^delta)-linear map.
std::vector<Elem> subfield_coordinates(const FieldTower& field, Elem x, unsigned delta) {
    const unsigned dim = field.degree() / delta;
    std::vector<Elem> out(dim);
    Elem b = field.one();
    for (unsigned i = 0; i < dim; ++i) {
        out[i] = field.trace(field.mul(b, x), delta);
        b = field.mul(b, field.generator());
    }
    return out;
}

// Incremental row echelon form; returns true when `row` was independent.
class Echelon {
   public:
    explicit Echelon(const FieldTower& field) : field_(field) {}

    bool insert(std::vector<Elem> row) {
        for (const auto& [col, base] : rows_) {
            const Elem c = row[col];
            if (c == field_.zero()) continue;
            for (std::size_t j = 0; j < row.size(); ++j) row[j] = field_.sub(row[j], field_.mul(c, base[j]));
        }
        for (std::size_t col = 0; col < row.size(); ++col) {
            if (row[col] == field_.zero()) continue;
            const Elem scale = field_.inv(row[col]);
            for (auto& v : row) v = field_.mul(v, scale);
            for (auto& [other_col, base] : rows_) {
                const Elem c = base[col];
                if (c == field_.zero()) continue;
                for (std::size_t j = 0; j < base.size(); ++j) base[j] = field_.sub(base[j], field_.mul(c, row[j]));
            }
            rows_.emplace_back(col, std::move(row));
            return true;
        }
        return false;
    }

    std::size_t rank() const { return rows_.size(); }

   private:
    const FieldTower& field_;
    std::vector<std::pair<std::size_t, std::vector<Elem>>> rows_;
};

}  // namespace

std::size_t rank_over_subfield(const FieldTower& field, std::span<const Elem> elems, unsigned delta) {
    return span_basis(field, elems, delta).size();
}

std::vector<Elem> span_basis(const FieldTower& field, std::span<const Elem> elems, unsigned delta) {
    if (delta == 0 || field.degree() % delta != 0)
        throw Error(ErrorCode::BadSubfield, "subfield degree must divide the extension degree");
    Echelon ech(field);
    std::vector<Elem> out;
    for (Elem x : elems)
        if (ech.insert(subfield_coordinates(field, x, delta))) out.push_back(x);
    return out;
}

std::vector<Elem> dual_basis(const FieldTower& field, std::span<const Elem> basis, unsigned delta) {
    if (delta == 0 || field.degree() % delta != 0)
        throw Error(ErrorCode::BadSubfield, "subfield degree must divide the extension degree");
    const std::size_t n = field.degree() / delta;
    if (basis.size() != n)
        throw Error(ErrorCode::NotABasis, "expected " + std::to_string(n) + " elements, got " +
                                              std::to_string(basis.size()));
    Matrix gram(n, std::vector<Elem>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gram[i][j] = field.trace(field.mul(basis[i], basis[j]), delta);
    auto c = invert(field, std::move(gram));
    if (!c) throw Error(ErrorCode::NotABasis, "elements are linearly dependent");
    std::vector<Elem> dual(n, field.zero());
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) dual[j] = field.add(dual[j], field.mul((*c)[j][k], basis[k]));
    return dual;
}

std::vector<Elem> expand(const FieldTower& field, Elem x, std::span<const Elem> basis, unsigned delta) {
    std::vector<Elem> out;
    out.reserve(basis.size());
    for (Elem b : basis) out.push_back(field.trace(field.mul(b, x), delta));
    return out;
}

Elem reassemble(const FieldTower& field, std::span<const Elem> coords, std::span<const Elem> dual) {
    if (coords.size() != dual.size()) throw Error(ErrorCode::NotABasis, "coordinate count mismatch");
    Elem acc = field.zero();
    for (std::size_t i = 0; i < coords.size(); ++i) acc = field.add(acc, field.mul(coords[i], dual[i]));
    return acc;
}

SubspaceDesc make_subspace(const FieldTower& field, std::vector<Elem> basis, unsigned delta) {
    if (rank_over_subfield(field, basis, delta) != basis.size())
        throw Error(ErrorCode::NotABasis, "subspace generators are dependent");
    std::uint64_t sub = 1;
    for (unsigned i = 0; i < delta; ++i) sub *= field.characteristic();
    std::uint64_t card = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) card *= sub;
    return SubspaceDesc{delta, std::move(basis), card};
}

std::vector<Elem> enumerate(const FieldTower& field, const SubspaceDesc& subspace) {
    const auto scalars = field.subfield_elements(subspace.subfield_degree);
    std::vector<Elem> out{field.zero()};
    for (Elem b : subspace.basis) {
        std::vector<Elem> next;
        next.reserve(out.size() * scalars.size());
        for (Elem c : scalars)
            for (Elem v : out) next.push_back(field.add(v, field.mul(c, b)));
        out = std::move(next);
    }
    return out;
}

Elem linearized_eval(const FieldTower& field, const SubspaceDesc& subspace, Elem x) {
    Elem acc = field.one();
    for (Elem u : enumerate(field, subspace)) acc = field.mul(acc, field.sub(x, u));
    return acc;
}

}  // namespace rackrs
