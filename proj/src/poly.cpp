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

#include "rackrs/poly.hpp"

#include <algorithm>
#include <set>

#include "rackrs/error.hpp"

namespace rackrs {

Poly::Poly(std::vector<Elem> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == Elem{0}) coeffs_.pop_back();
}

Poly Poly::monomial(Elem c, std::size_t degree) {
    std::vector<Elem> v(degree + 1, Elem{0});
    v[degree] = c;
    return Poly(std::move(v));
}

Poly Poly::linear(const FieldTower& field, Elem root) { return Poly({field.neg(root), field.one()}); }

Degree Poly::degree() const noexcept {
    return coeffs_.empty() ? Degree::neg_inf() : Degree(coeffs_.size() - 1);
}

Poly add(const FieldTower& field, const Poly& a, const Poly& b) {
    std::vector<Elem> out(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = field.add(a.coeff(i), b.coeff(i));
    return Poly(std::move(out));
}

Poly sub(const FieldTower& field, const Poly& a, const Poly& b) {
    std::vector<Elem> out(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = field.sub(a.coeff(i), b.coeff(i));
    return Poly(std::move(out));
}

Poly mul(const FieldTower& field, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Elem> out(a.coeffs().size() + b.coeffs().size() - 1, field.zero());
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == field.zero()) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            out[i + j] = field.add(out[i + j], field.mul(a.coeffs()[i], b.coeffs()[j]));
    }
    return Poly(std::move(out));
}

Poly scale(const FieldTower& field, const Poly& a, Elem c) {
    std::vector<Elem> out(a.coeffs());
    for (auto& v : out) v = field.mul(v, c);
    return Poly(std::move(out));
}

Elem eval(const FieldTower& field, const Poly& f, Elem x) {
    Elem acc = field.zero();
    for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = field.add(field.mul(acc, x), f.coeffs()[i]);
    return acc;
}

std::pair<Poly, Poly> divmod(const FieldTower& field, const Poly& f, const Poly& g) {
    if (g.is_zero()) throw Error(ErrorCode::DivideByZeroPoly, "division by the zero polynomial");
    if (f.degree() < g.degree()) return {Poly(), f};
    std::vector<Elem> rem = f.coeffs();
    const std::size_t dg = g.degree().value();
    const Elem lead_inv = field.inv(g.coeffs().back());
    std::vector<Elem> quot(rem.size() - dg, field.zero());
    for (std::size_t i = rem.size(); i-- > dg;) {
        const Elem c = field.mul(rem[i], lead_inv);
        quot[i - dg] = c;
        if (c == field.zero()) continue;
        for (std::size_t j = 0; j <= dg; ++j) rem[i - dg + j] = field.sub(rem[i - dg + j], field.mul(c, g.coeffs()[j]));
    }
    rem.resize(dg);
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly compose(const FieldTower& field, const Poly& outer, const Poly& inner) {
    Poly acc;
    for (std::size_t i = outer.coeffs().size(); i-- > 0;)
        acc = add(field, mul(field, acc, inner), Poly::constant(outer.coeffs()[i]));
    return acc;
}

Poly lagrange(const FieldTower& field, std::span<const Elem> xs, std::span<const Elem> ys) {
    if (xs.size() != ys.size()) throw Error(ErrorCode::DuplicatePoint, "point and value counts differ");
    std::set<Elem> seen(xs.begin(), xs.end());
    if (seen.size() != xs.size()) throw Error(ErrorCode::DuplicatePoint, "interpolation points must be distinct");
    const std::size_t n = xs.size();
    if (n == 0) return Poly();

    // M(x) = prod (x - x_i); M_i = M / (x - x_i) by synthetic division.
    Poly master = Poly::constant(field.one());
    for (Elem x : xs) master = mul(field, master, Poly::linear(field, x));

    std::vector<Elem> acc(n, field.zero());
    std::vector<Elem> part(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (ys[i] == field.zero()) continue;
        const auto& m = master.coeffs();
        Elem carry = field.zero();
        for (std::size_t j = n; j-- > 0;) {
            carry = field.add(m[j + 1], field.mul(carry, xs[i]));
            part[j] = carry;
        }
        Elem denom = field.zero();
        for (std::size_t j = n; j-- > 0;) denom = field.add(field.mul(denom, xs[i]), part[j]);
        const Elem w = field.div(ys[i], denom);
        for (std::size_t j = 0; j < n; ++j) acc[j] = field.add(acc[j], field.mul(w, part[j]));
    }
    return Poly(std::move(acc));
}

Poly residue_shifted(const FieldTower& field, const Poly& f, const Poly& h, Elem y) {
    if (h.degree() < Degree(1)) throw Error(ErrorCode::PreconditionFailed, "good polynomial must have degree >= 1");
    return divmod(field, f, sub(field, h, Poly::constant(y))).second;
}

std::vector<Poly> coefficient_polys(const FieldTower& field, const Poly& f, const Poly& h) {
    if (h.degree() < Degree(1)) throw Error(ErrorCode::PreconditionFailed, "good polynomial must have degree >= 1");
    const std::size_t u = h.degree().value();

    // chain[r] = v_{r+1}
    std::vector<Poly> chain;
    Poly rest = f;
    while (!rest.is_zero()) {
        auto [q, r] = divmod(field, rest, h);
        chain.push_back(std::move(r));
        rest = std::move(q);
    }

    std::vector<Poly> out;
    out.reserve(u);
    for (std::size_t j = 0; j < u; ++j) {
        std::vector<Elem> c(chain.size());
        for (std::size_t r = 0; r < chain.size(); ++r) c[r] = chain[r].coeff(j);
        out.emplace_back(std::move(c));
    }
    return out;
}

std::vector<Elem> vandermonde_solve(const FieldTower& field, std::span<const Elem> xs, std::span<const Elem> rhs,
                                    std::size_t first, std::size_t count) {
    if (xs.size() != count || rhs.size() != count)
        throw Error(ErrorCode::Singular, "need exactly one equation per unknown");
    if (count == 0) return {};
    std::set<Elem> seen(xs.begin(), xs.end());
    if (seen.size() != xs.size()) throw Error(ErrorCode::Singular, "repeated evaluation point");
    if (first > 0 && seen.count(field.zero()) != 0)
        throw Error(ErrorCode::Singular, "zero evaluation point with a shifted window");

    Matrix a(count, std::vector<Elem>(count));
    for (std::size_t r = 0; r < count; ++r) {
        Elem v = field.pow(xs[r], first);
        for (std::size_t j = 0; j < count; ++j) {
            a[r][j] = v;
            v = field.mul(v, xs[r]);
        }
    }
    auto sol = solve(field, std::move(a), std::vector<Elem>(rhs.begin(), rhs.end()));
    if (!sol) throw Error(ErrorCode::Singular, "Vandermonde system is singular");
    return *sol;
}

std::string format(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(f.coeffs()[i].value);
    }
    return out;
}

}  // namespace rackrs
