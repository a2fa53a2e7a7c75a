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

#ifndef RACKRS_TESTS_ORACLES_HPP
#define RACKRS_TESTS_ORACLES_HPP

// Reference implementations that share no code with the library: digit-vector
// field arithmetic, brute-force spans and plain polynomial long division.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "rackrs/field_tower.hpp"
#include "rackrs/poly.hpp"

namespace oracle {

using Digits = std::vector<std::uint32_t>;

class RefField {
   public:
    RefField(std::uint32_t p, std::vector<std::uint32_t> modulus) : p_(p), mod_(std::move(modulus)) {
        t_ = static_cast<unsigned>(mod_.size() - 1);
        size_ = 1;
        for (unsigned i = 0; i < t_; ++i) size_ *= p_;
    }

    std::uint32_t size() const { return size_; }
    unsigned degree() const { return t_; }

    Digits unpack(std::uint32_t v) const {
        Digits d(t_);
        for (unsigned i = 0; i < t_; ++i) {
            d[i] = v % p_;
            v /= p_;
        }
        return d;
    }

    std::uint32_t pack(const Digits& d) const {
        std::uint32_t v = 0;
        for (unsigned i = t_; i-- > 0;) v = v * p_ + d[i];
        return v;
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        Digits x = unpack(a), y = unpack(b);
        for (unsigned i = 0; i < t_; ++i) x[i] = (x[i] + y[i]) % p_;
        return pack(x);
    }

    std::uint32_t scale(std::uint32_t c, std::uint32_t a) const {
        Digits x = unpack(a);
        for (auto& d : x) d = static_cast<std::uint32_t>(std::uint64_t{d} * c % p_);
        return pack(x);
    }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        const Digits x = unpack(a), y = unpack(b);
        std::vector<std::uint64_t> prod(2 * t_, 0);
        for (unsigned i = 0; i < t_; ++i)
            for (unsigned j = 0; j < t_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{x[i]} * y[j]) % p_;
        for (std::size_t deg = prod.size(); deg-- > t_;) {
            const std::uint64_t c = prod[deg];
            if (c == 0) continue;
            for (unsigned i = 0; i <= t_; ++i) {
                const std::size_t at = deg - t_ + i;
                prod[at] = (prod[at] + (p_ - c) * mod_[i]) % p_;
            }
        }
        Digits out(t_);
        for (unsigned i = 0; i < t_; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
        return pack(out);
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1;
        for (std::uint64_t i = 0; i < e; ++i) r = mul(r, a);
        return r;
    }

    std::uint32_t inv(std::uint32_t a) const {
        for (std::uint32_t b = 1; b < size_; ++b)
            if (mul(a, b) == 1) return b;
        return 0;
    }

    /// sum_{i < t/delta} x^(p^(delta i))
    std::uint32_t trace(std::uint32_t x, unsigned delta = 1) const {
        std::uint32_t acc = 0;
        std::uint32_t term = x;
        std::uint64_t q = 1;
        for (unsigned i = 0; i < delta; ++i) q *= p_;
        for (unsigned i = 0; i < t_ / delta; ++i) {
            acc = add(acc, term);
            term = pow(term, q);
        }
        return acc;
    }

    bool in_subfield(std::uint32_t x, unsigned delta) const {
        std::uint64_t q = 1;
        for (unsigned i = 0; i < delta; ++i) q *= p_;
        return pow(x, q) == x;
    }

    std::vector<std::uint32_t> subfield(unsigned delta) const {
        std::vector<std::uint32_t> out;
        for (std::uint32_t x = 0; x < size_; ++x)
            if (in_subfield(x, delta)) out.push_back(x);
        return out;
    }

    /// Dimension over GF(p^delta) of the span, by closing the set under
    /// subfield scaling and addition.
    std::size_t span_dimension(const std::vector<std::uint32_t>& elems, unsigned delta) const {
        const auto scalars = subfield(delta);
        std::set<std::uint32_t> span{0};
        for (auto e : elems) {
            if (span.count(e)) continue;
            std::set<std::uint32_t> next;
            for (auto c : scalars)
                for (auto v : span) next.insert(add(v, mul(c, e)));
            span = std::move(next);
        }
        std::size_t dim = 0;
        for (std::size_t n = 1; n < span.size(); n *= scalars.size()) ++dim;
        return dim;
    }

    std::uint32_t eval(const std::vector<std::uint32_t>& coeffs, std::uint32_t x) const {
        std::uint32_t acc = 0;
        std::uint32_t xp = 1;
        for (auto c : coeffs) {
            acc = add(acc, mul(c, xp));
            xp = mul(xp, x);
        }
        return acc;
    }

    /// Remainder of a modulo monic-or-not b, by long division.
    std::vector<std::uint32_t> rem(std::vector<std::uint32_t> a, std::vector<std::uint32_t> b) const {
        while (!b.empty() && b.back() == 0) b.pop_back();
        const std::uint32_t lead_inv = inv(b.back());
        while (true) {
            while (!a.empty() && a.back() == 0) a.pop_back();
            if (a.size() < b.size()) return a;
            const std::uint32_t c = mul(a.back(), lead_inv);
            const std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[shift + i] = add(a[shift + i], scale(p_ - 1, mul(c, b[i])));
        }
    }

   private:
    std::uint32_t p_;
    std::vector<std::uint32_t> mod_;
    unsigned t_;
    std::uint32_t size_;
};

inline RefField reference_for(const rackrs::FieldTower& field) {
    return RefField(field.characteristic(), field.modulus());
}

inline std::vector<std::uint32_t> packed(const rackrs::Poly& f) {
    std::vector<std::uint32_t> out;
    for (auto c : f.coeffs()) out.push_back(c.value);
    return out;
}

inline rackrs::Elem random_elem(const rackrs::FieldTower& field, std::mt19937_64& rng) {
    return rackrs::Elem{static_cast<std::uint32_t>(rng() % field.size())};
}

inline rackrs::Elem random_nonzero(const rackrs::FieldTower& field, std::mt19937_64& rng) {
    return rackrs::Elem{static_cast<std::uint32_t>(1 + rng() % (field.size() - 1))};
}

}  // namespace oracle

#endif  // RACKRS_TESTS_ORACLES_HPP
