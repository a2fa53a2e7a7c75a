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

#ifndef RACKRS_POLY_HPP
#define RACKRS_POLY_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rackrs/field_tower.hpp"

namespace rackrs {

/// Polynomial degree with a distinguished -infinity for the zero polynomial.
class Degree {
   public:
    static constexpr Degree neg_inf() noexcept { return Degree(); }
    constexpr explicit Degree(std::size_t d) noexcept : value_(d) {}

    constexpr bool is_neg_inf() const noexcept { return !value_.has_value(); }
    /// Only meaningful for nonzero polynomials.
    constexpr std::size_t value() const noexcept { return value_.value_or(0); }

    friend constexpr bool operator==(Degree a, Degree b) noexcept = default;
    friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) noexcept {
        if (a.is_neg_inf() || b.is_neg_inf()) return !a.is_neg_inf() <=> !b.is_neg_inf();
        return *a.value_ <=> *b.value_;
    }

   private:
    constexpr Degree() noexcept = default;
    std::optional<std::size_t> value_;
};

/// Coefficients low-to-high; trailing zeros are always trimmed.
class Poly {
   public:
    Poly() = default;
    explicit Poly(std::vector<Elem> coeffs);

    static Poly constant(Elem c) { return Poly({c}); }
    static Poly monomial(Elem c, std::size_t degree);
    /// x - root
    static Poly linear(const FieldTower& field, Elem root);

    const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
    Elem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : Elem{0}; }
    Degree degree() const noexcept;
    bool is_zero() const noexcept { return coeffs_.empty(); }

    friend bool operator==(const Poly&, const Poly&) = default;

   private:
    std::vector<Elem> coeffs_;
};

/// true when deg(f) < bound, with deg(0) = -inf.
inline bool degree_below(const Poly& f, std::size_t bound) { return f.degree() < Degree(bound); }

Poly add(const FieldTower& field, const Poly& a, const Poly& b);
Poly sub(const FieldTower& field, const Poly& a, const Poly& b);
Poly mul(const FieldTower& field, const Poly& a, const Poly& b);
Poly scale(const FieldTower& field, const Poly& a, Elem c);
Elem eval(const FieldTower& field, const Poly& f, Elem x);

/// f = g * quotient + remainder, deg(remainder) < deg(g).
std::pair<Poly, Poly> divmod(const FieldTower& field, const Poly& f, const Poly& g);

/// outer(inner(x))
Poly compose(const FieldTower& field, const Poly& outer, const Poly& inner);

/// Interpolating polynomial of degree < points.size(); DUPLICATE_POINT on repeated x.
Poly lagrange(const FieldTower& field, std::span<const Elem> xs, std::span<const Elem> ys);

/// f mod (h - y): the degree-<deg(h) polynomial agreeing with f wherever h = y.
Poly residue_shifted(const FieldTower& field, const Poly& f, const Poly& h, Elem y);

/// H_0..H_{u-1} with sum_j H_j(y) x^j = f mod (h - y), built from the chain
/// f = h^(s-1) v_s + ... + h v_2 + v_1.
std::vector<Poly> coefficient_polys(const FieldTower& field, const Poly& f, const Poly& h);

/// Solves sum_{j=first}^{first+count-1} e_j xs[r]^j = rhs[r] for the window
/// coefficients. SINGULAR on repeated points or a zero point when first > 0.
std::vector<Elem> vandermonde_solve(const FieldTower& field, std::span<const Elem> xs, std::span<const Elem> rhs,
                                    std::size_t first, std::size_t count);

/// Comma-separated packed coefficients, low-to-high ("0" for the zero polynomial).
std::string format(const Poly& f);

}  // namespace rackrs

#endif  // RACKRS_POLY_HPP
