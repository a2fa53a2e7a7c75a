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

#ifndef RACKRS_GOOD_POLY_HPP
#define RACKRS_GOOD_POLY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rackrs/field_tower.hpp"
#include "rackrs/poly.hpp"

namespace rackrs {

enum class GoodFamily { Power, Additive, Composite, Custom };

std::string_view to_string(GoodFamily family) noexcept;

/// One rack: the points on which h takes the constant value y.
struct RackGroup {
    std::vector<Elem> points;
    Elem constant;
};

/// A good polynomial h of degree u with its partition into equal-size groups.
///
/// Groups are ordered by the ordering key of their constant, and points
/// inside a group by their own ordering key (zero first, then ascending
/// generator power).
struct GoodPolynomial {
    GoodFamily family = GoodFamily::Custom;
    unsigned m = 1;            // multiplicative order (power, composite)
    std::vector<Elem> theta;   // linearized coefficients (additive, composite)
    unsigned e = 1;            // inner subfield degree (composite)
    unsigned a = 0;            // log_p of the additive kernel size
    Poly h;
    std::vector<RackGroup> groups;

    std::size_t u() const noexcept { return h.degree().value(); }
    std::size_t nbar() const noexcept { return groups.size(); }
};

/// h = x^m, constant on the cosets of the order-m subgroup. ORDER_NOT_DIVIDING
/// unless m | p^t - 1. `nbar` limits the number of cosets used.
GoodPolynomial make_power(const FieldTower& field, unsigned m, std::optional<std::size_t> nbar = std::nullopt);

/// h = sum theta_i x^(p^i), constant on the cosets of its kernel, which must
/// have exactly p^a elements (a = theta.size() - 1).
GoodPolynomial make_additive(const FieldTower& field, std::vector<Elem> theta,
                             std::optional<std::size_t> nbar = std::nullopt);

/// h = (sum theta_i x^(p^(e i)))^m with sum theta_i = 0; groups of size m |V|.
GoodPolynomial make_composite(const FieldTower& field, std::vector<Elem> theta, unsigned m, unsigned e,
                              std::optional<std::size_t> nbar = std::nullopt);

/// Groups `points` by the value of h. Every group must have exactly deg(h)
/// members (NOT_GOOD_ON_SET otherwise).
std::vector<RackGroup> build_partition(const FieldTower& field, const Poly& h, std::span<const Elem> points);

/// Exhaustive check of constancy, distinct constants, equal sizes and
/// disjointness. Throws NOT_GOOD_ON_SET or DUPLICATE_CONSTANTS.
void validate(const FieldTower& field, const GoodPolynomial& gp);

/// Linearized coefficients of L_U(x) = prod_{u in U}(x - u) for a GF(p)-subspace
/// U: the theta that makes make_additive() use U as its kernel.
std::vector<Elem> subspace_theta(const FieldTower& field, const SubspaceDesc& subspace);

}  // namespace rackrs

#endif  // RACKRS_GOOD_POLY_HPP
