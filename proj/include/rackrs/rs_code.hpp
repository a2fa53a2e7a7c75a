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

#ifndef RACKRS_RS_CODE_HPP
#define RACKRS_RS_CODE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rackrs/field_tower.hpp"
#include "rackrs/poly.hpp"

namespace rackrs {

struct CodeParams {
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<Elem> points;
};

/// Validates distinct points and 1 <= k < n <= |field|.
CodeParams make_code_params(const FieldTower& field, std::size_t k, std::vector<Elem> points);

/// Symbols aligned with CodeParams::points.
using Codeword = std::vector<Elem>;

Codeword encode(const FieldTower& field, const Poly& f, const CodeParams& params);

/// nu_i = prod_{j != i} (a_i - a_j)^{-1}; RS(n, k, A)^perp = GRS(n, n - k, A, nu).
std::vector<Elem> dual_multipliers(const FieldTower& field, std::span<const Elem> points);

/// (nu_i g(a_i))_i for deg(g) < n - k.
Codeword dual_word(const FieldTower& field, const Poly& g, const CodeParams& params);

Elem inner_product(const FieldTower& field, std::span<const Elem> a, std::span<const Elem> b);

/// Interpolates k unerased positions and checks every other survivor against
/// the result. TOO_MANY_ERASURES below k survivors, INCONSISTENT on mismatch.
Poly erasure_decode(const FieldTower& field, std::span<const std::optional<Elem>> word, const CodeParams& params);

}  // namespace rackrs

#endif  // RACKRS_RS_CODE_HPP
