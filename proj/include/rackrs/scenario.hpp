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

#ifndef RACKRS_SCENARIO_HPP
#define RACKRS_SCENARIO_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rackrs/field_tower.hpp"
#include "rackrs/good_poly.hpp"
#include "rackrs/poly.hpp"
#include "rackrs/rack_code.hpp"
#include "rackrs/repair.hpp"

namespace rackrs {

struct GoodPolySpec {
    GoodFamily family = GoodFamily::Additive;
    unsigned m = 1;
    unsigned e = 1;
    std::vector<std::uint32_t> theta;
    /// Basis of the additive kernel; an alternative to theta.
    std::vector<std::uint32_t> kernel;
    std::optional<std::size_t> nbar;
};

/// A parsed scenario file. Rack and node indices are stored zero-based.
struct Scenario {
    std::uint32_t p = 2;
    unsigned t = 0;
    std::vector<std::uint32_t> modulus;
    std::optional<std::size_t> n;
    std::size_t k = 0;
    std::optional<std::size_t> u;
    GoodPolySpec goodpoly;
    SchemeConfig scheme;
    std::vector<std::uint32_t> scheme_eta;
    std::vector<std::uint32_t> scheme_beta;
    FailureSpec failures;
    std::optional<std::vector<std::size_t>> helpers;
    std::uint64_t seed = 0;
    std::optional<std::vector<std::uint32_t>> message;
};

/// Line grammar: `block key=value ...`, `#` starts a comment. CONFIG_ERROR
/// on unknown blocks or keys, malformed numbers and missing required blocks.
Scenario parse_scenario(std::istream& in);
Scenario load_scenario(const std::filesystem::path& path);

FieldTower build_field(const Scenario& scn);
GoodPolynomial build_good_poly(const FieldTower& field, const Scenario& scn);
/// Builds the code and cross-checks the optional n and u entries.
RackCode build_code(const Scenario& scn);
SchemeConfig build_scheme(const FieldTower& field, const Scenario& scn);

/// k coefficients, each a raw mt19937_64 draw reduced modulo the field size.
Poly random_message(const FieldTower& field, std::size_t k, std::mt19937_64& rng);
/// The explicit message if present, otherwise random_message seeded with `seed`.
Poly scenario_message(const RackCode& code, const Scenario& scn, std::uint64_t seed);

/// Parses "1,2,3" or "1..3" (inclusive).
std::vector<std::uint64_t> parse_uint_list(const std::string& text);

}  // namespace rackrs

#endif  // RACKRS_SCENARIO_HPP
