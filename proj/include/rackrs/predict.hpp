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

#ifndef RACKRS_PREDICT_HPP
#define RACKRS_PREDICT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace rackrs {

using Rational = boost::rational<std::int64_t>;

enum class Formula { Cor1, Cor2, Cor3, Thm2, TwoRack };

std::string_view to_string(Formula f) noexcept;
/// CONFIG_ERROR on an unknown name.
Formula parse_formula(std::string_view name);

/// Inputs for every formula; each formula reads only its own fields.
struct PredictParams {
    std::int64_t eps = 0;
    std::int64_t bprime = 0;
    std::int64_t nbar = 0;
    std::int64_t t = 0;
    std::int64_t sbar = 0;
    std::int64_t dbar = 0;
    std::int64_t kprime = 0;
    std::int64_t eps1 = 0;
    std::int64_t eps2 = 0;
    std::vector<std::int64_t> terms;  // per-round b_{|R_t|}
};

/// cor1:     eps * b'
/// cor2:     eps * (nbar - 1) * (t - sbar)
/// cor3:     eps * dbar * t / (dbar - k' + 1)
/// thm2:     sum of terms
/// two_rack: 2 eps1 dbar t / (dbar - k' + 2) + (eps2 - eps1) dbar t / (dbar - k' + 1)
Rational predict(Formula f, const PredictParams& p);

/// "num/den", or the bare integer when den = 1.
std::string format_rational(const Rational& r);

}  // namespace rackrs

#endif  // RACKRS_PREDICT_HPP
