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

#include "rackrs/predict.hpp"

#include <numeric>

#include "rackrs/error.hpp"

namespace rackrs {

std::string_view to_string(Formula f) noexcept {
    switch (f) {
        case Formula::Cor1: return "cor1";
        case Formula::Cor2: return "cor2";
        case Formula::Cor3: return "cor3";
        case Formula::Thm2: return "thm2";
        case Formula::TwoRack: return "two_rack";
    }
    return "cor1";
}

Formula parse_formula(std::string_view name) {
    for (Formula f : {Formula::Cor1, Formula::Cor2, Formula::Cor3, Formula::Thm2, Formula::TwoRack})
        if (to_string(f) == name) return f;
    throw Error(ErrorCode::ConfigError, "unknown formula '" + std::string(name) + "'");
}

namespace {

Rational ratio(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw Error(ErrorCode::PreconditionFailed, "formula denominator must be positive");
    return Rational(num, den);
}

}  // namespace

Rational predict(Formula f, const PredictParams& p) {
    switch (f) {
        case Formula::Cor1: return Rational(p.eps * p.bprime);
        case Formula::Cor2: return Rational(p.eps * (p.nbar - 1) * (p.t - p.sbar));
        case Formula::Cor3: return ratio(p.eps * p.dbar * p.t, p.dbar - p.kprime + 1);
        case Formula::Thm2: return Rational(std::accumulate(p.terms.begin(), p.terms.end(), std::int64_t{0}));
        case Formula::TwoRack:
            return ratio(2 * p.eps1 * p.dbar * p.t, p.dbar - p.kprime + 2) +
                   ratio((p.eps2 - p.eps1) * p.dbar * p.t, p.dbar - p.kprime + 1);
    }
    return Rational(0);
}

std::string format_rational(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace rackrs
