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

#include <doctest.h>

#include "rackrs/error.hpp"
#include "rackrs/predict.hpp"

using namespace rackrs;

TEST_SUITE("predict") {
    TEST_CASE("closed forms under direct substitution") {
        PredictParams p;
        p.eps = 3;
        p.bprime = 6;
        CHECK(predict(Formula::Cor1, p) == Rational(18));

        p = {};
        p.eps = 2;
        p.dbar = 10;
        p.t = 30;
        p.kprime = 5;
        CHECK(predict(Formula::Cor3, p) == Rational(100));

        p = {};
        p.eps1 = 1;
        p.eps2 = 2;
        p.dbar = 10;
        p.t = 30;
        p.kprime = 5;
        const Rational two = predict(Formula::TwoRack, p);
        CHECK(two == Rational(600, 7) + Rational(50));
        CHECK(format_rational(two) == "950/7");

        p = {};
        p.eps = 2;
        p.nbar = 8;
        p.t = 8;
        p.sbar = 1;
        CHECK(predict(Formula::Cor2, p) == Rational(98));

        p = {};
        p.terms = {8, 6, 6};
        CHECK(predict(Formula::Thm2, p) == Rational(20));
        CHECK(format_rational(Rational(20)) == "20");
    }

    TEST_CASE("names and errors") {
        for (Formula f : {Formula::Cor1, Formula::Cor2, Formula::Cor3, Formula::Thm2, Formula::TwoRack})
            CHECK(parse_formula(to_string(f)) == f);
        CHECK_THROWS_AS(parse_formula("cor9"), Error);
        PredictParams p;
        p.dbar = 3;
        p.kprime = 5;
        CHECK_THROWS_AS(predict(Formula::Cor3, p), Error);
    }
}
