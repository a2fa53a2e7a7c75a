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

#include <sstream>

#include "rackrs/commands.hpp"
#include "rackrs/error.hpp"
#include "rackrs/scenario.hpp"

using namespace rackrs;

namespace {

Scenario parse(const std::string& text) {
    std::istringstream in(text);
    return parse_scenario(in);
}

ErrorCode parse_error(const std::string& text) {
    try {
        parse(text);
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::PreconditionFailed;
}

std::string example1_without_failures() {
    std::string text(example1_scenario());
    const auto at = text.find("failures");
    text.erase(at, text.find('\n', at) - at + 1);
    const auto h = text.find("helpers");
    text.erase(h, text.find('\n', h) - h + 1);
    return text;
}

std::string line_with(const std::string& text, const std::string& prefix) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind(prefix, 0) == 0) return line;
    return {};
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("scenario grammar") {
        const auto scn = parse(std::string(example1_scenario()));
        CHECK(scn.p == 2);
        CHECK(scn.t == 4);
        CHECK(scn.modulus == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
        CHECK(scn.k == 7);
        CHECK(scn.goodpoly.theta == std::vector<std::uint32_t>{1, 0, 1});
        CHECK(scn.scheme.kind == SchemeKind::GwSubfield);
        CHECK(scn.scheme.delta == 2);
        CHECK(scn.failures.racks.at(0) == std::set<std::size_t>{1, 2, 3});
        CHECK(*scn.helpers == std::vector<std::size_t>{1, 2, 3});
        CHECK(scn.seed == 2024);
        CHECK(parse_uint_list("2..5") == std::vector<std::uint64_t>{2, 3, 4, 5});
        CHECK(parse_uint_list("7,1") == std::vector<std::uint64_t>{7, 1});
    }

    TEST_CASE("malformed scenarios are config errors") {
        const std::string base = "field p=2 t=4\ncode k=7\ngoodpoly family=additive theta=1,0,1\n";
        CHECK_NOTHROW(parse(base));
        CHECK(parse_error(base + "bogus x=1\n") == ErrorCode::ConfigError);
        CHECK(parse_error(base + "seed value=abc\n") == ErrorCode::ConfigError);
        CHECK(parse_error(base + "seed valu=1\n") == ErrorCode::ConfigError);
        CHECK(parse_error(base + "scheme kind=fancy\n") == ErrorCode::ConfigError);
        CHECK(parse_error(base + "failures rack=0 nodes=1\n") == ErrorCode::ConfigError);
        CHECK(parse_error(base + "seed value\n") == ErrorCode::ConfigError);
        CHECK(parse_error("field p=2 t=4\ncode k=7\n") == ErrorCode::ConfigError);
        CHECK(parse_error(base + "code k=3\n") == ErrorCode::ConfigError);
        CHECK(parse_error(base + "goodpoly family=odd\n") == ErrorCode::ConfigError);
    }

    TEST_CASE("build-time validation") {
        auto scn = parse("field p=2 t=4\ncode n=15 k=7\ngoodpoly family=additive theta=1,0,1\n");
        CHECK_THROWS_AS(build_code(scn), Error);
        scn = parse("field p=2 t=4\ncode k=7 u=5\ngoodpoly family=additive theta=1,0,1\n");
        CHECK_THROWS_AS(build_code(scn), Error);
        scn = parse("field p=2 t=4\ncode k=7\ngoodpoly family=power m=5 nbar=3\n");
        CHECK(build_code(scn).n() == 15);
        scn = parse("field p=2 t=8\ncode k=64\ngoodpoly family=additive kernel=1,2,4,8,16\n");
        CHECK(build_code(scn).u() == 32);
    }

    TEST_CASE("run reports the worked example") {
        std::ostringstream out;
        CHECK(cmd_run(parse(std::string(example1_scenario())), {}, out) == kExitOk);
        CHECK(line_with(out.str(), "total ") .find("cross_rack=18 predicted=18 cor1=18") != std::string::npos);
        CHECK(line_with(out.str(), "check ") == "check restored=ok oracle=ok bandwidth=ok");

        std::ostringstream shown;
        RunOptions opts;
        opts.show_intra = true;
        CHECK(cmd_run(parse(std::string(example1_scenario())), opts, shown) == kExitOk);
        CHECK(shown.str() != out.str());
        CHECK(line_with(shown.str(), "summary,") == line_with(out.str(), "summary,"));
        CHECK(line_with(shown.str(), "total ") == line_with(out.str(), "total "));
    }

    TEST_CASE("run with no failures reports zero") {
        std::ostringstream out;
        CHECK(cmd_run(parse(example1_without_failures()), {}, out) == kExitOk);
        CHECK(line_with(out.str(), "summary,") == "summary,cross_rack=0,intra_rack=0");
        CHECK(line_with(out.str(), "total ").rfind("total cross_rack=0 ", 0) == 0);
    }

    TEST_CASE("example1 prints the download table") {
        std::ostringstream out;
        CHECK(cmd_example1({}, out) == kExitOk);
        const auto text = out.str();
        CHECK(text.find("rack 2: Tr(e), Tr(γ·e)") != std::string::npos);
        CHECK(text.find("Tr(e/γ^5)") != std::string::npos);
        CHECK(text.find("Tr(e/γ^4)") != std::string::npos);
        CHECK(text.find("Tr(e/γ^10)") != std::string::npos);
        CHECK(text.find("Tr(e/γ^9)") != std::string::npos);
        CHECK(text.find("b = eps*b' = 3*6 = 18 bits") != std::string::npos);
    }

    TEST_CASE("table evaluates sweeps") {
        std::ostringstream out;
        CHECK(cmd_table(nullptr, {}, out) == kExitOk);
        const auto text = out.str();
        CHECK(line_with(text, "formula,") == "formula,eps,bprime,nbar,t,sbar,dbar,kprime,eps1,eps2,terms,value");
        CHECK(text.find("cor1,3,6,,,,,,,,,18\n") != std::string::npos);
        CHECK(text.find("cor3,2,,,30,,10,5,,,,100\n") != std::string::npos);
        CHECK(text.find("two_rack,,,,30,,10,5,1,2,,950/7\n") != std::string::npos);

        std::istringstream sweep("# comment\nsweep formula=cor2 eps=1..2 nbar=8 t=8 sbar=1\n");
        std::ostringstream custom;
        CHECK(cmd_table(&sweep, {}, custom) == kExitOk);
        CHECK(custom.str() ==
              "formula,eps,bprime,nbar,t,sbar,dbar,kprime,eps1,eps2,terms,value\n"
              "cor2,1,,8,8,1,,,,,,49\n"
              "cor2,2,,8,8,1,,,,,,98\n");
        std::istringstream bad("sweep formula=cor2 wat=1\n");
        CHECK_THROWS_AS(cmd_table(&bad, {}, custom), Error);
    }

    TEST_CASE("verify campaign") {
        std::ostringstream out;
        CHECK(cmd_verify(parse(std::string(example1_scenario())), 24, {}, out) == kExitOk);
        CHECK(out.str() ==
              "verify trials=24 seed=2024 columns=24/24 residues=24/24 oracle=24/24 bandwidth=24/24 result=pass\n");
    }
}
