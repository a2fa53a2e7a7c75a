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

#include <random>
#include <sstream>

#include "configs.hpp"
#include "rackrs/error.hpp"
#include "rackrs/scenario.hpp"
#include "rackrs/simulator.hpp"

using namespace rackrs;

namespace {

std::string ledger_text(const Ledger& l, bool intra) {
    std::ostringstream out;
    write_ledger(out, l, intra);
    return out.str();
}

std::string last_line(const std::string& text) {
    const auto end = text.find_last_not_of('\n');
    const auto start = text.rfind('\n', end);
    return text.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
}

}  // namespace

TEST_SUITE("simulator") {
    TEST_CASE("cluster construction and failure injection") {
        const auto code = configs::example1();
        const Elem c{5};
        auto cluster = Cluster::build(code, Poly::constant(c));
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) CHECK(cluster.read(i, j) == c);

        std::mt19937_64 rng(1);
        const Poly m = random_message(code.field(), 7, rng);
        auto random_cluster = Cluster::build(code, m);
        const auto arr = layout(code, m);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) CHECK(random_cluster.read(i, j) == arr.symbols[i][j]);

        const FailureSpec spec{{{0, {1, 2, 3}}}};
        random_cluster.inject(spec);
        CHECK_FALSE(random_cluster.read(0, 1));
        CHECK(random_cluster.read(0, 0) == arr.symbols[0][0]);
        random_cluster.inject(spec);
        CHECK(random_cluster.failures().racks == spec.racks);
        CHECK_THROWS_AS(random_cluster.inject(FailureSpec{{{1, {0}}, {2, {0}}}}), Error);
        CHECK(random_cluster.failures().racks == spec.racks);
    }

    TEST_CASE("worked example run: 18 cross-rack bits, intra traffic excluded") {
        const auto code = configs::example1();
        std::mt19937_64 rng(2);
        const Poly m = random_message(code.field(), 7, rng);
        auto cluster = Cluster::build(code, m);
        const FailureSpec spec{{{0, {1, 2, 3}}}};
        cluster.inject(spec);
        const auto p = plan(code, spec, std::nullopt, configs::gw(2));
        const auto result = run(cluster, p);
        const auto arr = layout(code, m);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) CHECK(cluster.read(i, j) == arr.symbols[i][j]);
        CHECK(cluster.failures().empty());
        const auto s = measure(result.ledger);
        CHECK(s.cross_rack == 18);
        CHECK(s.intra_rack > 0);
        CHECK(s.cross_rack == result.report.total);
        CHECK(s.cross_rack == result.ledger.summary().cross_rack);

        const auto hidden = ledger_text(result.ledger, false);
        const auto shown = ledger_text(result.ledger, true);
        CHECK(hidden != shown);
        CHECK(last_line(hidden) == last_line(shown));
        CHECK(last_line(hidden) == "summary,cross_rack=18,intra_rack=" + std::to_string(s.intra_rack));
        CHECK(hidden.find("step1-intra") == std::string::npos);
        CHECK(shown.find("step3-intra") != std::string::npos);
    }

    TEST_CASE("no failures give an empty ledger") {
        const auto code = configs::example1();
        auto cluster = Cluster::build(code, Poly::constant(Elem{1}));
        const auto result = run(cluster, plan(code, FailureSpec{}, std::nullopt, configs::gw(2)));
        CHECK(result.ledger.messages().empty());
        CHECK(ledger_text(result.ledger, true) == "summary,cross_rack=0,intra_rack=0\n");
    }

    TEST_CASE("identical inputs give identical ledgers") {
        const auto code = configs::gf64_trace4(20);
        std::mt19937_64 a(3), b(3);
        auto c1 = Cluster::build(code, random_message(code.field(), 20, a));
        auto c2 = Cluster::build(code, random_message(code.field(), 20, b));
        const FailureSpec spec{{{1, {0, 4, 9}}}};
        c1.inject(spec);
        c2.inject(spec);
        const auto p = plan(code, spec, std::nullopt, configs::gw(2));
        CHECK(ledger_text(run(c1, p).ledger, true) == ledger_text(run(c2, p).ledger, true));
    }

    TEST_CASE("ledger invariants") {
        Ledger l;
        CHECK_THROWS_AS(l.append(Message{Phase::Step2Cross, 1, 2, {}}), Error);
        CHECK_THROWS_AS(l.append(Message{Phase::Step1Intra, 1, 2, {0}}), Error);
        l.append(Message{Phase::Step2Cross, 2, 0, {1, 0}});
        l.append(Message{Phase::Step3Intra, 1, 1, {1, 0, 1}});
        CHECK(l.summary().cross_rack == 2);
        CHECK(l.summary().intra_rack == 3);
        const Ledger copy = l;
        CHECK(copy.messages().size() == 2);
    }

    TEST_CASE("plan must match the injected failures") {
        const auto code = configs::example1();
        auto cluster = Cluster::build(code, Poly::constant(Elem{1}));
        cluster.inject(FailureSpec{{{0, {1}}}});
        const auto p = plan(code, FailureSpec{{{0, {2}}}}, std::nullopt, configs::gw(2));
        CHECK_THROWS_AS(run(cluster, p), Error);
    }
}
