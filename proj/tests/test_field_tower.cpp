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

#include "oracles.hpp"
#include "rackrs/error.hpp"
#include "rackrs/field_tower.hpp"

using namespace rackrs;

namespace {

FieldTower gf16() { return FieldTower::build(2, 4, {1, 1, 0, 0, 1}); }

template <typename F>
ErrorCode code_of(F f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::ConfigError;
}

}  // namespace

TEST_SUITE("field_tower") {
    TEST_CASE("GF(16) from x^4 + x + 1 has generator x and the expected power table") {
        const auto f = gf16();
        CHECK(f.size() == 16);
        CHECK(f.generator() == Elem{2});
        const std::uint32_t powers[] = {1, 2, 4, 8, 3, 6, 12, 11, 5, 10, 7, 14, 15, 13, 9};
        for (unsigned k = 0; k < 15; ++k) CHECK(f.exp(k) == Elem{powers[k]});
        CHECK(f.mul(Elem{2}, Elem{8}) == Elem{3});
        CHECK(f.subfield_generator(2) == Elem{6});
    }

    TEST_CASE("degree-one field and identities") {
        const auto f = FieldTower::build(2, 1, {0, 1});
        CHECK(f.size() == 2);
        CHECK(f.inv(f.one()) == f.one());
        const auto g = gf16();
        for (std::uint32_t a = 0; a < 16; ++a) CHECK(g.add(Elem{a}, Elem{a}) == g.zero());
        CHECK(g.inv(g.one()) == g.one());
    }

    TEST_CASE("construction errors") {
        CHECK(code_of([] { FieldTower::build(2, 4, {1, 0, 1, 0, 1}); }) == ErrorCode::ReducibleModulus);
        CHECK(code_of([] { FieldTower::build(4, 2, {1, 1, 1}); }) == ErrorCode::NotPrime);
        CHECK(code_of([] { FieldTower::build(2, 3, {1, 1, 0, 0}); }) == ErrorCode::BadModulus);
        const auto f = gf16();
        CHECK(code_of([&] { f.inv(f.zero()); }) == ErrorCode::DivideByZero);
        CHECK(code_of([&] { f.div(f.one(), f.zero()); }) == ErrorCode::DivideByZero);
        CHECK(code_of([&] { f.element(16); }) == ErrorCode::LevelMismatch);
        CHECK(code_of([&] { f.mul(Elem{16}, f.one()); }) == ErrorCode::LevelMismatch);
        CHECK(code_of([&] { f.trace(f.one(), 3); }) == ErrorCode::BadSubfield);
    }

    TEST_CASE("exhaustive arithmetic matches the digit-vector reference") {
        for (auto [p, t] : {std::pair{2u, 4u}, {3u, 3u}, {5u, 2u}, {2u, 6u}}) {
            const auto f = FieldTower::standard(p, t);
            const auto ref = oracle::reference_for(f);
            for (std::uint32_t a = 0; a < f.size(); ++a) {
                for (std::uint32_t b = 0; b < f.size(); ++b) {
                    REQUIRE(f.mul(Elem{a}, Elem{b}).value == ref.mul(a, b));
                    REQUIRE(f.add(Elem{a}, Elem{b}).value == ref.add(a, b));
                }
                if (a) REQUIRE(f.mul(Elem{a}, f.inv(Elem{a})) == f.one());
            }
        }
    }

    TEST_CASE("table and schoolbook multiplication agree") {
        const auto tab = FieldTower::standard(2, 8, MulStrategy::Tables);
        const auto school = FieldTower::standard(2, 8, MulStrategy::Schoolbook);
        CHECK(tab.uses_tables());
        CHECK_FALSE(school.uses_tables());
        std::mt19937_64 rng(11);
        for (int i = 0; i < 5000; ++i) {
            const Elem a = oracle::random_elem(tab, rng), b = oracle::random_elem(tab, rng);
            REQUIRE(tab.mul(a, b) == school.mul(a, b));
            REQUIRE(tab.pow(a, i) == school.pow(a, i));
            if (b != tab.zero()) REQUIRE(tab.div(a, b) == school.div(a, b));
        }
        const auto big = FieldTower::standard(2, 18);
        CHECK_FALSE(big.uses_tables());
        const Elem g = big.generator();
        CHECK(big.pow(g, big.size() - 1) == big.one());
    }

    TEST_CASE("traces land in the subfield and match the reference") {
        const auto f = FieldTower::standard(2, 6);
        const auto ref = oracle::reference_for(f);
        for (unsigned delta : {1u, 2u, 3u, 6u}) {
            for (std::uint32_t x = 0; x < f.size(); ++x) {
                const Elem tr = f.trace(Elem{x}, delta);
                REQUIRE(tr.value == ref.trace(x, delta));
                REQUIRE(f.in_subfield(tr, delta));
            }
            CHECK(f.subfield_elements(delta).size() == (1u << delta));
        }
        std::mt19937_64 rng(5);
        for (int i = 0; i < 200; ++i) {
            const Elem a = oracle::random_elem(f, rng), b = oracle::random_elem(f, rng);
            CHECK(f.trace(f.add(a, b)) == f.add(f.trace(a), f.trace(b)));
        }
        CHECK(f.subfield_degrees() == std::vector<unsigned>{1, 2, 3, 6});
    }

    TEST_CASE("dual bases satisfy the trace orthogonality relations") {
        for (auto [p, t, delta] : {std::tuple{2u, 4u, 1u}, {2u, 6u, 2u}, {3u, 4u, 2u}, {5u, 3u, 1u}}) {
            const auto f = FieldTower::standard(p, t);
            const unsigned n = t / delta;
            std::vector<Elem> basis;
            for (unsigned i = 0; i < n; ++i) basis.push_back(f.pow(f.generator(), i));
            const auto dual = dual_basis(f, basis, delta);
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = 0; j < n; ++j)
                    CHECK(f.trace(f.mul(basis[i], dual[j]), delta) == (i == j ? f.one() : f.zero()));
            std::mt19937_64 rng(p * 100 + t);
            for (int k = 0; k < 50; ++k) {
                const Elem x = oracle::random_elem(f, rng);
                const auto coords = expand(f, x, basis, delta);
                CHECK(reassemble(f, coords, dual) == x);
            }
        }
        const auto f = gf16();
        const std::vector<Elem> dependent{Elem{1}, Elem{2}, Elem{3}, Elem{1}};
        CHECK(code_of([&] { dual_basis(f, dependent); }) == ErrorCode::NotABasis);
    }

    TEST_CASE("subfield rank matches brute-force span closure") {
        std::mt19937_64 rng(99);
        for (auto [p, t] : {std::pair{2u, 6u}, {3u, 4u}, {2u, 4u}}) {
            const auto f = FieldTower::standard(p, t);
            const auto ref = oracle::reference_for(f);
            for (unsigned delta : f.subfield_degrees()) {
                for (int trial = 0; trial < 40; ++trial) {
                    std::vector<Elem> elems;
                    std::vector<std::uint32_t> raw;
                    const std::size_t count = 1 + rng() % (t / delta + 1);
                    for (std::size_t i = 0; i < count; ++i) {
                        elems.push_back(oracle::random_elem(f, rng));
                        raw.push_back(elems.back().value);
                    }
                    REQUIRE(rank_over_subfield(f, elems, delta) == ref.span_dimension(raw, delta));
                    const auto basis = span_basis(f, elems, delta);
                    std::vector<std::uint32_t> braw;
                    for (Elem b : basis) braw.push_back(b.value);
                    REQUIRE(ref.span_dimension(braw, delta) == basis.size());
                }
            }
        }
    }

    TEST_CASE("subspaces and linearized polynomials") {
        const auto f = FieldTower::standard(2, 8);
        const auto u = make_subspace(f, {Elem{1}, Elem{2}, Elem{4}});
        CHECK(u.cardinality == 8);
        const auto all = enumerate(f, u);
        CHECK(std::set<Elem>(all.begin(), all.end()).size() == 8);
        for (Elem x : all) CHECK(linearized_eval(f, u, x) == f.zero());
        std::mt19937_64 rng(3);
        for (int i = 0; i < 100; ++i) {
            const Elem a = oracle::random_elem(f, rng), b = oracle::random_elem(f, rng);
            CHECK(linearized_eval(f, u, f.add(a, b)) == f.add(linearized_eval(f, u, a), linearized_eval(f, u, b)));
        }
        CHECK(code_of([&] { make_subspace(f, {Elem{1}, Elem{2}, Elem{3}}); }) == ErrorCode::NotABasis);
        const auto g = FieldTower::standard(2, 4);
        const auto over4 = make_subspace(g, {Elem{1}}, 2);
        CHECK(over4.cardinality == 4);
    }

    TEST_CASE("matrix inversion and solving") {
        const auto f = FieldTower::standard(3, 3);
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 30; ++trial) {
            const std::size_t n = 1 + rng() % 5;
            Matrix a(n, std::vector<Elem>(n));
            for (auto& row : a)
                for (auto& x : row) x = oracle::random_elem(f, rng);
            const auto inv = invert(f, a);
            if (!inv) continue;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    Elem acc = f.zero();
                    for (std::size_t k = 0; k < n; ++k) acc = f.add(acc, f.mul(a[i][k], (*inv)[k][j]));
                    CHECK(acc == (i == j ? f.one() : f.zero()));
                }
            std::vector<Elem> rhs(n);
            for (auto& x : rhs) x = oracle::random_elem(f, rng);
            const auto sol = solve(f, a, rhs);
            REQUIRE(sol);
            for (std::size_t i = 0; i < n; ++i) {
                Elem acc = f.zero();
                for (std::size_t k = 0; k < n; ++k) acc = f.add(acc, f.mul(a[i][k], (*sol)[k]));
                CHECK(acc == rhs[i]);
            }
        }
        const Elem two = f.add(f.one(), f.one());
        Matrix singular{{f.one(), Elem{5}}, {two, f.mul(two, Elem{5})}};
        CHECK_FALSE(invert(f, singular));
    }

    TEST_CASE("shipped moduli are primitive") {
        for (const auto& e : modulus_table()) {
            if (e.t < 2) continue;
            const auto f = FieldTower::build(e.p, e.t, e.modulus);
            if (f.size() > 4096) continue;
            const Elem x{e.p};
            std::uint32_t order = 1;
            for (Elem y = x; y != f.one(); y = f.mul(y, x)) ++order;
            CHECK(order == f.size() - 1);
        }
        CHECK(FieldTower::standard(2, 4).modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
    }

    TEST_CASE("digits round-trip and ordering key") {
        const auto f = FieldTower::standard(5, 3);
        for (std::uint32_t v = 0; v < f.size(); ++v) CHECK(f.from_digits(f.digits(Elem{v})) == Elem{v});
        const auto g = gf16();
        CHECK(g.order_key(g.zero()) == 0);
        CHECK(g.order_key(g.one()) == 1);
        CHECK(g.order_key(Elem{6}) == 6);
        CHECK(g.format_power(Elem{6}) == "γ^5");
        CHECK(g.format_power(Elem{2}) == "γ");
    }
}
