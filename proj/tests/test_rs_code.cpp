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

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "rackrs/error.hpp"
#include "rackrs/rs_code.hpp"

using namespace rackrs;

namespace {

Poly random_message(const FieldTower& f, std::size_t k, std::mt19937_64& rng) {
    std::vector<Elem> c(k);
    for (auto& x : c) x = oracle::random_elem(f, rng);
    return Poly(std::move(c));
}

CodeParams full_field(const FieldTower& f, std::size_t k) {
    std::vector<Elem> pts;
    for (std::uint32_t v = 0; v < f.size(); ++v) pts.push_back(Elem{v});
    return make_code_params(f, k, std::move(pts));
}

}  // namespace

TEST_SUITE("rs_code") {
    TEST_CASE("erasure decoding inverts encoding") {
        const auto f = FieldTower::standard(2, 5);
        std::mt19937_64 rng(1);
        for (int trial = 0; trial < 1000; ++trial) {
            const std::size_t k = 1 + rng() % 20;
            const auto params = full_field(f, k);
            const Poly m = random_message(f, k, rng);
            const Codeword c = encode(f, m, params);
            std::vector<std::optional<Elem>> w(c.begin(), c.end());
            const std::size_t erase = rng() % (params.n - k + 1);
            std::vector<std::size_t> idx(params.n);
            std::iota(idx.begin(), idx.end(), 0);
            std::shuffle(idx.begin(), idx.end(), rng);
            for (std::size_t i = 0; i < erase; ++i) w[idx[i]] = std::nullopt;
            REQUIRE(erasure_decode(f, w, params) == m);
        }
    }

    TEST_CASE("MDS: any k positions determine the codeword") {
        const auto f = FieldTower::standard(3, 3);
        std::mt19937_64 rng(2);
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t k = 1 + rng() % 10;
            const auto params = full_field(f, k);
            const Codeword c = encode(f, random_message(f, k, rng), params);
            std::vector<std::size_t> idx(params.n);
            std::iota(idx.begin(), idx.end(), 0);
            std::shuffle(idx.begin(), idx.end(), rng);
            std::vector<Elem> xs, ys;
            for (std::size_t i = 0; i < k; ++i) {
                xs.push_back(params.points[idx[i]]);
                ys.push_back(c[idx[i]]);
            }
            CHECK(encode(f, lagrange(f, xs, ys), params) == c);
        }
    }

    TEST_CASE("dual words are orthogonal to codewords") {
        const auto f = FieldTower::standard(2, 3);
        const auto ref = oracle::reference_for(f);
        for (std::size_t k = 1; k < 8; ++k) {
            const auto params = full_field(f, k);
            const auto nu = dual_multipliers(f, params.points);
            for (std::size_t i = 0; i < params.n; ++i) {
                std::uint32_t prod = 1;
                for (std::size_t j = 0; j < params.n; ++j)
                    if (j != i) prod = ref.mul(prod, ref.add(params.points[i].value, params.points[j].value));
                CHECK(nu[i].value == ref.inv(prod));
            }
            for (std::uint32_t mono = 0; mono < k; ++mono)
                for (std::uint32_t g = 0; g < params.n - k; ++g) {
                    const auto c = encode(f, Poly::monomial(f.one(), mono), params);
                    const auto d = dual_word(f, Poly::monomial(f.one(), g), params);
                    CHECK(inner_product(f, c, d) == f.zero());
                }
        }
    }

    TEST_CASE("decoder errors") {
        const auto f = FieldTower::standard(2, 4);
        const auto params = full_field(f, 8);
        std::mt19937_64 rng(3);
        const Codeword c = encode(f, random_message(f, 8, rng), params);
        std::vector<std::optional<Elem>> w(c.begin(), c.end());
        for (std::size_t i = 0; i < 9; ++i) w[i] = std::nullopt;
        try {
            erasure_decode(f, w, params);
            FAIL("expected TOO_MANY_ERASURES");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::TooManyErasures);
        }
        std::vector<std::optional<Elem>> bad(c.begin(), c.end());
        bad[15] = f.add(*bad[15], f.one());
        try {
            erasure_decode(f, bad, params);
            FAIL("expected INCONSISTENT");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::Inconsistent);
        }
        try {
            make_code_params(f, 3, {Elem{1}, Elem{1}, Elem{2}, Elem{3}});
            FAIL("expected DUPLICATE_POINT");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::DuplicatePoint);
        }
    }
}
