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

#include "rackrs/rs_code.hpp"

#include <set>

#include "rackrs/error.hpp"

namespace rackrs {

CodeParams make_code_params(const FieldTower& field, std::size_t k, std::vector<Elem> points) {
    const std::size_t n = points.size();
    if (k < 1 || k >= n || n > field.size())
        throw Error(ErrorCode::PreconditionFailed,
                    "need 1 <= k < n <= field size (k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
    std::set<Elem> seen;
    for (Elem a : points) {
        if (!field.contains(a)) throw Error(ErrorCode::LevelMismatch, "evaluation point outside the field");
        if (!seen.insert(a).second) throw Error(ErrorCode::DuplicatePoint, "evaluation points must be distinct");
    }
    return CodeParams{n, k, std::move(points)};
}

Codeword encode(const FieldTower& field, const Poly& f, const CodeParams& params) {
    if (!degree_below(f, params.k))
        throw Error(ErrorCode::PreconditionFailed, "message polynomial degree must be < k");
    Codeword out;
    out.reserve(params.n);
    for (Elem a : params.points) out.push_back(eval(field, f, a));
    return out;
}

std::vector<Elem> dual_multipliers(const FieldTower& field, std::span<const Elem> points) {
    std::vector<Elem> nu(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        Elem prod = field.one();
        for (std::size_t j = 0; j < points.size(); ++j)
            if (j != i) prod = field.mul(prod, field.sub(points[i], points[j]));
        nu[i] = field.inv(prod);
    }
    return nu;
}

Codeword dual_word(const FieldTower& field, const Poly& g, const CodeParams& params) {
    if (!degree_below(g, params.n - params.k))
        throw Error(ErrorCode::PreconditionFailed, "dual polynomial degree must be < n - k");
    const auto nu = dual_multipliers(field, params.points);
    Codeword out(params.n);
    for (std::size_t i = 0; i < params.n; ++i) out[i] = field.mul(nu[i], eval(field, g, params.points[i]));
    return out;
}

Elem inner_product(const FieldTower& field, std::span<const Elem> a, std::span<const Elem> b) {
    Elem acc = field.zero();
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) acc = field.add(acc, field.mul(a[i], b[i]));
    return acc;
}

Poly erasure_decode(const FieldTower& field, std::span<const std::optional<Elem>> word, const CodeParams& params) {
    std::vector<Elem> xs, ys;
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (!word[i]) continue;
        if (xs.size() < params.k) {
            xs.push_back(params.points[i]);
            ys.push_back(*word[i]);
        } else {
            rest.push_back(i);
        }
    }
    if (xs.size() < params.k)
        throw Error(ErrorCode::TooManyErasures,
                    std::to_string(xs.size()) + " survivors, need " + std::to_string(params.k));
    Poly f = lagrange(field, xs, ys);
    for (std::size_t i : rest)
        if (eval(field, f, params.points[i]) != *word[i])
            throw Error(ErrorCode::Inconsistent, "survivor " + std::to_string(i) + " disagrees with interpolation");
    return f;
}

}  // namespace rackrs
