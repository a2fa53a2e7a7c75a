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

#include "rackrs/good_poly.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rackrs/error.hpp"

namespace rackrs {

std::string_view to_string(GoodFamily family) noexcept {
    switch (family) {
        case GoodFamily::Power: return "power";
        case GoodFamily::Additive: return "additive";
        case GoodFamily::Composite: return "composite";
        case GoodFamily::Custom: return "custom";
    }
    return "custom";
}

namespace {

void sort_groups(const FieldTower& field, std::vector<RackGroup>& groups) {
    auto by_key = [&](Elem a, Elem b) { return field.order_key(a) < field.order_key(b); };
    for (auto& g : groups) std::sort(g.points.begin(), g.points.end(), by_key);
    std::sort(groups.begin(), groups.end(),
              [&](const RackGroup& a, const RackGroup& b) { return by_key(a.constant, b.constant); });
}

// Fibres of h over the whole field that have exactly u points, discovered
// by the smallest packed element not yet covered; the first nbar are kept.
std::vector<RackGroup> complete_classes(const FieldTower& field, const Poly& h, std::size_t u,
                                        std::optional<std::size_t> nbar) {
    std::map<Elem, std::vector<Elem>> fibres;
    std::vector<Elem> value_of(field.size());
    for (std::uint32_t x = 0; x < field.size(); ++x) {
        const Elem y = eval(field, h, Elem{x});
        value_of[x] = y;
        fibres[y].push_back(Elem{x});
    }
    std::vector<RackGroup> out;
    std::set<Elem> taken;
    for (std::uint32_t x = 0; x < field.size(); ++x) {
        if (nbar && out.size() == *nbar) break;
        const Elem y = value_of[x];
        if (taken.count(y) != 0) continue;
        taken.insert(y);
        auto& members = fibres[y];
        if (members.size() == u) out.push_back(RackGroup{members, y});
    }
    if (nbar && out.size() < *nbar)
        throw Error(ErrorCode::InsufficientClasses, "only " + std::to_string(out.size()) +
                                                        " complete classes of size " + std::to_string(u) +
                                                        ", requested " + std::to_string(*nbar));
    if (out.empty()) throw Error(ErrorCode::InsufficientClasses, "no complete class of size " + std::to_string(u));
    sort_groups(field, out);
    return out;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// sum theta_i x^(p^(stride i))
Poly linearized(const FieldTower& field, const std::vector<Elem>& theta, unsigned stride) {
    const std::uint64_t top = ipow(field.characteristic(), stride * static_cast<unsigned>(theta.size() - 1));
    std::vector<Elem> c(top + 1, field.zero());
    for (std::size_t i = 0; i < theta.size(); ++i)
        c[ipow(field.characteristic(), stride * static_cast<unsigned>(i))] = theta[i];
    return Poly(std::move(c));
}

std::vector<Elem> kernel(const FieldTower& field, const Poly& h) {
    std::vector<Elem> out;
    for (std::uint32_t x = 0; x < field.size(); ++x)
        if (eval(field, h, Elem{x}) == field.zero()) out.push_back(Elem{x});
    return out;
}

void check_theta(const FieldTower& field, const std::vector<Elem>& theta) {
    if (theta.empty()) throw Error(ErrorCode::PreconditionFailed, "theta must be non-empty");
    for (Elem c : theta)
        if (!field.contains(c)) throw Error(ErrorCode::LevelMismatch, "theta coefficient outside the field");
    if (theta.front() == field.zero() || theta.back() == field.zero())
        throw Error(ErrorCode::PreconditionFailed, "first and last theta coefficients must be nonzero");
}

}  // namespace

GoodPolynomial make_power(const FieldTower& field, unsigned m, std::optional<std::size_t> nbar) {
    if (m == 0 || (field.size() - 1) % m != 0)
        throw Error(ErrorCode::OrderNotDividing,
                    std::to_string(m) + " does not divide " + std::to_string(field.size() - 1));
    GoodPolynomial gp;
    gp.family = GoodFamily::Power;
    gp.m = m;
    gp.h = Poly::monomial(field.one(), m);
    gp.groups = complete_classes(field, gp.h, m, nbar);
    validate(field, gp);
    return gp;
}

GoodPolynomial make_additive(const FieldTower& field, std::vector<Elem> theta, std::optional<std::size_t> nbar) {
    check_theta(field, theta);
    const unsigned a = static_cast<unsigned>(theta.size() - 1);
    if (a > field.degree()) throw Error(ErrorCode::WrongKernelSize, "kernel cannot exceed the field");
    GoodPolynomial gp;
    gp.family = GoodFamily::Additive;
    gp.a = a;
    gp.h = linearized(field, theta, 1);
    gp.theta = std::move(theta);
    const auto ker = kernel(field, gp.h);
    const std::uint64_t want = ipow(field.characteristic(), a);
    if (ker.size() != want)
        throw Error(ErrorCode::WrongKernelSize,
                    "kernel has " + std::to_string(ker.size()) + " elements, expected " + std::to_string(want));
    gp.groups = complete_classes(field, gp.h, want, nbar);
    validate(field, gp);
    return gp;
}

GoodPolynomial make_composite(const FieldTower& field, std::vector<Elem> theta, unsigned m, unsigned e,
                              std::optional<std::size_t> nbar) {
    if (e == 0 || field.degree() % e != 0)
        throw Error(ErrorCode::BadSubfield, std::to_string(e) + " does not divide " + std::to_string(field.degree()));
    const std::uint64_t sub = ipow(field.characteristic(), e);
    if (m == 0 || (sub - 1) % m != 0)
        throw Error(ErrorCode::OrderNotDividing, std::to_string(m) + " does not divide " + std::to_string(sub - 1));
    Elem sum = field.zero();
    for (Elem c : theta) sum = field.add(sum, field.element(c.value));
    if (sum != field.zero()) throw Error(ErrorCode::CoeffSumNonzero, "theta coefficients must sum to zero");
    check_theta(field, theta);

    const unsigned a = e * static_cast<unsigned>(theta.size() - 1);
    if (a > field.degree()) throw Error(ErrorCode::WrongKernelSize, "kernel cannot exceed the field");
    const Poly inner = linearized(field, theta, e);
    const auto ker = kernel(field, inner);
    const std::uint64_t want = ipow(field.characteristic(), a);
    if (ker.size() != want)
        throw Error(ErrorCode::WrongKernelSize,
                    "inner kernel has " + std::to_string(ker.size()) + " elements, expected " + std::to_string(want));
    const std::set<Elem> kset(ker.begin(), ker.end());
    for (Elem c : field.subfield_elements(e))
        for (Elem v : ker)
            if (kset.count(field.mul(c, v)) == 0)
                throw Error(ErrorCode::ClosureFailure, "inner kernel is not closed under GF(p^e) scaling");

    Poly h = Poly::constant(field.one());
    for (unsigned i = 0; i < m; ++i) h = mul(field, h, inner);

    GoodPolynomial gp;
    gp.family = GoodFamily::Composite;
    gp.m = m;
    gp.e = e;
    gp.a = a;
    gp.theta = std::move(theta);
    gp.h = std::move(h);
    gp.groups = complete_classes(field, gp.h, static_cast<std::size_t>(m) * want, nbar);
    validate(field, gp);
    return gp;
}

std::vector<RackGroup> build_partition(const FieldTower& field, const Poly& h, std::span<const Elem> points) {
    if (h.degree() < Degree(1)) throw Error(ErrorCode::NotGoodOnSet, "h must have positive degree");
    const std::size_t u = h.degree().value();
    if (points.size() % u != 0)
        throw Error(ErrorCode::NotGoodOnSet, "point count is not a multiple of deg(h)");
    std::map<Elem, std::vector<Elem>> fibres;
    for (Elem x : points) fibres[eval(field, h, x)].push_back(x);
    std::vector<RackGroup> out;
    for (auto& [y, members] : fibres) {
        if (members.size() != u)
            throw Error(ErrorCode::NotGoodOnSet, "h takes value " + std::to_string(y.value) + " on " +
                                                     std::to_string(members.size()) + " points, expected " +
                                                     std::to_string(u));
        out.push_back(RackGroup{std::move(members), y});
    }
    sort_groups(field, out);
    return out;
}

void validate(const FieldTower& field, const GoodPolynomial& gp) {
    if (gp.h.degree() < Degree(1)) throw Error(ErrorCode::NotGoodOnSet, "h must have positive degree");
    const std::size_t u = gp.u();
    std::set<Elem> constants;
    std::set<Elem> covered;
    for (const auto& g : gp.groups) {
        if (g.points.size() != u) throw Error(ErrorCode::NotGoodOnSet, "group size differs from deg(h)");
        if (!constants.insert(g.constant).second)
            throw Error(ErrorCode::DuplicateConstants, "two groups share the constant " + std::to_string(g.constant.value));
        for (Elem x : g.points) {
            if (eval(field, gp.h, x) != g.constant)
                throw Error(ErrorCode::NotGoodOnSet, "h is not constant on a group");
            if (!covered.insert(x).second) throw Error(ErrorCode::NotGoodOnSet, "groups overlap");
        }
    }
}

std::vector<Elem> subspace_theta(const FieldTower& field, const SubspaceDesc& subspace) {
    if (subspace.subfield_degree != 1)
        throw Error(ErrorCode::BadSubfield, "subspace must be given over the prime field");
    Poly l = Poly::constant(field.one());
    for (Elem u : enumerate(field, subspace)) l = mul(field, l, Poly::linear(field, u));
    std::vector<Elem> theta;
    for (std::size_t i = 0; i <= subspace.basis.size(); ++i)
        theta.push_back(l.coeff(ipow(field.characteristic(), static_cast<unsigned>(i))));
    return theta;
}

}  // namespace rackrs
