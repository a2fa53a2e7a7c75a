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

#include "rackrs/repair.hpp"

#include <algorithm>
#include <string>

#include "rackrs/error.hpp"
#include "rackrs/rs_code.hpp"

namespace rackrs {

std::size_t FailureSpec::epsilon() const noexcept {
    std::size_t e = 0;
    for (const auto& [rack, nodes] : racks) e = std::max(e, nodes.size());
    return e;
}

std::size_t FailureSpec::eps(std::size_t rack) const noexcept {
    auto it = racks.find(rack);
    return it == racks.end() ? 0 : it->second.size();
}

void validate(const RackCode& code, const FailureSpec& spec) {
    for (const auto& [rack, nodes] : spec.racks) {
        if (rack >= code.nbar())
            throw Error(ErrorCode::InvalidFailure, "rack " + std::to_string(rack + 1) + " does not exist");
        if (nodes.empty())
            throw Error(ErrorCode::InvalidFailure, "rack " + std::to_string(rack + 1) + " lists no failed nodes");
        if (*nodes.rbegin() >= code.u())
            throw Error(ErrorCode::InvalidFailure,
                        "node " + std::to_string(*nodes.rbegin() + 1) + " does not exist in a rack of " +
                            std::to_string(code.u()));
    }
    if (spec.m() > code.nbar() - code.s())
        throw Error(ErrorCode::TooManyFailedRacks, std::to_string(spec.m()) + " failed racks exceed nbar - s = " +
                                                       std::to_string(code.nbar() - code.s()));
}

RtSets compute_rt(const FailureSpec& spec) {
    RtSets rt(spec.epsilon());
    for (std::size_t t = 1; t <= rt.size(); ++t)
        for (const auto& [rack, nodes] : spec.racks)
            if (nodes.size() >= t) rt[t - 1].push_back(rack);
    return rt;
}

std::string_view to_string(SchemeKind kind) noexcept {
    switch (kind) {
        case SchemeKind::GwSubfield: return "gw_subfield";
        case SchemeKind::Subspace: return "subspace";
        case SchemeKind::Naive: return "naive";
    }
    return "naive";
}

SchemeKind parse_scheme_kind(std::string_view name) {
    for (SchemeKind k : {SchemeKind::GwSubfield, SchemeKind::Subspace, SchemeKind::Naive})
        if (to_string(k) == name) return k;
    throw Error(ErrorCode::ConfigError, "unknown scheme kind '" + std::string(name) + "'");
}

std::string_view to_string(Phase phase) noexcept {
    switch (phase) {
        case Phase::Step1Intra: return "step1-intra";
        case Phase::Step2Cross: return "step2-cross";
        case Phase::Step3Intra: return "step3-intra";
    }
    return "step1-intra";
}

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::uint64_t r = 1;
    std::uint64_t base = a % p;
    for (std::uint32_t e = p - 2; e; e >>= 1) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
    }
    return static_cast<std::uint32_t>(r);
}

// Coordinates of x over F_p-independent `basis`, by elimination on digits.
std::optional<std::vector<std::uint32_t>> express(const FieldTower& field, std::span<const Elem> basis, Elem x) {
    const std::uint32_t p = field.characteristic();
    const std::size_t rows = field.degree();
    const std::size_t cols = basis.size();
    std::vector<std::vector<std::uint32_t>> a(rows, std::vector<std::uint32_t>(cols + 1));
    for (std::size_t c = 0; c < cols; ++c) {
        const auto d = field.digits(basis[c]);
        for (std::size_t r = 0; r < rows; ++r) a[r][c] = d[r];
    }
    const auto dx = field.digits(x);
    for (std::size_t r = 0; r < rows; ++r) a[r][cols] = dx[r];

    std::vector<std::size_t> pivot_row(cols);
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t piv = row;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) return std::nullopt;
        std::swap(a[piv], a[row]);
        const std::uint32_t s = inv_mod(a[row][c], p);
        for (auto& v : a[row]) v = static_cast<std::uint32_t>(std::uint64_t{v} * s % p);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || a[r][c] == 0) continue;
            const std::uint64_t f = a[r][c];
            for (std::size_t k = 0; k <= cols; ++k)
                a[r][k] = static_cast<std::uint32_t>((a[r][k] + (p - f) * a[row][k]) % p);
        }
        pivot_row[c] = row++;
    }
    for (std::size_t r = row; r < rows; ++r)
        if (a[r][cols] != 0) return std::nullopt;
    std::vector<std::uint32_t> out(cols);
    for (std::size_t c = 0; c < cols; ++c) out[c] = a[pivot_row[c]][cols];
    return out;
}

struct TraceShape {
    Poly kernel;                 // K(z), K(0) = 0
    std::vector<Elem> eta;       // one per (eta, beta) pair
    std::vector<Elem> beta;
    std::optional<SubspaceDesc> subspace;
    unsigned delta = 1;
};

TraceShape trace_shape(const FieldTower& field, std::span<const Elem> points, const SchemeConfig& config) {
    const unsigned t = field.degree();
    const std::uint32_t p = field.characteristic();
    TraceShape shape;
    if (config.kind == SchemeKind::GwSubfield) {
        const unsigned delta = config.delta;
        if (delta == 0 || t % delta != 0)
            throw Error(ErrorCode::BadSubfield, std::to_string(delta) + " does not divide " + std::to_string(t));
        for (Elem y : points)
            if (!field.in_subfield(y, delta))
                throw Error(ErrorCode::PreconditionFailed,
                            "column point " + std::to_string(y.value) + " lies outside the degree-" +
                                std::to_string(delta) + " subfield");
        std::vector<Elem> eta = config.eta;
        std::vector<Elem> beta = config.beta;
        if (eta.empty())
            for (unsigned m = 0; m < t / delta; ++m) eta.push_back(field.pow(field.generator(), m));
        if (beta.empty())
            for (unsigned w = 0; w < delta; ++w) beta.push_back(field.pow(field.subfield_generator(delta), w));
        if (eta.size() != t / delta || beta.size() != delta)
            throw Error(ErrorCode::NotABasis, "eta and beta sizes must be t/delta and delta");
        for (Elem b : beta)
            if (!field.in_subfield(b, delta)) throw Error(ErrorCode::NotABasis, "beta must lie in the subfield");
        std::vector<Elem> k(ipow(p, delta - 1) + 1, field.zero());
        for (unsigned i = 0; i < delta; ++i) k[ipow(p, i)] = field.add(k[ipow(p, i)], field.one());
        shape.kernel = Poly(std::move(k));
        for (Elem e : eta)
            for (Elem b : beta) {
                shape.eta.push_back(e);
                shape.beta.push_back(b);
            }
        shape.delta = delta;
    } else if (config.kind == SchemeKind::Subspace) {
        SubspaceDesc sub;
        if (config.subspace) {
            sub = *config.subspace;
        } else {
            if (config.sbar > t) throw Error(ErrorCode::PreconditionFailed, "sbar cannot exceed t");
            std::vector<Elem> basis;
            for (unsigned i = 0; i < config.sbar; ++i) basis.push_back(field.pow(field.generator(), i));
            sub = make_subspace(field, std::move(basis), 1);
        }
        if (sub.subfield_degree != 1)
            throw Error(ErrorCode::BadSubfield, "subspace must be given over the prime field");
        Poly k = Poly::constant(field.one());
        for (Elem u : enumerate(field, sub)) k = mul(field, k, Poly::linear(field, u));
        shape.kernel = std::move(k);
        std::vector<Elem> beta = config.beta;
        if (beta.empty())
            for (unsigned l = 0; l < t; ++l) beta.push_back(field.pow(field.generator(), l));
        if (beta.size() != t) throw Error(ErrorCode::NotABasis, "beta must have t elements");
        shape.beta = std::move(beta);
        shape.eta.assign(t, field.one());
        shape.subspace = std::move(sub);
    } else {
        throw Error(ErrorCode::PreconditionFailed, "naive is not a trace scheme");
    }
    std::vector<Elem> products;
    for (std::size_t l = 0; l < shape.eta.size(); ++l) products.push_back(field.mul(shape.eta[l], shape.beta[l]));
    if (rank_over_subfield(field, products, 1) != t)
        throw Error(ErrorCode::BasisDegenerate, "eta * beta products do not span the field over F_p");
    return shape;
}

void check_positions(std::size_t n, std::size_t target, std::span<const std::size_t> helpers) {
    if (target >= n) throw Error(ErrorCode::PreconditionFailed, "target position out of range");
    std::set<std::size_t> seen;
    for (std::size_t h : helpers) {
        if (h >= n || h == target || !seen.insert(h).second)
            throw Error(ErrorCode::PreconditionFailed, "helpers must be distinct positions other than the target");
    }
}

}  // namespace

TraceRepairScheme TraceRepairScheme::build(const FieldTower& field, std::span<const Elem> points, std::size_t s,
                                           std::size_t target, std::span<const std::size_t> helpers,
                                           const SchemeConfig& config) {
    const std::size_t n = points.size();
    check_positions(n, target, helpers);
    const TraceShape shape = trace_shape(field, points, config);
    const std::set<std::size_t> helper_set(helpers.begin(), helpers.end());

    Poly annihilator = Poly::constant(field.one());
    for (std::size_t i = 0; i < n; ++i)
        if (i != target && helper_set.count(i) == 0) annihilator = mul(field, annihilator, Poly::linear(field, points[i]));

    const std::size_t deg_g = shape.kernel.degree().value() - 1 + annihilator.degree().value();
    if (s > n || deg_g >= n - s) {
        const std::string what = "dual polynomial degree " + std::to_string(deg_g) + " is not below nbar - s = " +
                                 std::to_string(n >= s ? n - s : 0);
        if (annihilator.degree() == Degree(0)) throw Error(ErrorCode::PreconditionFailed, what);
        throw Error(ErrorCode::InsufficientHelpers, what);
    }

    const Elem ystar = points[target];
    const Poly shift({field.neg(ystar), field.one()});
    const auto nu = dual_multipliers(field, points);

    TraceRepairScheme scheme;
    scheme.kind_ = config.kind;
    scheme.target_ = target;
    const auto& kc = shape.kernel.coeffs();
    for (std::size_t l = 0; l < shape.eta.size(); ++l) {
        std::vector<Elem> pc(kc.size() - 1, field.zero());
        Elem bpow = shape.beta[l];
        for (std::size_t j = 1; j < kc.size(); ++j) {
            pc[j - 1] = field.mul(kc[j], bpow);
            bpow = field.mul(bpow, shape.beta[l]);
        }
        Poly g = mul(field, scale(field, compose(field, Poly(std::move(pc)), shift), shape.eta[l]), annihilator);
        scheme.checks_.push_back(field.mul(nu[target], eval(field, g, ystar)));
        scheme.dual_polys_.push_back(std::move(g));
    }
    if (rank_over_subfield(field, scheme.checks_, 1) != field.degree())
        throw Error(ErrorCode::BasisDegenerate, "target dual values do not span the field over F_p");
    scheme.check_dual_ = dual_basis(field, scheme.checks_, 1);

    for (std::size_t i : helpers) {
        std::vector<Elem> w;
        for (const auto& g : scheme.dual_polys_) w.push_back(field.mul(nu[i], eval(field, g, points[i])));
        HelperDownload d;
        d.position = i;
        d.multipliers = span_basis(field, w, 1);
        for (Elem v : w) {
            auto c = express(field, d.multipliers, v);
            if (!c) throw Error(ErrorCode::BasisDegenerate, "dual value outside the helper span");
            d.coeffs.push_back(std::move(*c));
        }
        scheme.downloads_.push_back(std::move(d));
    }
    return scheme;
}

std::size_t TraceRepairScheme::bandwidth() const noexcept {
    std::size_t b = 0;
    for (const auto& d : downloads_) b += d.multipliers.size();
    return b;
}

std::vector<std::uint32_t> TraceRepairScheme::payload(const FieldTower& field, std::size_t index, Elem symbol) const {
    std::vector<std::uint32_t> out;
    for (Elem g : downloads_.at(index).multipliers) out.push_back(field.trace(field.mul(g, symbol)).value);
    return out;
}

Elem TraceRepairScheme::recover(const FieldTower& field, const std::vector<std::vector<std::uint32_t>>& payloads) const {
    if (payloads.size() != downloads_.size())
        throw Error(ErrorCode::PreconditionFailed, "one payload per helper is required");
    const std::uint64_t p = field.characteristic();
    Elem out = field.zero();
    for (std::size_t l = 0; l < checks_.size(); ++l) {
        std::uint64_t acc = 0;
        for (std::size_t h = 0; h < downloads_.size(); ++h) {
            const auto& coeffs = downloads_[h].coeffs[l];
            if (payloads[h].size() != coeffs.size())
                throw Error(ErrorCode::PreconditionFailed, "payload size does not match the download plan");
            for (std::size_t w = 0; w < coeffs.size(); ++w) acc = (acc + coeffs[w] * payloads[h][w]) % p;
        }
        const Elem tl = field.from_prime(static_cast<std::uint32_t>((p - acc) % p));
        out = field.add(out, field.mul(tl, check_dual_[l]));
    }
    return out;
}

std::vector<std::size_t> trace_download_ranks(const FieldTower& field, std::span<const Elem> points,
                                              std::size_t target, std::span<const std::size_t> helpers,
                                              const SchemeConfig& config) {
    check_positions(points.size(), target, helpers);
    const TraceShape shape = trace_shape(field, points, config);
    std::vector<std::size_t> out;
    for (std::size_t i : helpers) {
        const Elem d = field.sub(points[i], points[target]);
        const Elem dinv = field.inv(d);
        std::vector<Elem> vals;
        for (std::size_t l = 0; l < shape.eta.size(); ++l) {
            const Elem z = field.mul(shape.beta[l], d);
            Elem k;
            if (shape.subspace) {
                k = linearized_eval(field, *shape.subspace, z);
            } else {
                k = field.zero();
                for (unsigned r = 0; r < shape.delta; ++r) k = field.add(k, field.frobenius(z, r));
            }
            vals.push_back(field.mul(shape.eta[l], field.mul(k, dinv)));
        }
        out.push_back(rank_over_subfield(field, vals, 1));
    }
    return out;
}

namespace {

SingleRepair run_single(const FieldTower& field, const ColumnWord& word, std::size_t target,
                        const SchemeConfig& config) {
    std::vector<std::size_t> helpers;
    for (std::size_t i = 0; i < word.symbols.size(); ++i)
        if (i != target) helpers.push_back(i);
    const auto scheme = TraceRepairScheme::build(field, word.points, word.s, target, helpers, config);
    std::vector<std::vector<std::uint32_t>> payloads;
    SingleRepair out;
    for (std::size_t h = 0; h < scheme.downloads().size(); ++h) {
        payloads.push_back(scheme.payload(field, h, word.symbols[scheme.downloads()[h].position]));
        out.downloads.emplace_back(scheme.downloads()[h].position, payloads.back().size());
        out.total += payloads.back().size();
    }
    out.symbol = scheme.recover(field, payloads);
    return out;
}

}  // namespace

SingleRepair gw_subfield_repair(const FieldTower& field, const ColumnWord& word, std::size_t target, unsigned delta) {
    SchemeConfig config;
    config.kind = SchemeKind::GwSubfield;
    config.delta = delta;
    return run_single(field, word, target, config);
}

SingleRepair subspace_repair(const FieldTower& field, const ColumnWord& word, std::size_t target,
                             const SubspaceDesc& subspace, std::vector<Elem> beta) {
    SchemeConfig config;
    config.kind = SchemeKind::Subspace;
    config.sbar = static_cast<unsigned>(subspace.basis.size());
    config.subspace = subspace;
    config.beta = std::move(beta);
    return run_single(field, word, target, config);
}

NaiveRepair naive_repair(const FieldTower& field, const ColumnWord& word, const std::set<std::size_t>& targets,
                         std::span<const std::size_t> helpers) {
    for (std::size_t h : helpers)
        if (targets.count(h) != 0) throw Error(ErrorCode::PreconditionFailed, "targets overlap the helper set");
    if (helpers.size() < word.s)
        throw Error(ErrorCode::InsufficientHelpers,
                    "naive repair needs " + std::to_string(word.s) + " helpers, got " + std::to_string(helpers.size()));
    NaiveRepair out;
    std::vector<Elem> xs;
    std::vector<Elem> ys;
    for (std::size_t r = 0; r < word.s; ++r) {
        const std::size_t h = helpers[r];
        out.used.push_back(h);
        xs.push_back(word.points.at(h));
        ys.push_back(word.symbols.at(h));
        out.total += field.degree();
    }
    const Poly g = lagrange(field, xs, ys);
    for (std::size_t i : targets) out.symbols[i] = eval(field, g, word.points.at(i));
    return out;
}

RepairPlan plan(const RackCode& code, const FailureSpec& spec, std::optional<std::vector<std::size_t>> helpers,
                const SchemeConfig& config) {
    validate(code, spec);
    RepairPlan out;
    out.spec = spec;
    out.config = config;
    if (helpers) {
        std::set<std::size_t> seen;
        for (std::size_t h : *helpers) {
            if (h >= code.nbar())
                throw Error(ErrorCode::PreconditionFailed, "helper rack " + std::to_string(h + 1) + " does not exist");
            if (spec.racks.count(h) != 0)
                throw Error(ErrorCode::PreconditionFailed, "helper rack " + std::to_string(h + 1) + " has failures");
            if (!seen.insert(h).second)
                throw Error(ErrorCode::PreconditionFailed, "helper rack " + std::to_string(h + 1) + " listed twice");
        }
        out.helpers = std::move(*helpers);
    } else {
        for (std::size_t i = 0; i < code.nbar(); ++i)
            if (spec.racks.count(i) == 0) out.helpers.push_back(i);
    }
    if (spec.empty()) return out;
    if (out.helpers.size() < code.s())
        throw Error(ErrorCode::InsufficientHelpers, std::to_string(out.helpers.size()) +
                                                        " helper racks, at least s = " + std::to_string(code.s()) +
                                                        " are required");

    std::map<std::size_t, TraceRepairScheme> cache;
    const auto rt = compute_rt(spec);
    for (std::size_t t = 1; t <= rt.size(); ++t) {
        RoundPlan round;
        round.t = t;
        round.column = code.u() - t;
        round.targets = rt[t - 1];
        const bool single = round.targets.size() == 1;
        round.kind = single ? config.kind : SchemeKind::Naive;
        round.baseline = !single && config.kind != SchemeKind::Naive;
        if (round.kind != SchemeKind::Naive) {
            const std::size_t target = round.targets.front();
            auto it = cache.find(target);
            if (it == cache.end())
                it = cache.emplace(target, TraceRepairScheme::build(code.field(), code.constants(), code.s(), target,
                                                                    out.helpers, config))
                         .first;
            round.scheme = it->second;
        }
        out.rounds.push_back(std::move(round));
    }
    return out;
}

namespace {

std::vector<std::uint32_t> symbol_payload(const FieldTower& field, Elem x) { return field.digits(x); }

}  // namespace

RepairOutcome execute_repair(const RackCode& code, const NodeReads& reads, const RepairPlan& plan,
                             const TransferSink& sink) {
    const FieldTower& field = code.field();
    const std::size_t u = code.u();
    auto emit = [&](Phase phase, std::size_t src, std::size_t dst, std::vector<std::uint32_t> payload) {
        if (sink && !payload.empty()) sink(Transfer{phase, src, dst, std::move(payload)});
    };
    auto read = [&](std::size_t rack, std::size_t node) -> Elem {
        const auto& v = reads.at(rack).at(node);
        if (!v) throw Error(ErrorCode::InvalidFailure,
                            "node " + std::to_string(node + 1) + " of rack " + std::to_string(rack + 1) +
                                " is erased but not listed as failed");
        return *v;
    };
    if (reads.size() != code.nbar()) throw Error(ErrorCode::PreconditionFailed, "reads must cover every rack");

    RepairOutcome out;
    out.report.t = field.degree();
    for (std::size_t i = 0; i < code.nbar(); ++i) {
        std::vector<Elem> row;
        for (std::size_t j = 0; j < u; ++j) {
            const auto& v = reads[i].at(j);
            row.push_back(v ? *v : field.zero());
        }
        out.restored.push_back(std::move(row));
    }
    if (plan.spec.empty()) return out;

    const std::size_t center = plan.spec.m() == 1 ? plan.spec.racks.begin()->first + 1 : 0;
    // Step 1: a helper relayer reads its rack and interpolates the residue.
    auto helper_coeff = [&](std::size_t rack, std::size_t column) {
        std::vector<Elem> ys;
        for (std::size_t j = 0; j < u; ++j) {
            ys.push_back(read(rack, j));
            emit(Phase::Step1Intra, rack + 1, rack + 1, symbol_payload(field, ys.back()));
        }
        return lagrange(field, code.rack_points(rack), ys).coeff(column);
    };

    std::map<std::size_t, std::map<std::size_t, Elem>> recovered;  // rack -> column -> e
    for (const auto& round : plan.rounds) {
        RoundReport rep;
        rep.t = round.t;
        rep.column = round.column;
        rep.targets = round.targets;
        rep.kind = round.kind;
        rep.baseline = round.baseline;
        if (round.scheme) {
            const auto& scheme = *round.scheme;
            std::vector<std::vector<std::uint32_t>> payloads;
            for (std::size_t h = 0; h < scheme.downloads().size(); ++h) {
                const std::size_t rack = scheme.downloads()[h].position;
                payloads.push_back(scheme.payload(field, h, helper_coeff(rack, round.column)));
                if (!payloads.back().empty()) {
                    rep.per_helper.emplace_back(rack, payloads.back().size());
                    rep.measured += payloads.back().size();
                }
                emit(Phase::Step2Cross, rack + 1, center, payloads.back());
            }
            recovered[scheme.target()][round.column] = scheme.recover(field, payloads);
            for (std::size_t b :
                 trace_download_ranks(field, code.constants(), scheme.target(), plan.helpers, plan.config))
                rep.predicted += b;
        } else {
            std::vector<Elem> xs;
            std::vector<Elem> ys;
            for (std::size_t r = 0; r < code.s(); ++r) {
                const std::size_t rack = plan.helpers.at(r);
                const Elem e = helper_coeff(rack, round.column);
                auto payload = symbol_payload(field, e);
                rep.per_helper.emplace_back(rack, payload.size());
                rep.measured += payload.size();
                emit(Phase::Step2Cross, rack + 1, center, std::move(payload));
                xs.push_back(code.constants()[rack]);
                ys.push_back(e);
            }
            const Poly g = lagrange(field, xs, ys);
            for (std::size_t target : round.targets)
                recovered[target][round.column] = eval(field, g, code.constants()[target]);
            rep.predicted = code.s() * field.degree();
        }
        out.report.total += rep.measured;
        out.report.predicted += rep.predicted;
        out.report.rounds.push_back(std::move(rep));
    }

    // Step 3: each failed rack solves its low coefficients from its survivors.
    for (const auto& [rack, failed] : plan.spec.racks) {
        const std::size_t eps = failed.size();
        const auto& top = recovered.at(rack);
        std::vector<Elem> xs;
        std::vector<Elem> rhs;
        for (std::size_t j = 0; j < u; ++j) {
            if (failed.count(j) != 0) continue;
            const Elem a = code.point(rack, j);
            const Elem y = read(rack, j);
            emit(Phase::Step3Intra, rack + 1, rack + 1, symbol_payload(field, y));
            Elem acc = y;
            for (const auto& [col, e] : top) acc = field.sub(acc, field.mul(e, field.pow(a, col)));
            xs.push_back(a);
            rhs.push_back(acc);
        }
        const auto low = vandermonde_solve(field, xs, rhs, 0, u - eps);
        std::vector<Elem> coeffs(u, field.zero());
        for (std::size_t j = 0; j < low.size(); ++j) coeffs[j] = low[j];
        for (const auto& [col, e] : top) coeffs[col] = e;
        const Poly fi(std::move(coeffs));
        for (std::size_t j : failed) {
            const Elem v = eval(field, fi, code.point(rack, j));
            out.restored[rack][j] = v;
            emit(Phase::Step3Intra, rack + 1, rack + 1, symbol_payload(field, v));
        }
    }
    return out;
}

RepairOutcome repair_rack(const RackArray& arr, const RepairPlan& plan) {
    NodeReads reads;
    for (std::size_t i = 0; i < arr.symbols.size(); ++i) {
        std::vector<std::optional<Elem>> row(arr.symbols[i].begin(), arr.symbols[i].end());
        auto it = plan.spec.racks.find(i);
        if (it != plan.spec.racks.end())
            for (std::size_t j : it->second) row.at(j) = std::nullopt;
        reads.push_back(std::move(row));
    }
    return execute_repair(arr.code, reads, plan);
}

}  // namespace rackrs
