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

#ifndef RACKRS_REPAIR_HPP
#define RACKRS_REPAIR_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string_view>
#include <vector>

#include "rackrs/field_tower.hpp"
#include "rackrs/poly.hpp"
#include "rackrs/predict.hpp"
#include "rackrs/rack_code.hpp"

namespace rackrs {

// ---------------------------------------------------------------------------
// Failures

/// Failed nodes keyed by rack. Rack and node indices are zero-based.
struct FailureSpec {
    std::map<std::size_t, std::set<std::size_t>> racks;

    bool empty() const noexcept { return racks.empty(); }
    /// Number of failed racks.
    std::size_t m() const noexcept { return racks.size(); }
    /// Largest per-rack failure count.
    std::size_t epsilon() const noexcept;
    std::size_t eps(std::size_t rack) const noexcept;
};

/// INVALID_FAILURE for out-of-range or empty entries, TOO_MANY_FAILED_RACKS
/// when m > nbar - s.
void validate(const RackCode& code, const FailureSpec& spec);

/// rt[t - 1] = racks with at least t failures, ascending.
using RtSets = std::vector<std::vector<std::size_t>>;
RtSets compute_rt(const FailureSpec& spec);

// ---------------------------------------------------------------------------
// Single-column schemes

enum class SchemeKind { GwSubfield, Subspace, Naive };

std::string_view to_string(SchemeKind kind) noexcept;
SchemeKind parse_scheme_kind(std::string_view name);

struct SchemeConfig {
    SchemeKind kind = SchemeKind::GwSubfield;
    unsigned delta = 1;
    unsigned sbar = 0;
    /// Empty vectors select the defaults: eta = powers of the generator, beta =
    /// powers of the degree-delta generator (gw) or of the generator (subspace).
    std::vector<Elem> eta;
    std::vector<Elem> beta;
    /// Defaults to the span of 1, g, ..., g^(sbar-1) over the prime field.
    std::optional<SubspaceDesc> subspace;
};

/// What one helper sends: Tr(gamma_w * e_i) for each multiplier gamma_w.
struct HelperDownload {
    std::size_t position = 0;
    std::vector<Elem> multipliers;
    /// coeffs[l][w] expresses the l-th dual value of this helper over the multipliers.
    std::vector<std::vector<std::uint32_t>> coeffs;
};

/// Trace repair of one erased position of a column word.
///
/// The dual polynomials are G_l(x) = eta * P_l(x - y*) * A(x), where
/// P_l(z) = K(beta * z) / z for a kernel K with K(0) = 0 and A vanishes on
/// every position that is neither the target nor a helper.
class TraceRepairScheme {
   public:
    static TraceRepairScheme build(const FieldTower& field, std::span<const Elem> points, std::size_t s,
                                   std::size_t target, std::span<const std::size_t> helpers,
                                   const SchemeConfig& config);

    SchemeKind kind() const noexcept { return kind_; }
    std::size_t target() const noexcept { return target_; }
    const std::vector<Poly>& dual_polys() const noexcept { return dual_polys_; }
    /// The target's dual values c_l; an F_p basis of the field.
    const std::vector<Elem>& checks() const noexcept { return checks_; }
    const std::vector<HelperDownload>& downloads() const noexcept { return downloads_; }
    std::size_t bandwidth() const noexcept;

    /// Sub-symbols sent by downloads()[index] when it stores `symbol`.
    std::vector<std::uint32_t> payload(const FieldTower& field, std::size_t index, Elem symbol) const;
    /// payloads[index] must come from payload(index, ...).
    Elem recover(const FieldTower& field, const std::vector<std::vector<std::uint32_t>>& payloads) const;

   private:
    SchemeKind kind_ = SchemeKind::GwSubfield;
    std::size_t target_ = 0;
    std::vector<Poly> dual_polys_;
    std::vector<Elem> checks_;
    std::vector<Elem> check_dual_;
    std::vector<HelperDownload> downloads_;
};

/// Per-helper download counts from the closed-form dual values, computed
/// without the polynomial machinery of TraceRepairScheme.
std::vector<std::size_t> trace_download_ranks(const FieldTower& field, std::span<const Elem> points,
                                              std::size_t target, std::span<const std::size_t> helpers,
                                              const SchemeConfig& config);

struct SingleRepair {
    Elem symbol;
    /// (position, sub-symbols) per helper.
    std::vector<std::pair<std::size_t, std::size_t>> downloads;
    std::size_t total = 0;
};

/// Uses every other position as a helper; the target's own entry is ignored.
SingleRepair gw_subfield_repair(const FieldTower& field, const ColumnWord& word, std::size_t target, unsigned delta);
SingleRepair subspace_repair(const FieldTower& field, const ColumnWord& word, std::size_t target,
                             const SubspaceDesc& subspace, std::vector<Elem> beta = {});

struct NaiveRepair {
    std::map<std::size_t, Elem> symbols;
    std::vector<std::size_t> used;
    std::size_t total = 0;
};

/// Interpolates from the first s entries of `helpers`; each sends t sub-symbols.
NaiveRepair naive_repair(const FieldTower& field, const ColumnWord& word, const std::set<std::size_t>& targets,
                         std::span<const std::size_t> helpers);

// ---------------------------------------------------------------------------
// Rack-level orchestration

struct RoundPlan {
    std::size_t t = 0;
    std::size_t column = 0;
    std::vector<std::size_t> targets;
    SchemeKind kind = SchemeKind::Naive;
    /// Set when multiple targets force the naive scheme.
    bool baseline = false;
    std::optional<TraceRepairScheme> scheme;
};

struct RepairPlan {
    FailureSpec spec;
    std::vector<std::size_t> helpers;
    SchemeConfig config;
    std::vector<RoundPlan> rounds;
};

/// `helpers` defaults to every rack without failures.
RepairPlan plan(const RackCode& code, const FailureSpec& spec, std::optional<std::vector<std::size_t>> helpers,
                const SchemeConfig& config);

enum class Phase { Step1Intra, Step2Cross, Step3Intra };
std::string_view to_string(Phase phase) noexcept;

/// Racks are one-based here; 0 is the repair-center pseudo-rack.
struct Transfer {
    Phase phase = Phase::Step1Intra;
    std::size_t src = 0;
    std::size_t dst = 0;
    std::vector<std::uint32_t> payload;
};
using TransferSink = std::function<void(const Transfer&)>;

struct RoundReport {
    std::size_t t = 0;
    std::size_t column = 0;
    std::vector<std::size_t> targets;
    SchemeKind kind = SchemeKind::Naive;
    bool baseline = false;
    /// (rack, sub-symbols) for each cross-rack download.
    std::vector<std::pair<std::size_t, std::size_t>> per_helper;
    std::size_t measured = 0;
    std::size_t predicted = 0;
};

struct BandwidthReport {
    std::vector<RoundReport> rounds;
    std::size_t total = 0;
    std::size_t predicted = 0;
    unsigned t = 1;

    bool match() const noexcept { return total == predicted; }
    Rational symbol_equivalents() const { return Rational(static_cast<std::int64_t>(total), t); }
};

/// Node reads; nullopt marks an erased node.
using NodeReads = std::vector<std::vector<std::optional<Elem>>>;

struct RepairOutcome {
    SymbolMatrix restored;
    BandwidthReport report;
};

/// Runs Steps 1-3 of every round, reporting each transfer to `sink`.
RepairOutcome execute_repair(const RackCode& code, const NodeReads& reads, const RepairPlan& plan,
                             const TransferSink& sink = {});

/// Erases the nodes of plan.spec from `arr` and repairs them.
RepairOutcome repair_rack(const RackArray& arr, const RepairPlan& plan);

}  // namespace rackrs

#endif  // RACKRS_REPAIR_HPP
