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

#ifndef RACKRS_SIMULATOR_HPP
#define RACKRS_SIMULATOR_HPP

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <ostream>
#include <vector>

#include "rackrs/rack_code.hpp"
#include "rackrs/repair.hpp"

namespace rackrs {

/// One exchange between relayers. Racks are one-based, 0 is the repair center.
struct Message {
    Phase phase = Phase::Step1Intra;
    std::size_t src = 0;
    std::size_t dst = 0;
    std::vector<std::uint32_t> payload;

    std::size_t size() const noexcept { return payload.size(); }
    bool cross_rack() const noexcept { return src != dst; }
};

struct LedgerSummary {
    std::size_t cross_rack = 0;
    std::size_t intra_rack = 0;
};

/// Append-only message log; appends are serialized.
class Ledger {
   public:
    Ledger() = default;
    Ledger(const Ledger& other);
    Ledger& operator=(const Ledger& other);

    void append(Message msg);
    std::vector<Message> messages() const;
    LedgerSummary summary() const;

   private:
    mutable std::mutex mu_;
    std::vector<Message> messages_;
    LedgerSummary summary_;
};

LedgerSummary measure(const Ledger& ledger);

/// `phase,src,dst,subsymbols` per message, then `summary,cross_rack=X,intra_rack=Y`.
/// Intra-rack lines are written only when `show_intra` is set.
void write_ledger(std::ostream& out, const Ledger& ledger, bool show_intra);

class Cluster {
   public:
    static Cluster build(const RackCode& code, const Poly& f);

    const RackCode& code() const noexcept { return code_; }
    /// nullopt for a failed node.
    std::optional<Elem> read(std::size_t rack, std::size_t node) const;
    bool alive(std::size_t rack, std::size_t node) const;
    const FailureSpec& failures() const noexcept { return failures_; }

    /// Idempotent; rejects invalid specs and more than nbar - s failed racks.
    void inject(const FailureSpec& spec);
    /// Writes a repaired symbol and marks the node alive.
    void restore(std::size_t rack, std::size_t node, Elem symbol);
    NodeReads reads() const;

   private:
    explicit Cluster(RackCode code) : code_(std::move(code)) {}
    RackCode code_;
    SymbolMatrix symbols_;
    std::vector<std::vector<bool>> alive_;
    FailureSpec failures_;
};

struct RunResult {
    Ledger ledger;
    BandwidthReport report;
};

/// Repairs every failed node of `cluster` under `plan`; all-or-error.
RunResult run(Cluster& cluster, const RepairPlan& plan);

}  // namespace rackrs

#endif  // RACKRS_SIMULATOR_HPP
