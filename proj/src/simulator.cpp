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

#include "rackrs/simulator.hpp"

#include <string>

#include "rackrs/error.hpp"

namespace rackrs {

Ledger::Ledger(const Ledger& other) {
    std::lock_guard lock(other.mu_);
    messages_ = other.messages_;
    summary_ = other.summary_;
}

Ledger& Ledger::operator=(const Ledger& other) {
    if (this == &other) return *this;
    std::scoped_lock lock(mu_, other.mu_);
    messages_ = other.messages_;
    summary_ = other.summary_;
    return *this;
}

void Ledger::append(Message msg) {
    if (msg.payload.empty()) throw Error(ErrorCode::PreconditionFailed, "messages carry at least one sub-symbol");
    if (msg.phase != Phase::Step2Cross && msg.cross_rack())
        throw Error(ErrorCode::PreconditionFailed, "intra-rack phases must stay within one rack");
    std::lock_guard lock(mu_);
    (msg.cross_rack() ? summary_.cross_rack : summary_.intra_rack) += msg.size();
    messages_.push_back(std::move(msg));
}

std::vector<Message> Ledger::messages() const {
    std::lock_guard lock(mu_);
    return messages_;
}

LedgerSummary Ledger::summary() const {
    std::lock_guard lock(mu_);
    return summary_;
}

LedgerSummary measure(const Ledger& ledger) {
    LedgerSummary s;
    for (const auto& m : ledger.messages()) (m.cross_rack() ? s.cross_rack : s.intra_rack) += m.size();
    return s;
}

void write_ledger(std::ostream& out, const Ledger& ledger, bool show_intra) {
    for (const auto& m : ledger.messages()) {
        if (!m.cross_rack() && !show_intra) continue;
        out << to_string(m.phase) << ',' << m.src << ',' << m.dst << ',' << m.size() << '\n';
    }
    const auto s = measure(ledger);
    out << "summary,cross_rack=" << s.cross_rack << ",intra_rack=" << s.intra_rack << '\n';
}

Cluster Cluster::build(const RackCode& code, const Poly& f) {
    Cluster c(code);
    c.symbols_ = layout(code, f).symbols;
    c.alive_.assign(code.nbar(), std::vector<bool>(code.u(), true));
    return c;
}

std::optional<Elem> Cluster::read(std::size_t rack, std::size_t node) const {
    if (!alive_.at(rack).at(node)) return std::nullopt;
    return symbols_[rack][node];
}

bool Cluster::alive(std::size_t rack, std::size_t node) const { return alive_.at(rack).at(node); }

void Cluster::inject(const FailureSpec& spec) {
    FailureSpec merged = failures_;
    for (const auto& [rack, nodes] : spec.racks) merged.racks[rack].insert(nodes.begin(), nodes.end());
    validate(code_, merged);
    failures_ = std::move(merged);
    for (const auto& [rack, nodes] : failures_.racks)
        for (std::size_t j : nodes) {
            alive_[rack][j] = false;
            symbols_[rack][j] = code_.field().zero();
        }
}

void Cluster::restore(std::size_t rack, std::size_t node, Elem symbol) {
    symbols_.at(rack).at(node) = symbol;
    alive_[rack][node] = true;
    auto it = failures_.racks.find(rack);
    if (it == failures_.racks.end()) return;
    it->second.erase(node);
    if (it->second.empty()) failures_.racks.erase(it);
}

NodeReads Cluster::reads() const {
    NodeReads out;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        std::vector<std::optional<Elem>> row;
        for (std::size_t j = 0; j < symbols_[i].size(); ++j) row.push_back(read(i, j));
        out.push_back(std::move(row));
    }
    return out;
}

RunResult run(Cluster& cluster, const RepairPlan& plan) {
    if (plan.spec.racks != cluster.failures().racks)
        throw Error(ErrorCode::PreconditionFailed, "plan does not match the injected failures");
    RunResult result;
    auto outcome = execute_repair(cluster.code(), cluster.reads(), plan, [&](const Transfer& tr) {
        result.ledger.append(Message{tr.phase, tr.src, tr.dst, tr.payload});
    });
    for (const auto& [rack, nodes] : plan.spec.racks)
        for (std::size_t j : nodes) cluster.restore(rack, j, outcome.restored[rack][j]);
    result.report = std::move(outcome.report);
    return result;
}

}  // namespace rackrs
