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

#include "rackrs/commands.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <map>
#include <sstream>
#include <string>
#include <thread>

#include "rackrs/error.hpp"
#include "rackrs/rs_code.hpp"

namespace rackrs {

namespace {

constexpr std::string_view kExample1 =
    "# GF(16), h(x) = x + x^4, rack 1 loses the nodes at 1, g^5, g^10\n"
    "field p=2 t=4 modulus=1,1,0,0,1\n"
    "code n=16 k=7 u=4\n"
    "goodpoly family=additive theta=1,0,1 nbar=4\n"
    "scheme kind=gw_subfield delta=2\n"
    "failures rack=1 nodes=2,3,4\n"
    "helpers racks=2,3,4\n"
    "seed value=2024\n";

constexpr std::string_view kDefaultSweep =
    "sweep formula=cor1 eps=1..4 bprime=6\n"
    "sweep formula=cor2 eps=1..3 nbar=8 t=8 sbar=1..2\n"
    "sweep formula=cor3 eps=1..4 dbar=10 t=30 kprime=5\n"
    "sweep formula=two_rack eps1=1 eps2=1..3 dbar=10 t=30 kprime=5\n"
    "sweep formula=thm2 terms=6,6,6\n";

template <typename Range, typename F>
std::string join(const Range& r, F f, const char* sep = ",") {
    std::string out;
    bool first = true;
    for (const auto& x : r) {
        if (!first) out += sep;
        first = false;
        out += f(x);
    }
    return out;
}

std::string packed(Elem x) { return std::to_string(x.value); }
std::string one_based(std::size_t i) { return std::to_string(i + 1); }

bool check_oracle(const RackCode& code, const RackArray& original, const FailureSpec& spec,
                  const SymbolMatrix& restored) {
    const Codeword flat = flatten(original);
    std::vector<std::optional<Elem>> word(flat.begin(), flat.end());
    for (const auto& [rack, nodes] : spec.racks)
        for (std::size_t j : nodes) word[rack * code.u() + j] = std::nullopt;
    const Poly f = erasure_decode(code.field(), word, code.params());
    const Codeword expect = encode(code.field(), f, code.params());
    for (std::size_t i = 0; i < code.nbar(); ++i)
        for (std::size_t j = 0; j < code.u(); ++j)
            if (restored[i][j] != expect[i * code.u() + j]) return false;
    return true;
}

void write_round_csv(std::ostream& out, const BandwidthReport& report) {
    out << "t,column,targets,scheme,baseline,measured,predicted\n";
    for (const auto& r : report.rounds)
        out << r.t << ',' << r.column << ',' << join(r.targets, one_based, ";") << ',' << to_string(r.kind) << ','
            << (r.baseline ? "yes" : "no") << ',' << r.measured << ',' << r.predicted << '\n';
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream f(path);
    if (!f) throw Error(ErrorCode::ConfigError, "cannot write '" + path.string() + "'");
    return f;
}

void write_side_outputs(const ScenarioRun& run, const RunOptions& opts) {
    if (opts.ledger) {
        auto f = open_output(*opts.ledger);
        write_ledger(f, run.result.ledger, opts.show_intra);
    }
    if (opts.csv) {
        auto f = open_output(*opts.csv);
        write_round_csv(f, run.result.report);
    }
}

}  // namespace

std::string_view example1_scenario() { return kExample1; }

ScenarioRun execute_scenario(const RackCode& code, const Poly& message, const FailureSpec& failures,
                             const std::optional<std::vector<std::size_t>>& helpers, const SchemeConfig& scheme) {
    RepairPlan p = plan(code, failures, helpers, scheme);
    ScenarioRun run{.code = code, .message = message, .original = layout(code, message), .plan = std::move(p)};
    Cluster cluster = Cluster::build(code, message);
    cluster.inject(failures);
    run.result = rackrs::run(cluster, run.plan);
    for (std::size_t i = 0; i < code.nbar(); ++i) {
        std::vector<Elem> row;
        for (std::size_t j = 0; j < code.u(); ++j) row.push_back(cluster.read(i, j).value_or(code.field().zero()));
        run.restored.push_back(std::move(row));
    }
    run.restored_ok = cluster.failures().empty() && run.restored == run.original.symbols;
    run.oracle_ok = check_oracle(code, run.original, failures, run.restored);

    const auto& report = run.result.report;
    PredictParams pp;
    if (failures.m() == 1) {
        run.formula = Formula::Cor1;
        pp.eps = static_cast<std::int64_t>(failures.epsilon());
        pp.bprime = static_cast<std::int64_t>(report.rounds.front().predicted);
    } else {
        run.formula = Formula::Thm2;
        for (const auto& r : report.rounds) pp.terms.push_back(static_cast<std::int64_t>(r.predicted));
    }
    run.formula_value = predict(run.formula, pp);
    const auto ledger = measure(run.result.ledger);
    run.bandwidth_ok = report.match() && ledger.cross_rack == report.total &&
                       run.formula_value == Rational(static_cast<std::int64_t>(report.total));
    return run;
}

ScenarioRun execute_scenario(const Scenario& scn, std::uint64_t seed) {
    RackCode code = build_code(scn);
    const SchemeConfig scheme = build_scheme(code.field(), scn);
    return execute_scenario(code, scenario_message(code, scn, seed), scn.failures, scn.helpers, scheme);
}

void write_report(std::ostream& out, const ScenarioRun& run, bool show_intra) {
    const auto& code = run.code;
    const auto& field = code.field();
    const auto& gp = code.good_poly();
    out << "field p=" << field.characteristic() << " t=" << field.degree()
        << " modulus=" << join(field.modulus(), [](std::uint32_t c) { return std::to_string(c); }) << '\n';
    out << "code n=" << code.n() << " k=" << code.k() << " u=" << code.u() << " nbar=" << code.nbar()
        << " s=" << code.s() << '\n';
    out << "goodpoly family=" << to_string(gp.family) << " h=" << format(gp.h) << '\n';
    for (std::size_t i = 0; i < code.nbar(); ++i)
        out << "rack " << i + 1 << " y=" << code.constants()[i].value
            << " points=" << join(code.rack_points(i), packed) << '\n';
    out << "message " << format(run.message) << '\n';
    for (const auto& [rack, nodes] : run.plan.spec.racks)
        out << "failures rack=" << rack + 1 << " nodes=" << join(nodes, one_based) << '\n';
    out << "plan m=" << run.plan.spec.m() << " eps=" << run.plan.spec.epsilon()
        << " helpers=" << join(run.plan.helpers, one_based) << " scheme=" << to_string(run.plan.config.kind) << '\n';
    for (const auto& r : run.result.report.rounds) {
        out << "round t=" << r.t << " column=" << r.column << " targets=" << join(r.targets, one_based)
            << " scheme=" << to_string(r.kind) << (r.baseline ? " baseline" : "") << " downloads="
            << join(r.per_helper, [](const auto& h) { return std::to_string(h.first + 1) + ":" + std::to_string(h.second); })
            << " measured=" << r.measured << " predicted=" << r.predicted << '\n';
    }
    write_ledger(out, run.result.ledger, show_intra);
    const auto& rep = run.result.report;
    out << "total cross_rack=" << rep.total << " predicted=" << rep.predicted << " " << to_string(run.formula) << "="
        << format_rational(run.formula_value) << " symbols=" << format_rational(rep.symbol_equivalents()) << '\n';
    out << "check restored=" << (run.restored_ok ? "ok" : "FAIL") << " oracle=" << (run.oracle_ok ? "ok" : "FAIL")
        << " bandwidth=" << (run.bandwidth_ok ? "ok" : "FAIL") << '\n';
}

int cmd_run(const Scenario& scn, const RunOptions& opts, std::ostream& out) {
    const ScenarioRun run = execute_scenario(scn, opts.seed.value_or(scn.seed));
    write_report(out, run, opts.show_intra);
    write_side_outputs(run, opts);
    return run.ok() ? kExitOk : kExitMismatch;
}

int cmd_example1(const RunOptions& opts, std::ostream& out) {
    std::istringstream text{std::string(kExample1)};
    const Scenario scn = parse_scenario(text);
    const ScenarioRun run = execute_scenario(scn, opts.seed.value_or(scn.seed));
    const auto& field = run.code.field();
    const std::uint64_t order = field.size() - 1;

    out << "example1: rack-aware RS code over GF(16) with h(x) = x + x^4\n";
    for (std::size_t i = 0; i < run.code.nbar(); ++i)
        out << "A" << i + 1 << " y=" << field.format_power(run.code.constants()[i])
            << ": " << join(run.code.rack_points(i), [&](Elem x) { return field.format_power(x); }, " ") << '\n';
    out << "download symbols per coefficient e = e_{i,4-t}:\n";
    const auto& scheme = *run.plan.rounds.front().scheme;
    for (const auto& d : scheme.downloads()) {
        out << "  rack " << d.position + 1 << ": "
            << join(d.multipliers,
                    [&](Elem g) -> std::string {
                        const std::uint64_t k = *field.log(g);
                        if (k == 0) return "Tr(e)";
                        return "Tr(" + field.format_power(g) + "·e)=Tr(e/γ^" + std::to_string(order - k) + ")";
                    },
                    ", ")
            << '\n';
    }
    const auto messages = run.result.ledger.messages();
    auto next = messages.begin();
    for (const auto& r : run.result.report.rounds) {
        out << "round t=" << r.t << " column=" << r.column;
        for (std::size_t h = 0; h < r.per_helper.size(); ++h) {
            next = std::find_if(next, messages.end(), [](const Message& m) { return m.phase == Phase::Step2Cross; });
            out << " rack" << next->src << "="
                << join(next->payload, [](std::uint32_t b) { return std::to_string(b); }, "");
            ++next;
        }
        out << '\n';
    }
    const auto& rep = run.result.report;
    out << "b' = " << rep.rounds.front().measured << " bits, b = eps*b' = " << run.plan.spec.epsilon() << "*"
        << rep.rounds.front().measured << " = " << rep.total << " bits\n";
    write_report(out, run, opts.show_intra);
    write_side_outputs(run, opts);
    return run.ok() ? kExitOk : kExitMismatch;
}

namespace {

constexpr const char* kSweepKeys[] = {"eps", "bprime", "nbar", "t", "sbar", "dbar", "kprime", "eps1", "eps2"};

std::int64_t* slot(PredictParams& p, std::string_view key) {
    if (key == "eps") return &p.eps;
    if (key == "bprime") return &p.bprime;
    if (key == "nbar") return &p.nbar;
    if (key == "t") return &p.t;
    if (key == "sbar") return &p.sbar;
    if (key == "dbar") return &p.dbar;
    if (key == "kprime") return &p.kprime;
    if (key == "eps1") return &p.eps1;
    if (key == "eps2") return &p.eps2;
    return nullptr;
}

}  // namespace

int cmd_table(std::istream* sweep, const RunOptions& opts, std::ostream& out) {
    std::istringstream builtin{std::string(kDefaultSweep)};
    std::istream& in = sweep ? *sweep : builtin;
    std::ostringstream csv;
    csv << "formula";
    for (const char* k : kSweepKeys) csv << ',' << k;
    csv << ",terms,value\n";

    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream words(line);
        std::string block;
        if (!(words >> block)) continue;
        const std::string where = "sweep line " + std::to_string(number) + ": ";
        if (block != "sweep") throw Error(ErrorCode::ConfigError, where + "expected 'sweep'");
        std::optional<Formula> formula;
        std::vector<std::int64_t> terms;
        std::map<std::string, std::vector<std::uint64_t>> axes;
        std::string word;
        while (words >> word) {
            const auto eq = word.find('=');
            if (eq == std::string::npos) throw Error(ErrorCode::ConfigError, where + "expected key=value");
            const std::string key = word.substr(0, eq);
            const std::string value = word.substr(eq + 1);
            if (key == "formula") {
                formula = parse_formula(value);
            } else if (key == "terms") {
                for (auto v : parse_uint_list(value)) terms.push_back(static_cast<std::int64_t>(v));
            } else {
                PredictParams probe;
                if (!slot(probe, key)) throw Error(ErrorCode::ConfigError, where + "unknown key '" + key + "'");
                axes[key] = parse_uint_list(value);
                if (axes[key].empty()) throw Error(ErrorCode::ConfigError, where + "empty value for '" + key + "'");
            }
        }
        if (!formula) throw Error(ErrorCode::ConfigError, where + "missing formula");

        std::vector<std::string> keys;
        for (const char* k : kSweepKeys)
            if (axes.count(k)) keys.emplace_back(k);
        std::vector<std::size_t> idx(keys.size(), 0);
        while (true) {
            PredictParams p;
            p.terms = terms;
            for (std::size_t a = 0; a < keys.size(); ++a)
                *slot(p, keys[a]) = static_cast<std::int64_t>(axes[keys[a]][idx[a]]);
            csv << to_string(*formula);
            for (const char* k : kSweepKeys) {
                csv << ',';
                if (axes.count(k)) csv << *slot(p, k);
            }
            csv << ',' << join(terms, [](std::int64_t v) { return std::to_string(v); }, ";") << ','
                << format_rational(predict(*formula, p)) << '\n';
            bool done = true;
            for (std::size_t a = keys.size(); a-- > 0;) {
                if (++idx[a] < axes[keys[a]].size()) {
                    done = false;
                    break;
                }
                idx[a] = 0;
            }
            if (done) break;
        }
    }
    out << csv.str();
    if (opts.csv) {
        auto f = open_output(*opts.csv);
        f << csv.str();
    }
    return kExitOk;
}

namespace {

struct TrialResult {
    bool columns = true;
    bool residues = true;
    bool oracle = true;
    bool bandwidth = true;
    std::string error;
};

TrialResult run_trial(const RackCode& code, const Scenario& scn, const SchemeConfig& scheme, std::uint64_t seed) {
    TrialResult r;
    try {
        std::mt19937_64 rng(seed);
        const Poly f = random_message(code.field(), code.k(), rng);
        const auto rs = rack_residues(layout(code, f));
        for (std::size_t j = 0; j < code.u(); ++j)
            r.columns = r.columns && is_column_codeword(code.field(), column(rs, j));
        const auto hj = coefficient_polys(code.field(), f, code.good_poly().h);
        for (std::size_t i = 0; i < code.nbar(); ++i)
            for (std::size_t j = 0; j < code.u(); ++j) {
                const Elem via_chain = j < hj.size() ? eval(code.field(), hj[j], code.constants()[i]) : Elem{0};
                r.residues = r.residues && via_chain == rs.coeffs[i][j];
            }
        if (!scn.failures.empty()) {
            const auto run = execute_scenario(code, f, scn.failures, scn.helpers, scheme);
            r.oracle = run.restored_ok && run.oracle_ok;
            r.bandwidth = run.bandwidth_ok;
        }
    } catch (const Error& e) {
        r.error = e.what();
    }
    return r;
}

}  // namespace

int cmd_verify(const Scenario& scn, std::size_t trials, const RunOptions& opts, std::ostream& out) {
    const RackCode code = build_code(scn);
    const SchemeConfig scheme = build_scheme(code.field(), scn);
    if (!scn.failures.empty()) (void)plan(code, scn.failures, scn.helpers, scheme);
    const std::uint64_t seed = opts.seed.value_or(scn.seed);

    const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<TrialResult> results(trials);
    for (std::size_t begin = 0; begin < trials; begin += workers) {
        std::vector<std::future<TrialResult>> batch;
        for (std::size_t i = begin; i < std::min(trials, begin + workers); ++i)
            batch.push_back(std::async(std::launch::async, run_trial, std::cref(code), std::cref(scn),
                                       std::cref(scheme), seed + i));
        for (std::size_t i = 0; i < batch.size(); ++i) results[begin + i] = batch[i].get();
    }

    std::size_t columns = 0, residues = 0, oracle = 0, bandwidth = 0, errors = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        const auto& r = results[i];
        if (!r.error.empty()) {
            ++errors;
            out << "trial " << i << " error " << r.error << '\n';
            continue;
        }
        columns += r.columns;
        residues += r.residues;
        oracle += r.oracle;
        bandwidth += r.bandwidth;
    }
    auto frac = [&](std::size_t n) { return std::to_string(n) + "/" + std::to_string(trials); };
    const bool pass = errors == 0 && columns == trials && residues == trials && oracle == trials && bandwidth == trials;
    out << "verify trials=" << trials << " seed=" << seed << " columns=" << frac(columns) << " residues=" << frac(residues)
        << " oracle=" << frac(oracle) << " bandwidth=" << frac(bandwidth) << " result=" << (pass ? "pass" : "FAIL")
        << '\n';
    return pass ? kExitOk : kExitMismatch;
}

}  // namespace rackrs
