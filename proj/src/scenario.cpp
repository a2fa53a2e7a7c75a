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

#include "rackrs/scenario.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "rackrs/error.hpp"

namespace rackrs {

namespace {

std::uint64_t parse_uint(const std::string& text) {
    std::uint64_t v = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end || text.empty())
        throw Error(ErrorCode::ConfigError, "expected a non-negative integer, got '" + text + "'");
    return v;
}

using Fields = std::map<std::string, std::string>;

struct Line {
    std::size_t number;
    std::string block;
    Fields fields;
};

class FieldReader {
   public:
    FieldReader(const Line& line) : line_(line) {}

    bool has(const std::string& key) const { return line_.fields.count(key) != 0; }

    const std::string& raw(const std::string& key) {
        used_.insert(key);
        auto it = line_.fields.find(key);
        if (it == line_.fields.end()) fail("missing key '" + key + "'");
        return it->second;
    }

    std::uint64_t uint(const std::string& key) { return wrap([&] { return parse_uint(raw(key)); }); }

    template <typename T>
    std::vector<T> list(const std::string& key) {
        return wrap([&] {
            std::vector<T> out;
            for (auto v : parse_uint_list(raw(key))) out.push_back(static_cast<T>(v));
            return out;
        });
    }

    void finish() const {
        for (const auto& [k, v] : line_.fields)
            if (used_.count(k) == 0) fail("unknown key '" + k + "' in block '" + line_.block + "'");
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorCode::ConfigError, "line " + std::to_string(line_.number) + ": " + what);
    }

   private:
    template <typename F>
    auto wrap(F f) -> decltype(f()) {
        try {
            return f();
        } catch (const Error& e) {
            if (e.code() != ErrorCode::ConfigError) throw;
            fail(e.what());
        }
    }

    const Line& line_;
    std::set<std::string> used_;
};

std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> out;
    std::string text;
    std::size_t number = 0;
    while (std::getline(in, text)) {
        ++number;
        if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
        std::istringstream words(text);
        std::string block;
        if (!(words >> block)) continue;
        Line line{number, block, {}};
        std::string word;
        while (words >> word) {
            const auto eq = word.find('=');
            if (eq == std::string::npos || eq == 0)
                throw Error(ErrorCode::ConfigError, "line " + std::to_string(number) + ": expected key=value, got '" +
                                                        word + "'");
            if (!line.fields.emplace(word.substr(0, eq), word.substr(eq + 1)).second)
                throw Error(ErrorCode::ConfigError,
                            "line " + std::to_string(number) + ": duplicate key '" + word.substr(0, eq) + "'");
        }
        out.push_back(std::move(line));
    }
    return out;
}

std::size_t one_based(FieldReader& r, std::uint64_t v, const char* what) {
    if (v == 0) r.fail(std::string(what) + " indices are one-based");
    return static_cast<std::size_t>(v - 1);
}

}  // namespace

std::vector<std::uint64_t> parse_uint_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    if (text.empty()) return out;
    if (auto dots = text.find(".."); dots != std::string::npos) {
        const auto lo = parse_uint(text.substr(0, dots));
        const auto hi = parse_uint(text.substr(dots + 2));
        if (hi < lo) throw Error(ErrorCode::ConfigError, "empty range '" + text + "'");
        for (auto v = lo; v <= hi; ++v) out.push_back(v);
        return out;
    }
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(parse_uint(text.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

Scenario parse_scenario(std::istream& in) {
    Scenario scn;
    std::set<std::string> seen;
    for (const Line& line : tokenize(in)) {
        FieldReader r(line);
        if (line.block != "failures" && !seen.insert(line.block).second) r.fail("duplicate block '" + line.block + "'");
        if (line.block == "field") {
            scn.p = static_cast<std::uint32_t>(r.uint("p"));
            scn.t = static_cast<unsigned>(r.uint("t"));
            if (r.has("modulus")) scn.modulus = r.list<std::uint32_t>("modulus");
        } else if (line.block == "code") {
            if (r.has("n")) scn.n = r.uint("n");
            scn.k = r.uint("k");
            if (r.has("u")) scn.u = r.uint("u");
        } else if (line.block == "goodpoly") {
            auto& g = scn.goodpoly;
            const std::string family = r.raw("family");
            if (family == "power") g.family = GoodFamily::Power;
            else if (family == "additive") g.family = GoodFamily::Additive;
            else if (family == "composite") g.family = GoodFamily::Composite;
            else r.fail("unknown good polynomial family '" + family + "'");
            if (r.has("m")) g.m = static_cast<unsigned>(r.uint("m"));
            if (r.has("e")) g.e = static_cast<unsigned>(r.uint("e"));
            if (r.has("theta")) g.theta = r.list<std::uint32_t>("theta");
            if (r.has("kernel")) g.kernel = r.list<std::uint32_t>("kernel");
            if (r.has("nbar")) g.nbar = r.uint("nbar");
        } else if (line.block == "scheme") {
            try {
                scn.scheme.kind = parse_scheme_kind(r.raw("kind"));
            } catch (const Error& e) {
                r.fail(e.what());
            }
            if (r.has("delta")) scn.scheme.delta = static_cast<unsigned>(r.uint("delta"));
            if (r.has("sbar")) scn.scheme.sbar = static_cast<unsigned>(r.uint("sbar"));
            if (r.has("eta")) scn.scheme_eta = r.list<std::uint32_t>("eta");
            if (r.has("beta")) scn.scheme_beta = r.list<std::uint32_t>("beta");
        } else if (line.block == "failures") {
            const std::size_t rack = one_based(r, r.uint("rack"), "rack");
            auto& nodes = scn.failures.racks[rack];
            for (auto v : r.list<std::uint64_t>("nodes")) nodes.insert(one_based(r, v, "node"));
        } else if (line.block == "helpers") {
            std::vector<std::size_t> racks;
            for (auto v : r.list<std::uint64_t>("racks")) racks.push_back(one_based(r, v, "rack"));
            scn.helpers = std::move(racks);
        } else if (line.block == "seed") {
            scn.seed = r.uint("value");
        } else if (line.block == "message") {
            scn.message = r.list<std::uint32_t>("coeffs");
        } else {
            r.fail("unknown block '" + line.block + "'");
        }
        r.finish();
    }
    for (const char* required : {"field", "code", "goodpoly"})
        if (seen.count(required) == 0) throw Error(ErrorCode::ConfigError, std::string("missing block '") + required + "'");
    return scn;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ConfigError, "cannot open scenario '" + path.string() + "'");
    return parse_scenario(in);
}

FieldTower build_field(const Scenario& scn) {
    if (scn.modulus.empty()) return FieldTower::standard(scn.p, scn.t);
    return FieldTower::build(scn.p, scn.t, scn.modulus);
}

namespace {

std::vector<Elem> elements(const FieldTower& field, const std::vector<std::uint32_t>& packed) {
    std::vector<Elem> out;
    for (auto v : packed) out.push_back(field.element(v));
    return out;
}

}  // namespace

GoodPolynomial build_good_poly(const FieldTower& field, const Scenario& scn) {
    const auto& g = scn.goodpoly;
    switch (g.family) {
        case GoodFamily::Power: return make_power(field, g.m, g.nbar);
        case GoodFamily::Additive: {
            if (!g.kernel.empty() && !g.theta.empty())
                throw Error(ErrorCode::ConfigError, "give either theta or kernel, not both");
            if (!g.kernel.empty())
                return make_additive(field, subspace_theta(field, make_subspace(field, elements(field, g.kernel))),
                                     g.nbar);
            return make_additive(field, elements(field, g.theta), g.nbar);
        }
        case GoodFamily::Composite: return make_composite(field, elements(field, g.theta), g.m, g.e, g.nbar);
        case GoodFamily::Custom: break;
    }
    throw Error(ErrorCode::ConfigError, "unsupported good polynomial family");
}

RackCode build_code(const Scenario& scn) {
    FieldTower field = build_field(scn);
    GoodPolynomial gp = build_good_poly(field, scn);
    if (scn.u && *scn.u != gp.u())
        throw Error(ErrorCode::ConfigError,
                    "code u=" + std::to_string(*scn.u) + " but the good polynomial has degree " + std::to_string(gp.u()));
    RackCode code = RackCode::build(std::move(field), std::move(gp), scn.k);
    if (scn.n && *scn.n != code.n())
        throw Error(ErrorCode::ConfigError,
                    "code n=" + std::to_string(*scn.n) + " but the partition covers " + std::to_string(code.n()));
    return code;
}

SchemeConfig build_scheme(const FieldTower& field, const Scenario& scn) {
    SchemeConfig c = scn.scheme;
    c.eta = elements(field, scn.scheme_eta);
    c.beta = elements(field, scn.scheme_beta);
    return c;
}

Poly random_message(const FieldTower& field, std::size_t k, std::mt19937_64& rng) {
    std::vector<Elem> c(k);
    for (auto& x : c) x = Elem{static_cast<std::uint32_t>(rng() % field.size())};
    return Poly(std::move(c));
}

Poly scenario_message(const RackCode& code, const Scenario& scn, std::uint64_t seed) {
    if (scn.message) {
        if (scn.message->size() > code.k())
            throw Error(ErrorCode::ConfigError, "message has more than k coefficients");
        return Poly(elements(code.field(), *scn.message));
    }
    std::mt19937_64 rng(seed);
    return random_message(code.field(), code.k(), rng);
}

}  // namespace rackrs
