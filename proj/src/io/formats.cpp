// Copyright 2026 The dcmdp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dcmdp/io/formats.hpp"

#include "dcmdp/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace dcmdp::io {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        // e.byte is 1-based and points just past the offending character
        std::size_t line = 1, column = 1;
        const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " +
                                               std::to_string(column) + ": " + e.what());
    }
}

[[noreturn]] void bad(const std::string& where, const std::string& what) {
    throw Error(ErrorKind::ParseError, where + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object()) bad(where, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) bad(where, std::string("missing key '") + key + "'");
    return *it;
}

double number(const json& j, const std::string& where) {
    if (!j.is_number()) bad(where, "expected a number");
    return j.get<double>();
}

long long integer(const json& j, const std::string& where) {
    if (!j.is_number_integer()) bad(where, "expected an integer");
    return j.get<long long>();
}

int positive(const json& j, const std::string& where) {
    const long long v = integer(j, where);
    if (v <= 0 || v > (1 << 30)) bad(where, "expected a positive integer");
    return static_cast<int>(v);
}

std::string text_field(const json& j, const std::string& where) {
    if (!j.is_string()) bad(where, "expected a string");
    return j.get<std::string>();
}

const json& array(const json& j, std::size_t size, const std::string& where) {
    if (!j.is_array()) bad(where, "expected an array");
    if (j.size() != size)
        bad(where, "expected " + std::to_string(size) + " entries, found " + std::to_string(j.size()));
    return j;
}

std::string at(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

/// Reads an [d0][d1]...[dk] nested array into a flat row-major vector.
void flatten(const json& j, const std::vector<std::size_t>& dims, std::size_t depth,
             const std::string& where, std::vector<double>& out) {
    array(j, dims[depth], where);
    for (std::size_t i = 0; i < dims[depth]; ++i) {
        if (depth + 1 == dims.size())
            out.push_back(number(j[i], at(where, i)));
        else
            flatten(j[i], dims, depth + 1, at(where, i), out);
    }
}

json nest(const std::vector<double>& flat, const std::vector<std::size_t>& dims, std::size_t depth,
          std::size_t& pos) {
    json j = json::array();
    for (std::size_t i = 0; i < dims[depth]; ++i) {
        if (depth + 1 == dims.size())
            j.push_back(flat[pos++]);
        else
            j.push_back(nest(flat, dims, depth + 1, pos));
    }
    return j;
}

std::string_view scheme_name(GridScheme scheme) {
    switch (scheme) {
    case GridScheme::Identity: return "identity";
    case GridScheme::Additive: return "additive";
    case GridScheme::Relative: return "relative";
    }
    return "unknown";
}

GridScheme parse_scheme(const std::string& name, const std::string& where) {
    if (name == "identity") return GridScheme::Identity;
    if (name == "additive") return GridScheme::Additive;
    if (name == "relative") return GridScheme::Relative;
    bad(where, "unknown grid scheme '" + name + "'");
}

template <class Fn>
auto named(const std::string& where, Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::ParseError) throw;
        bad(where, e.what());
    }
}

} // namespace

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
    out << text;
}

CMdp parse_instance(std::string_view text) {
    const json j = parse_json(text);
    const int H = positive(field(j, "horizon", "instance"), "horizon");
    const int S = positive(field(j, "num_states", "instance"), "num_states");
    const int A = positive(field(j, "num_actions", "instance"), "num_actions");
    const long long s0 = integer(field(j, "initial_state", "instance"), "initial_state");
    if (s0 < 0 || s0 >= S) bad("initial_state", "out of range [0, " + std::to_string(S) + ")");

    const std::vector<std::size_t> table{std::size_t(H), std::size_t(S), std::size_t(A)};
    std::vector<std::size_t> trans = table;
    trans.push_back(S);
    std::vector<double> p, r, c;
    flatten(field(j, "transitions", "instance"), trans, 0, "transitions", p);
    flatten(field(j, "rewards", "instance"), table, 0, "rewards", r);
    flatten(field(j, "costs", "instance"), table, 0, "costs", c);
    return CMdp(S, A, H, static_cast<int>(s0), std::move(p), std::move(r), std::move(c));
}

std::string serialize_instance(const CMdp& cmdp) {
    const std::size_t H = cmdp.horizon(), S = cmdp.num_states(), A = cmdp.num_actions();
    std::size_t pos = 0;
    json j;
    j["horizon"] = H;
    j["num_states"] = S;
    j["num_actions"] = A;
    j["initial_state"] = cmdp.initial_state();
    j["transitions"] = nest(cmdp.transitions(), {H, S, A, S}, 0, pos);
    pos = 0;
    j["rewards"] = nest(cmdp.rewards(), {H, S, A}, 0, pos);
    pos = 0;
    j["costs"] = nest(cmdp.costs(), {H, S, A}, 0, pos);
    return j.dump(2) + "\n";
}

CMdp load_instance(const std::filesystem::path& path) { return parse_instance(read_file(path)); }

Problem parse_problem(std::string_view text) {
    const json j = parse_json(text);
    Problem p;
    const std::string name = text_field(field(j, "criterion", "problem"), "criterion");
    p.criterion = named("criterion", [&] { return parse_criterion(name); });
    p.budget = number(field(j, "budget", "problem"), "budget");
    if (j.contains("epsilon")) p.epsilon = number(j["epsilon"], "epsilon");
    if (j.contains("mode")) {
        const std::string m = text_field(j["mode"], "mode");
        p.mode = named("mode", [&] { return parse_mode(m); });
    }
    if (j.contains("variant")) {
        const std::string v = text_field(j["variant"], "variant");
        p.variant = named("variant", [&] { return parse_variant(v); });
    }
    return p;
}

std::string serialize_problem(const Problem& problem) {
    json j;
    j["criterion"] = std::string(to_string(problem.criterion));
    j["budget"] = problem.budget;
    if (problem.epsilon) j["epsilon"] = *problem.epsilon;
    if (problem.mode) j["mode"] = std::string(to_string(*problem.mode));
    if (problem.variant) j["variant"] = std::string(to_string(*problem.variant));
    return j.dump(2) + "\n";
}

Problem load_problem(const std::filesystem::path& path) { return parse_problem(read_file(path)); }

std::string serialize_policy(const AugmentedPolicy& policy, int initial_state,
                             std::optional<std::size_t> initial_index) {
    const ValueGrid& grid = policy.grid();
    json g;
    g["scheme"] = std::string(scheme_name(grid.scheme()));
    g["num_states"] = grid.num_states();
    if (grid.scheme() == GridScheme::Identity) {
        json values = json::array();
        for (const auto& p : grid.demands()) values.push_back(p.value);
        g["values"] = std::move(values);
    } else {
        g["epsilon"] = grid.epsilon();
        g["delta"] = grid.delta();
        g["v_min"] = grid.v_min();
        g["v_max"] = grid.v_max();
    }

    json j;
    j["grid"] = std::move(g);
    j["horizon"] = policy.horizon();
    j["num_states"] = policy.num_states();
    j["initial_state"] = initial_state;
    j["initial_demand_index"] = initial_index ? json(*initial_index) : json(nullptr);
    if (initial_index) j["initial_demand"] = grid.demands()[*initial_index].value;

    json entries = json::array();
    for (int h = 0; h < policy.horizon(); ++h)
        for (int s = 0; s < policy.num_states(); ++s)
            for (std::size_t d = 0; d < policy.num_demands(); ++d) {
                if (!policy.has_entry(h, s, d)) continue;
                const auto next = policy.next_demands(h, s, d);
                entries.push_back(json::array(
                    {h, s, d, policy.action(h, s, d), std::vector<std::uint32_t>(next.begin(), next.end())}));
            }
    j["entries"] = std::move(entries);
    return j.dump() + "\n";
}

PolicyFile parse_policy(std::string_view text) {
    const json j = parse_json(text);
    const json& g = field(j, "grid", "policy");
    const GridScheme scheme = parse_scheme(text_field(field(g, "scheme", "grid"), "grid.scheme"), "grid.scheme");
    const int S = positive(field(g, "num_states", "grid"), "grid.num_states");
    ValueGrid grid = named("grid", [&] {
        if (scheme == GridScheme::Identity) {
            const json& values = field(g, "values", "grid");
            if (!values.is_array()) bad("grid.values", "expected an array");
            std::vector<double> vs;
            for (std::size_t i = 0; i < values.size(); ++i) vs.push_back(number(values[i], at("grid.values", i)));
            return ValueGrid::identity(std::move(vs), S);
        }
        return ValueGrid::restore(scheme, number(field(g, "epsilon", "grid"), "grid.epsilon"),
                                  number(field(g, "delta", "grid"), "grid.delta"),
                                  number(field(g, "v_min", "grid"), "grid.v_min"),
                                  number(field(g, "v_max", "grid"), "grid.v_max"), S);
    });

    const int H = positive(field(j, "horizon", "policy"), "horizon");
    const int states = positive(field(j, "num_states", "policy"), "num_states");
    if (states != S) bad("num_states", "differs from grid.num_states");
    const long long s0 = integer(field(j, "initial_state", "policy"), "initial_state");
    if (s0 < 0 || s0 >= S) bad("initial_state", "out of range");

    PolicyFile out{AugmentedPolicy(std::move(grid), H, S), static_cast<int>(s0), std::nullopt};
    const std::size_t D = out.policy.num_demands();
    const json& init = field(j, "initial_demand_index", "policy");
    if (!init.is_null()) {
        const long long d0 = integer(init, "initial_demand_index");
        if (d0 < 0 || static_cast<std::size_t>(d0) >= D) bad("initial_demand_index", "out of range");
        out.initial_index = static_cast<std::size_t>(d0);
    }

    const json& entries = field(j, "entries", "policy");
    if (!entries.is_array()) bad("entries", "expected an array");
    std::vector<std::uint32_t> next(S);
    for (std::size_t e = 0; e < entries.size(); ++e) {
        const std::string where = at("entries", e);
        const json& row = array(entries[e], 5, where);
        const long long h = integer(row[0], where + "[0]");
        const long long s = integer(row[1], where + "[1]");
        const long long d = integer(row[2], where + "[2]");
        const long long a = integer(row[3], where + "[3]");
        if (h < 0 || h >= H || s < 0 || s >= S || d < 0 || static_cast<std::size_t>(d) >= D || a < 0)
            bad(where, "index out of range");
        const json& nd = array(row[4], S, where + "[4]");
        for (int t = 0; t < S; ++t) {
            const long long v = integer(nd[t], at(where + "[4]", t));
            if (v < 0 || static_cast<std::size_t>(v) >= D) bad(at(where + "[4]", t), "demand index out of range");
            next[t] = static_cast<std::uint32_t>(v);
        }
        out.policy.set(static_cast<int>(h), static_cast<int>(s), static_cast<std::size_t>(d),
                       static_cast<int>(a), next);
    }
    return out;
}

PolicyFile load_policy(const std::filesystem::path& path) { return parse_policy(read_file(path)); }

void check_compatible(const PolicyFile& file, const CMdp& cmdp) {
    const AugmentedPolicy& p = file.policy;
    if (p.horizon() != cmdp.horizon() || p.num_states() != cmdp.num_states() ||
        file.initial_state != cmdp.initial_state())
        throw Error(ErrorKind::DimensionMismatch,
                    "policy is for H=" + std::to_string(p.horizon()) + ", S=" + std::to_string(p.num_states()) +
                        ", s0=" + std::to_string(file.initial_state) + "; instance has H=" +
                        std::to_string(cmdp.horizon()) + ", S=" + std::to_string(cmdp.num_states()) +
                        ", s0=" + std::to_string(cmdp.initial_state()));
    for (int h = 0; h < p.horizon(); ++h)
        for (int s = 0; s < p.num_states(); ++s)
            for (std::size_t d = 0; d < p.num_demands(); ++d)
                if (p.has_entry(h, s, d) && p.action(h, s, d) >= cmdp.num_actions())
                    throw Error(ErrorKind::DimensionMismatch,
                                "policy uses action " + std::to_string(p.action(h, s, d)) + " but instance has " +
                                    std::to_string(cmdp.num_actions()));
}

GeneratorSpec parse_generator_spec(std::string_view text) {
    const json j = parse_json(text);
    GeneratorSpec spec;
    auto range = [&](const char* key, IntRange& r) {
        if (!j.contains(key)) return;
        const json& a = array(j[key], 2, key);
        r.lo = static_cast<int>(integer(a[0], std::string(key) + "[0]"));
        r.hi = static_cast<int>(integer(a[1], std::string(key) + "[1]"));
    };
    if (!j.is_object()) bad("generator", "expected an object");
    if (j.contains("seed")) spec.seed = static_cast<std::uint64_t>(integer(j["seed"], "seed"));
    if (j.contains("num_states")) spec.num_states = positive(j["num_states"], "num_states");
    if (j.contains("num_actions")) spec.num_actions = positive(j["num_actions"], "num_actions");
    if (j.contains("horizon")) spec.horizon = positive(j["horizon"], "horizon");
    range("reward_range", spec.reward_range);
    range("cost_range", spec.cost_range);
    range("budget_range", spec.budget_range);
    if (j.contains("transition_sparsity"))
        spec.transition_sparsity = number(j["transition_sparsity"], "transition_sparsity");
    if (j.contains("probability_denominator"))
        spec.probability_denominator = positive(j["probability_denominator"], "probability_denominator");
    return spec;
}

std::string serialize_generator_spec(const GeneratorSpec& spec) {
    json j;
    j["seed"] = spec.seed;
    j["num_states"] = spec.num_states;
    j["num_actions"] = spec.num_actions;
    j["horizon"] = spec.horizon;
    j["reward_range"] = {spec.reward_range.lo, spec.reward_range.hi};
    j["cost_range"] = {spec.cost_range.lo, spec.cost_range.hi};
    j["budget_range"] = {spec.budget_range.lo, spec.budget_range.hi};
    j["transition_sparsity"] = spec.transition_sparsity;
    j["probability_denominator"] = spec.probability_denominator;
    return j.dump(2) + "\n";
}

} // namespace dcmdp::io
