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

#include "dcmdp/exact_cover/cover.hpp"

#include "dcmdp/error.hpp"

#include <random>
#include <string>

namespace dcmdp {

bool demand_admissible(const CMdp& cmdp, int h, int s, int a, std::span<const double> demands,
                       double target) {
    const auto row = cmdp.transition(h, s, a);
    double sum = cmdp.reward(h, s, a);
    for (int t = 0; t < cmdp.num_states(); ++t)
        if (row[t] > 0.0) sum += row[t] * demands[t];
    return sum >= target;
}

CoverMdp::CoverMdp(const CMdp& cmdp, Criterion criterion, const ValueSpace& vspace)
    : cmdp_(&cmdp), criterion_(criterion), values_(vspace.all) {}

bool CoverMdp::admissible(int h, int s, std::size_t v_index, int a,
                          std::span<const std::uint32_t> next) const {
    std::vector<double> demands(next.size());
    for (std::size_t t = 0; t < next.size(); ++t) demands[t] = values_.at(next[t]);
    return demand_admissible(*cmdp_, h, s, a, demands, values_.at(v_index));
}

CoverMdp build_cover_mdp(const CMdp& cmdp, Criterion criterion, const ValueSpace& vspace) {
    return CoverMdp(cmdp, criterion, vspace);
}

CoverEvaluator::CoverEvaluator(const AugmentedPolicy& policy, const CMdp& cmdp, Criterion criterion)
    : policy_(policy), cmdp_(cmdp), criterion_(criterion),
      memo_(static_cast<std::size_t>(cmdp.horizon()) * cmdp.num_states() * policy.num_demands()) {}

Evaluation CoverEvaluator::evaluate(int h, int s, std::size_t d) {
    if (h == cmdp_.horizon()) return {0.0, ExtendedCost(0.0)};
    auto& slot = memo_[(static_cast<std::size_t>(h) * cmdp_.num_states() + s) * policy_.num_demands() + d];
    if (slot) return *slot;
    if (!policy_.has_entry(h, s, d))
        throw Error(ErrorKind::MissingEntry, "no policy entry at epoch " + std::to_string(h) +
                                                 ", state " + std::to_string(s) + ", demand " +
                                                 std::to_string(d));
    const int a = policy_.action(h, s, d);
    const auto next = policy_.next_demands(h, s, d);
    const auto row = cmdp_.transition(h, s, a);
    const int S = cmdp_.num_states();
    std::vector<ExtendedCost> child_costs(S, ExtendedCost(0.0));
    double value = cmdp_.reward(h, s, a);
    for (int t = 0; t < S; ++t) {
        if (row[t] <= 0.0) continue;
        const Evaluation child = evaluate(h + 1, t, next[t]);
        value += row[t] * child.value;
        child_costs[t] = child.cost;
    }
    slot = Evaluation{value, ExtendedCost(cmdp_.cost(h, s, a)) + criterion_.fold(row, child_costs)};
    return *slot;
}

namespace {

struct Inducer {
    const AugmentedPolicy& policy;
    const CMdp& cmdp;
    std::size_t max_nodes;
    HistoryPolicy out;
    History history;
    std::size_t nodes = 0;

    bool visit(int h, int s, std::size_t d) {
        if (h == cmdp.horizon()) return true;
        if (++nodes > max_nodes) return false;
        if (!policy.has_entry(h, s, d))
            throw Error(ErrorKind::MissingEntry, "induced policy reaches an empty entry");
        const int a = policy.action(h, s, d);
        out.assign(history, a);
        const auto next = policy.next_demands(h, s, d);
        const auto row = cmdp.transition(h, s, a);
        for (int t = 0; t < cmdp.num_states(); ++t) {
            if (row[t] <= 0.0) continue;
            history.push_back(a);
            history.push_back(t);
            const bool ok = visit(h + 1, t, next[t]);
            history.resize(history.size() - 2);
            if (!ok) return false;
        }
        return true;
    }
};

} // namespace

std::optional<HistoryPolicy> induce_history_policy(const AugmentedPolicy& policy, const CMdp& cmdp,
                                                   std::size_t d0, std::size_t max_nodes) {
    Inducer inducer{policy, cmdp, max_nodes, {}, {cmdp.initial_state()}};
    if (!inducer.visit(0, cmdp.initial_state(), d0)) return std::nullopt;
    return std::move(inducer.out);
}

Certificate certify(const AugmentedPolicy& policy, const CMdp& cmdp, Criterion criterion,
                    std::size_t d0) {
    if (auto induced = induce_history_policy(policy, cmdp, d0)) {
        const Evaluation e = evaluate(cmdp, *induced, criterion);
        return {e.value, e.cost};
    }
    CoverEvaluator evaluator(policy, cmdp, criterion);
    const Evaluation e = evaluator.evaluate(0, cmdp.initial_state(), d0);
    return {e.value, e.cost};
}

std::optional<std::size_t> select_initial_demand(const CostTable& table, int s0, double budget) {
    const auto root = table.row(0, s0);
    for (std::size_t d = root.size(); d-- > 0;)
        if (root[d] <= ExtendedCost(budget)) return d;
    return std::nullopt;
}

double Trajectory::total_reward() const noexcept {
    double total = 0.0;
    for (const auto& step : steps) total += step.reward;
    return total;
}

double Trajectory::total_cost() const noexcept {
    double total = 0.0;
    for (const auto& step : steps) total += step.cost;
    return total;
}

Trajectory execute_index(const AugmentedPolicy& policy, const CMdp& cmdp, std::size_t d0,
                         std::uint64_t seed) {
    if (d0 >= policy.num_demands())
        throw Error(ErrorKind::MissingEntry, "initial demand index out of range");
    std::mt19937_64 rng(seed);
    Trajectory traj;
    int s = cmdp.initial_state();
    std::size_t d = d0;
    for (int h = 0; h < cmdp.horizon(); ++h) {
        if (!policy.has_entry(h, s, d))
            throw Error(ErrorKind::MissingEntry, "no policy entry at epoch " + std::to_string(h) +
                                                     ", state " + std::to_string(s));
        const int a = policy.action(h, s, d);
        traj.steps.push_back({s, a, cmdp.reward(h, s, a), cmdp.cost(h, s, a), d});
        const auto row = cmdp.transition(h, s, a);
        // 53 random bits; portable across standard libraries.
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        double acc = 0.0;
        int next = -1;
        for (int t = 0; t < cmdp.num_states(); ++t) {
            if (row[t] <= 0.0) continue;
            next = t;
            acc += row[t];
            if (u < acc) break;
        }
        d = policy.next_demands(h, s, d)[next];
        s = next;
    }
    traj.final_state = s;
    return traj;
}

Trajectory execute(const AugmentedPolicy& policy, const CMdp& cmdp, double v0, std::uint64_t seed) {
    const GridPoint p = policy.grid().round_down(v0);
    const auto d0 = policy.grid().demand_index(p);
    if (!d0 || p.value != v0)
        throw Error(ErrorKind::MissingEntry, "initial demand " + std::to_string(v0) +
                                                 " is not in the policy's demand domain");
    return execute_index(policy, cmdp, *d0, seed);
}

} // namespace dcmdp
