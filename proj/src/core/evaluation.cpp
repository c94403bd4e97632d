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

#include "dcmdp/core/evaluation.hpp"

#include "dcmdp/error.hpp"

#include <string>
#include <vector>

namespace dcmdp {

namespace {

int require_action(const HistoryPolicy& policy, const History& history, int num_actions) {
    const auto a = policy.action(history);
    if (!a) throw Error(ErrorKind::UndefinedAction, "no action for a reachable history");
    if (*a < 0 || *a >= num_actions)
        throw Error(ErrorKind::UndefinedAction, "action " + std::to_string(*a) + " out of range");
    return *a;
}

class TreeWalk {
public:
    TreeWalk(const CMdp& cmdp, const HistoryPolicy& policy, Criterion criterion)
        : cmdp_(cmdp), policy_(policy), criterion_(criterion) {}

    Evaluation run() {
        history_.assign(1, cmdp_.initial_state());
        return visit(0, cmdp_.initial_state());
    }

private:
    Evaluation visit(int h, int s) {
        if (h == cmdp_.horizon()) return {0.0, ExtendedCost(0.0)};
        const int a = require_action(policy_, history_, cmdp_.num_actions());
        const auto row = cmdp_.transition(h, s, a);
        const int S = cmdp_.num_states();

        std::vector<ExtendedCost> child_costs(S, ExtendedCost(0.0));
        double value = cmdp_.reward(h, s, a);
        for (int t = 0; t < S; ++t) {
            if (row[t] <= 0.0) continue;
            history_.push_back(a);
            history_.push_back(t);
            const Evaluation child = visit(h + 1, t);
            history_.resize(history_.size() - 2);
            value += row[t] * child.value;
            child_costs[t] = child.cost;
        }
        return {value, ExtendedCost(cmdp_.cost(h, s, a)) + criterion_.fold(row, child_costs)};
    }

    const CMdp& cmdp_;
    const HistoryPolicy& policy_;
    Criterion criterion_;
    History history_;
};

Evaluation backward_markov(const CMdp& cmdp, const HistoryPolicy& policy, Criterion criterion) {
    const int S = cmdp.num_states();
    std::vector<double> value(S, 0.0);
    std::vector<ExtendedCost> cost(S, ExtendedCost(0.0));
    History probe(1);
    for (int h = cmdp.horizon() - 1; h >= 0; --h) {
        std::vector<double> next_value(S);
        std::vector<ExtendedCost> next_cost(S);
        probe.resize(2 * h + 1, 0);
        for (int s = 0; s < S; ++s) {
            probe.back() = s;
            const int a = require_action(policy, probe, cmdp.num_actions());
            const auto row = cmdp.transition(h, s, a);
            double v = cmdp.reward(h, s, a);
            for (int t = 0; t < S; ++t)
                if (row[t] > 0.0) v += row[t] * value[t];
            next_value[s] = v;
            next_cost[s] = ExtendedCost(cmdp.cost(h, s, a)) + criterion.fold(row, cost);
        }
        value.swap(next_value);
        cost.swap(next_cost);
    }
    return {value[cmdp.initial_state()], cost[cmdp.initial_state()]};
}

} // namespace

Evaluation evaluate(const CMdp& cmdp, const HistoryPolicy& policy, Criterion criterion) {
    if (policy.is_markov()) return backward_markov(cmdp, policy, criterion);
    return TreeWalk(cmdp, policy, criterion).run();
}

double evaluate_value(const CMdp& cmdp, const HistoryPolicy& policy) {
    return evaluate(cmdp, policy, make_criterion(CriterionKind::Expectation)).value;
}

ExtendedCost evaluate_cost(const CMdp& cmdp, const HistoryPolicy& policy, Criterion criterion) {
    return evaluate(cmdp, policy, criterion).cost;
}

MinCostResult min_cost_policy(const CMdp& cmdp, Criterion criterion) {
    const int S = cmdp.num_states();
    const int A = cmdp.num_actions();
    const int H = cmdp.horizon();
    std::vector<int> actions(static_cast<std::size_t>(H) * S, 0);
    std::vector<ExtendedCost> cost(S, ExtendedCost(0.0));
    for (int h = H - 1; h >= 0; --h) {
        std::vector<ExtendedCost> next(S, kInfiniteCost);
        for (int s = 0; s < S; ++s) {
            for (int a = 0; a < A; ++a) {
                const ExtendedCost c =
                    ExtendedCost(cmdp.cost(h, s, a)) + criterion.fold(cmdp.transition(h, s, a), cost);
                if (a == 0 || c < next[s]) {
                    next[s] = c;
                    actions[static_cast<std::size_t>(h) * S + s] = a;
                }
            }
        }
        cost.swap(next);
    }
    return {HistoryPolicy::markov(S, std::move(actions)), cost[cmdp.initial_state()]};
}

} // namespace dcmdp
