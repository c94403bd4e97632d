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

#include "dcmdp/oracle/brute_force.hpp"

#include "dcmdp/core/evaluation.hpp"
#include "dcmdp/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace dcmdp {

std::size_t decision_nodes(const CMdp& cmdp) {
    std::size_t total = 0, layer = 1;
    for (int h = 0; h < cmdp.horizon(); ++h) {
        total += layer;
        if (total > (std::size_t{1} << 40)) return total;
        layer *= static_cast<std::size_t>(cmdp.max_support(h));
    }
    return total;
}

namespace {

struct Pending {
    History history;
    int h;
    int state;
    double reach;  // probability of reaching this node
    double prefix; // cost accumulated before acting here
};

class Search {
public:
    Search(const CMdp& cmdp, Criterion criterion, double budget, bool prune)
        : cmdp_(cmdp), criterion_(criterion), budget_(budget) {
        bool nonnegative = std::all_of(cmdp.costs().begin(), cmdp.costs().end(),
                                       [](double c) { return c >= 0.0; });
        switch (criterion.kind()) {
        case CriterionKind::Anytime: bound_ = prune ? Bound::MaxPrefix : Bound::None; break;
        case CriterionKind::AlmostSure:
            bound_ = prune && nonnegative ? Bound::MaxPrefix : Bound::None;
            break;
        case CriterionKind::Expectation:
            bound_ = prune && nonnegative ? Bound::Expected : Bound::None;
            break;
        }
    }

    BruteForceResult run() {
        pending_.push_back({{cmdp_.initial_state()}, 0, cmdp_.initial_state(), 1.0, 0.0});
        descend(0.0);
        return std::move(result_);
    }

private:
    enum class Bound { None, MaxPrefix, Expected };

    // lower: cost lower bound of the assigned part (max prefix or expected sum)
    void descend(double lower) {
        if (pending_.empty()) {
            complete();
            return;
        }
        const Pending node = std::move(pending_.back());
        pending_.pop_back();
        for (int a = 0; a < cmdp_.num_actions(); ++a) {
            const double c = cmdp_.cost(node.h, node.state, a);
            double next_lower = lower;
            if (bound_ == Bound::MaxPrefix) next_lower = std::max(lower, node.prefix + c);
            if (bound_ == Bound::Expected) next_lower = lower + node.reach * c;
            // slack keeps round-off in the bound from pruning a feasible policy
            if (bound_ != Bound::None && next_lower > budget_ + 1e-9 * std::max(1.0, std::abs(budget_)))
                continue;

            policy_.assign(node.history, a);
            const std::size_t mark = pending_.size();
            if (node.h + 1 < cmdp_.horizon()) {
                const auto row = cmdp_.transition(node.h, node.state, a);
                for (int t = cmdp_.num_states() - 1; t >= 0; --t) {
                    if (row[t] <= 0.0) continue;
                    History child = node.history;
                    child.push_back(a);
                    child.push_back(t);
                    pending_.push_back({std::move(child), node.h + 1, t, node.reach * row[t],
                                        node.prefix + c});
                }
            }
            descend(next_lower);
            pending_.resize(mark);
        }
        policy_.erase(node.history);
        pending_.push_back(node);
    }

    void complete() {
        ++result_.policies_evaluated;
        const Evaluation e = evaluate(cmdp_, policy_, criterion_);
        if (!(e.cost <= ExtendedCost(budget_))) return;
        if (!result_.feasible || e.value > result_.value) {
            result_.feasible = true;
            result_.value = e.value;
            result_.cost = e.cost;
            result_.witness = policy_;
        }
    }

    const CMdp& cmdp_;
    Criterion criterion_;
    double budget_;
    Bound bound_ = Bound::None;
    std::vector<Pending> pending_;
    HistoryPolicy policy_;
    BruteForceResult result_;
};

} // namespace

BruteForceResult brute_force(const CMdp& cmdp, Criterion criterion, double budget,
                             const BruteForceOptions& options) {
    const std::size_t nodes = decision_nodes(cmdp);
    if (nodes > options.max_decision_nodes)
        throw Error(ErrorKind::CapExceeded, "history tree has up to " + std::to_string(nodes) +
                                                " decision nodes (cap " +
                                                std::to_string(options.max_decision_nodes) + ")");
    return Search(cmdp, criterion, budget, options.prune).run();
}

} // namespace dcmdp
