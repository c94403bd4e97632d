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

#pragma once

#include "dcmdp/core/cmdp.hpp"
#include "dcmdp/core/criterion.hpp"
#include "dcmdp/core/evaluation.hpp"
#include "dcmdp/core/history_policy.hpp"
#include "dcmdp/exact_cover/augmented_policy.hpp"
#include "dcmdp/exact_cover/value_space.hpp"
#include "dcmdp/solve_outcome.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace dcmdp {

/// Demand admissibility r_h(s,a) + Σ_t P(t|s,a) v_t >= v, summed left to right.
bool demand_admissible(const CMdp& cmdp, int h, int s, int a, std::span<const double> demands,
                       double target);

/// The value-augmented, cost-minimising MDP over S × V.
class CoverMdp {
public:
    CoverMdp(const CMdp& cmdp, Criterion criterion, const ValueSpace& vspace);

    const CMdp& cmdp() const noexcept { return *cmdp_; }
    Criterion criterion() const noexcept { return criterion_; }
    const std::vector<double>& values() const noexcept { return values_; }
    std::size_t num_augmented_states() const noexcept {
        return static_cast<std::size_t>(cmdp_->num_states()) * values_.size();
    }

    /// (a, v) is admissible at (h, s, v_index) under the exact demand constraint.
    bool admissible(int h, int s, std::size_t v_index, int a,
                    std::span<const std::uint32_t> next) const;
    /// Demand carried to successor t is next[t]; deterministic in that coordinate.
    static std::size_t successor_demand(std::span<const std::uint32_t> next, int t) { return next[t]; }
    static ExtendedCost terminal_cost(double v) noexcept { return Criterion::terminal(v); }

private:
    const CMdp* cmdp_;
    Criterion criterion_;
    std::vector<double> values_;
};

CoverMdp build_cover_mdp(const CMdp& cmdp, Criterion criterion, const ValueSpace& vspace);

/// Exact value/cost of an augmented policy from (h, s, d), memoised over
/// augmented states. Throws MissingEntry on an empty reachable entry.
class CoverEvaluator {
public:
    CoverEvaluator(const AugmentedPolicy& policy, const CMdp& cmdp, Criterion criterion);
    Evaluation evaluate(int h, int s, std::size_t d);

private:
    const AugmentedPolicy& policy_;
    const CMdp& cmdp_;
    Criterion criterion_;
    std::vector<std::optional<Evaluation>> memo_;
};

/// History policy obtained by running the augmented policy from
/// (s0, demand d0). Returns nullopt if the reachable tree exceeds max_nodes.
std::optional<HistoryPolicy> induce_history_policy(const AugmentedPolicy& policy, const CMdp& cmdp,
                                                   std::size_t d0, std::size_t max_nodes = 1u << 18);

/// Certificate via the induced history policy when small enough, otherwise
/// via cover-MDP evaluation.
Certificate certify(const AugmentedPolicy& policy, const CMdp& cmdp, Criterion criterion,
                    std::size_t d0);

/// Largest demand with root cost <= budget.
std::optional<std::size_t> select_initial_demand(const CostTable& table, int s0, double budget);

struct Step {
    int state = 0;
    int action = 0;
    double reward = 0.0;
    double cost = 0.0;
    std::size_t demand = 0; // index at this step
};

struct Trajectory {
    std::vector<Step> steps;
    int final_state = 0;
    double total_reward() const noexcept;
    double total_cost() const noexcept;
};

/// Simulates the augmented interaction for H steps from (s0, v0). Throws
/// MissingEntry if v0 is not a demand of the policy or a visited entry is empty.
Trajectory execute(const AugmentedPolicy& policy, const CMdp& cmdp, double v0, std::uint64_t seed);
Trajectory execute_index(const AugmentedPolicy& policy, const CMdp& cmdp, std::size_t d0,
                         std::uint64_t seed);

} // namespace dcmdp
