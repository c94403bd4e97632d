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
#include "dcmdp/core/extended_cost.hpp"
#include "dcmdp/core/history_policy.hpp"

#include <cstddef>

namespace dcmdp {

struct BruteForceOptions {
    std::size_t max_decision_nodes = 20;
    bool prune = true;
};

struct BruteForceResult {
    bool feasible = false;
    double value = 0.0;      // optimal feasible value (meaningless if infeasible)
    ExtendedCost cost;       // cost of the witness
    HistoryPolicy witness;
    std::size_t policies_evaluated = 0;
};

/// Upper bound on the decision nodes one policy's reachable history tree
/// can have: Σ_h Π_{k<h} (largest support at epoch k).
std::size_t decision_nodes(const CMdp& cmdp);

/// Exhaustive search over deterministic history-dependent policies, each
/// evaluated with core's evaluate(). Partial assignments are pruned by a
/// cost lower bound when the criterion is prefix-monotone. Ties keep the
/// first policy found. Throws CapExceeded above max_decision_nodes.
BruteForceResult brute_force(const CMdp& cmdp, Criterion criterion, double budget,
                             const BruteForceOptions& options = {});

} // namespace dcmdp
