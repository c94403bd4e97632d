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

namespace dcmdp {

struct Evaluation {
    double value = 0.0;
    ExtendedCost cost;
};

/// Exact value and criterion cost of a deterministic policy. Markov policies
/// are evaluated by backward induction, others by walking the reachable
/// history tree. Throws Error{UndefinedAction} on a missing reachable entry.
Evaluation evaluate(const CMdp& cmdp, const HistoryPolicy& policy, Criterion criterion);

double evaluate_value(const CMdp& cmdp, const HistoryPolicy& policy);
ExtendedCost evaluate_cost(const CMdp& cmdp, const HistoryPolicy& policy, Criterion criterion);

struct MinCostResult {
    HistoryPolicy policy; // Markov
    ExtendedCost cost;
};

/// Unconstrained cost minimisation by backward induction; lowest action wins ties.
MinCostResult min_cost_policy(const CMdp& cmdp, Criterion criterion);

} // namespace dcmdp
