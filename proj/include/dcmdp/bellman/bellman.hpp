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

#include "dcmdp/bellman/partial_sums.hpp"
#include "dcmdp/core/cmdp.hpp"
#include "dcmdp/core/criterion.hpp"
#include "dcmdp/exact_cover/augmented_policy.hpp"
#include "dcmdp/rounding/value_grid.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace dcmdp {

struct InnerChoice {
    std::vector<std::uint32_t> demands; // one index per state
    ExtendedCost cost;
};

/// Exact inner minimisation for one action: min over demand vectors in V^S
/// (zero-probability successors fixed to index 0) of the folded successor
/// cost, subject to r + Σ_t P(t) v_t >= target. `next` holds C_{h+1}(t, ·)
/// over `values`. Exhaustive; meant for small V. Ties go to the
/// lexicographically smallest index vector.
InnerChoice exact_inner_min(const CMdp& cmdp, Criterion criterion, int h, int s, int a,
                            double target, const CostTable& next, std::span<const double> values);

struct BellmanChoice {
    int action = -1;
    std::vector<std::uint32_t> demands;
    ExtendedCost cost = kInfiniteCost;
};

/// One rounded Bellman update at (h, s, demand index d) reading layer h+1 of
/// `table`. Lowest action, then smallest demand vector, wins ties.
BellmanChoice approx_bellman_update(int h, int s, std::size_t d, const CostTable& table,
                                    const ValueGrid& grid, const CMdp& cmdp, Criterion criterion);

struct SolveTables {
    AugmentedPolicy policy;
    CostTable table;
};

/// Backward induction with one rounded update per (h, s, demand).
SolveTables approx_solve(const CMdp& cmdp, Criterion criterion, const ValueGrid& grid);

/// Difference recursion: one table per (h, s, a) serves every demand at once.
SolveTables diff_solve(const CMdp& cmdp, Criterion criterion, const ValueGrid& grid);

SolveTables bellman_solve(const CMdp& cmdp, Criterion criterion, const ValueGrid& grid,
                          Variant variant);

/// A maximal block of consecutive demand indices with equal next-epoch cost.
struct CostRun {
    std::uint32_t begin, end; // inclusive end
    ExtendedCost cost;
};

/// ĝ over a PartialSumTable for a given base case on the final layer.
/// Exposed for the recursion-equivalence tests.
class InnerDp {
public:
    InnerDp(const PartialSumTable& sets, std::span<const double> probs, const CostTable& table,
            int next_h, Criterion criterion);

    /// base[i] is the cost at final position i (0 or ∞).
    void run(std::span<const ExtendedCost> base);
    /// Same, for a base that is 0 exactly on final positions >= first (sum
    /// variant) or < first (difference variant).
    void run_threshold(std::size_t first);

    ExtendedCost value(int t, std::size_t i) const noexcept { return g_[t][i]; }
    /// Argmin demand vector from position i of layer 0.
    std::vector<std::uint32_t> trace(std::size_t i) const;

private:
    void sweep();

    const PartialSumTable& sets_;
    std::span<const double> probs_;
    Criterion criterion_;
    int num_states_;
    std::vector<std::vector<CostRun>> runs_;
    std::vector<std::vector<ExtendedCost>> g_;
    std::vector<std::vector<std::uint32_t>> arg_;
};

} // namespace dcmdp
