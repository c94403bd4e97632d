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

#include <cstdint>
#include <vector>

namespace dcmdp {

struct IntRange {
    int lo = 0;
    int hi = 0;
};

struct GeneratorSpec {
    std::uint64_t seed = 0;
    int num_states = 2;
    int num_actions = 2;
    int horizon = 2;
    IntRange reward_range{0, 3};
    IntRange cost_range{0, 2};
    IntRange budget_range{0, 4};
    double transition_sparsity = 1.0; // chance each state enters a row's support
    /// Probabilities are multiples of 1/denominator. Powers of two keep all
    /// value arithmetic exact in binary64.
    int probability_denominator = 4;
};

struct GeneratedProblem {
    CMdp cmdp;
    double budget;
};

/// Seeded, reproducible instance. Throws InvalidArgument on a bad spec.
CMdp random_cmdp(const GeneratorSpec& spec);
/// Instance plus a budget drawn from budget_range (same random stream).
GeneratedProblem random_problem(const GeneratorSpec& spec);

struct KnapsackProblem {
    CMdp cmdp;
    Criterion criterion;
    double budget;
};

/// One item per epoch, S = 1, actions skip (0) / take (1). Throws
/// LengthMismatch for unequal lists, InvalidArgument for empty or
/// non-positive entries.
KnapsackProblem knapsack_instance(const std::vector<int>& weights, const std::vector<int>& values,
                                  int capacity);

} // namespace dcmdp
