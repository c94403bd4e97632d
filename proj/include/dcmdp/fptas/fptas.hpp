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
#include "dcmdp/exact_cover/value_space.hpp"
#include "dcmdp/solve_outcome.hpp"

namespace dcmdp {

struct SolveOptions {
    Mode mode = Mode::Exact;
    Variant variant = Variant::Sum;
    double epsilon = 0.0;                  // ignored in exact mode
    std::size_t exact_cap = kDefaultValueCap;
};

/// Builds the grid for the mode, runs the Bellman recursion for the variant,
/// and returns the largest initial demand whose root cost fits the budget,
/// with independently recomputed certificates.
SolveOutcome solve(const CMdp& cmdp, Criterion criterion, double budget, const SolveOptions& options);

/// Grid a solve with these options would use.
ValueGrid solve_grid(const CMdp& cmdp, const SolveOptions& options);

} // namespace dcmdp
