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

/// Exact covering solve over the full value space: backward induction on the
/// cover MDP, then the largest initial demand whose cost fits the budget.
/// Throws CapExceeded when the value space (or one enumeration) is too large.
SolveOutcome solve_exact(const CMdp& cmdp, Criterion criterion, double budget,
                         std::size_t cap = kDefaultValueCap);

} // namespace dcmdp
