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

#include "dcmdp/core/extended_cost.hpp"
#include "dcmdp/exact_cover/augmented_policy.hpp"
#include "dcmdp/rounding/value_grid.hpp"

#include <optional>
#include <string_view>

namespace dcmdp {

enum class Verdict { Feasible, Infeasible };
enum class Mode { Exact, Additive, Relative };

/// Exact value and criterion cost of the returned policy, recomputed
/// independently of the DP table.
struct Certificate {
    double value = 0.0;
    ExtendedCost cost;
};

struct SolveOutcome {
    Verdict verdict = Verdict::Infeasible;
    Mode mode = Mode::Exact;
    Variant variant = Variant::Sum;
    double epsilon = 0.0;
    std::optional<std::size_t> initial_index;
    std::optional<GridPoint> initial_demand;
    AugmentedPolicy policy;
    CostTable table;
    std::optional<Certificate> certificate;

    bool feasible() const noexcept { return verdict == Verdict::Feasible; }
};

std::string_view to_string(Verdict verdict);
std::string_view to_string(Mode mode);
std::string_view to_string(Variant variant);
Mode parse_mode(std::string_view name);
Variant parse_variant(std::string_view name);

} // namespace dcmdp
