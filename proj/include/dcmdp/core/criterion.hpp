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

#include <span>
#include <string>
#include <string_view>

namespace dcmdp {

enum class CriterionKind { Expectation, AlmostSure, Anytime };

/// A time-space-recursive cost criterion given by its (alpha, beta) pair.
///
/// The cost of a policy at (h, s) is c_h(s, a) + f(C_{h+1}(.)), where f folds
/// the successor costs right to left: g = 0; g = alpha(beta(p_t, C_t), g).
class Criterion {
public:
    explicit constexpr Criterion(CriterionKind kind) noexcept : kind_(kind) {}

    constexpr CriterionKind kind() const noexcept { return kind_; }

    constexpr ExtendedCost alpha(ExtendedCost x, ExtendedCost y) const noexcept {
        switch (kind_) {
        case CriterionKind::Expectation: return x + y;
        case CriterionKind::AlmostSure: return max(x, y);
        case CriterionKind::Anytime: return max(ExtendedCost(0.0), max(x, y));
        }
        return kInfiniteCost;
    }

    constexpr ExtendedCost beta(double p, ExtendedCost z) const noexcept {
        if (p <= 0.0) return ExtendedCost(0.0); // β(0, ∞) = 0 in every criterion
        if (kind_ == CriterionKind::Expectation)
            return z.is_infinite() ? kInfiniteCost : ExtendedCost(p * z.value());
        return z;
    }

    /// One fold step: alpha(beta(p, cost), tail).
    constexpr ExtendedCost step(double p, ExtendedCost cost, ExtendedCost tail) const noexcept {
        return alpha(beta(p, cost), tail);
    }

    /// f over all successor states. Zero-probability successors are skipped,
    /// which is exact because alpha(beta(0, .), y) = y on every reachable tail.
    ExtendedCost fold(std::span<const double> probs, std::span<const ExtendedCost> costs) const;

    /// Terminal cover cost χ{v <= 0}.
    static constexpr ExtendedCost terminal(double demand) noexcept {
        return characteristic(demand <= 0.0);
    }

    friend constexpr bool operator==(Criterion a, Criterion b) noexcept {
        return a.kind_ == b.kind_;
    }

private:
    CriterionKind kind_;
};

constexpr Criterion make_criterion(CriterionKind kind) noexcept { return Criterion(kind); }

std::string_view to_string(CriterionKind kind);
/// Accepts "expectation", "almost_sure", "anytime"; throws Error{InvalidArgument}.
CriterionKind parse_criterion(std::string_view name);

} // namespace dcmdp
