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

#include "dcmdp/core/criterion.hpp"

#include "dcmdp/error.hpp"

#include <cassert>

namespace dcmdp {

ExtendedCost Criterion::fold(std::span<const double> probs,
                             std::span<const ExtendedCost> costs) const {
    assert(probs.size() == costs.size());
    ExtendedCost g(0.0);
    for (std::size_t i = probs.size(); i-- > 0;) {
        if (probs[i] <= 0.0) continue;
        g = step(probs[i], costs[i], g);
    }
    return g;
}

std::string_view to_string(CriterionKind kind) {
    switch (kind) {
    case CriterionKind::Expectation: return "expectation";
    case CriterionKind::AlmostSure: return "almost_sure";
    case CriterionKind::Anytime: return "anytime";
    }
    return "unknown";
}

CriterionKind parse_criterion(std::string_view name) {
    if (name == "expectation") return CriterionKind::Expectation;
    if (name == "almost_sure") return CriterionKind::AlmostSure;
    if (name == "anytime") return CriterionKind::Anytime;
    throw Error(ErrorKind::InvalidArgument, "unknown criterion '" + std::string(name) + "'");
}

} // namespace dcmdp
