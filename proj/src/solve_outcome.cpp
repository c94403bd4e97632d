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

#include "dcmdp/solve_outcome.hpp"

#include "dcmdp/error.hpp"

#include <string>

namespace dcmdp {

std::string_view to_string(Verdict verdict) {
    return verdict == Verdict::Feasible ? "Feasible" : "Infeasible";
}

std::string_view to_string(Mode mode) {
    switch (mode) {
    case Mode::Exact: return "exact";
    case Mode::Additive: return "additive";
    case Mode::Relative: return "relative";
    }
    return "unknown";
}

std::string_view to_string(Variant variant) { return variant == Variant::Sum ? "sum" : "diff"; }

Mode parse_mode(std::string_view name) {
    if (name == "exact") return Mode::Exact;
    if (name == "additive") return Mode::Additive;
    if (name == "relative") return Mode::Relative;
    throw Error(ErrorKind::InvalidArgument, "unknown mode '" + std::string(name) + "'");
}

Variant parse_variant(std::string_view name) {
    if (name == "sum") return Variant::Sum;
    if (name == "diff" || name == "difference") return Variant::Difference;
    throw Error(ErrorKind::InvalidArgument, "unknown variant '" + std::string(name) + "'");
}

} // namespace dcmdp
