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
#include "dcmdp/exact_cover/augmented_policy.hpp"
#include "dcmdp/oracle/generator.hpp"
#include "dcmdp/solve_outcome.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

// JSON file formats. All indices are 0-based; decimals are written in
// shortest round-trip form so save/load is bit-exact.
namespace dcmdp::io {

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

/// {"horizon", "num_states", "num_actions", "initial_state",
///  "transitions": [H][S][A][S], "rewards": [H][S][A], "costs": [H][S][A]}
CMdp parse_instance(std::string_view text);
std::string serialize_instance(const CMdp& cmdp);
CMdp load_instance(const std::filesystem::path& path);

struct Problem {
    CriterionKind criterion = CriterionKind::Expectation;
    double budget = 0.0;
    std::optional<double> epsilon;
    std::optional<Mode> mode;
    std::optional<Variant> variant;
};

/// {"criterion": "expectation"|"almost_sure"|"anytime", "budget", optional
///  "epsilon", "mode", "variant"}
Problem parse_problem(std::string_view text);
std::string serialize_problem(const Problem& problem);
Problem load_problem(const std::filesystem::path& path);

struct PolicyFile {
    AugmentedPolicy policy;
    int initial_state = 0;
    std::optional<std::size_t> initial_index;
};

/// Grid parameters (identity grids list their values), dimensions, initial
/// demand index and one [h, s, d, action, [next demand indices]] per entry.
std::string serialize_policy(const AugmentedPolicy& policy, int initial_state,
                             std::optional<std::size_t> initial_index);
PolicyFile parse_policy(std::string_view text);
PolicyFile load_policy(const std::filesystem::path& path);

/// Throws Error{DimensionMismatch} if the policy was not built for this instance.
void check_compatible(const PolicyFile& policy, const CMdp& cmdp);

GeneratorSpec parse_generator_spec(std::string_view text);
std::string serialize_generator_spec(const GeneratorSpec& spec);

} // namespace dcmdp::io
