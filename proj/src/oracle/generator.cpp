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

#include "dcmdp/oracle/generator.hpp"

#include "dcmdp/error.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace dcmdp {

namespace {

void validate(const GeneratorSpec& spec) {
    if (spec.num_states <= 0 || spec.num_actions <= 0 || spec.horizon <= 0)
        throw Error(ErrorKind::InvalidArgument, "generator dimensions must be positive");
    if (spec.reward_range.lo > spec.reward_range.hi || spec.cost_range.lo > spec.cost_range.hi ||
        spec.budget_range.lo > spec.budget_range.hi)
        throw Error(ErrorKind::InvalidArgument, "empty generator range");
    if (!(spec.transition_sparsity > 0.0 && spec.transition_sparsity <= 1.0))
        throw Error(ErrorKind::InvalidArgument, "transition sparsity must lie in (0, 1]");
    if (spec.probability_denominator <= 0)
        throw Error(ErrorKind::InvalidArgument, "probability denominator must be positive");
}

CMdp draw_cmdp(const GeneratorSpec& spec, std::mt19937_64& rng) {
    const int S = spec.num_states, A = spec.num_actions, H = spec.horizon;
    const int q = spec.probability_denominator;
    std::uniform_int_distribution<int> reward(spec.reward_range.lo, spec.reward_range.hi);
    std::uniform_int_distribution<int> cost(spec.cost_range.lo, spec.cost_range.hi);
    std::bernoulli_distribution keep(spec.transition_sparsity);
    std::uniform_int_distribution<int> any_state(0, S - 1);

    const std::size_t rows = static_cast<std::size_t>(H) * S * A;
    std::vector<double> transitions(rows * S, 0.0), rewards(rows), costs(rows);
    std::vector<int> support, units(S);
    for (std::size_t row = 0; row < rows; ++row) {
        support.clear();
        for (int t = 0; t < S; ++t)
            if (keep(rng)) support.push_back(t);
        if (support.empty()) support.push_back(any_state(rng));
        std::shuffle(support.begin(), support.end(), rng);
        if (static_cast<int>(support.size()) > q) support.resize(q);
        std::sort(support.begin(), support.end());

        // one unit per supported state, the rest spread uniformly
        std::fill(units.begin(), units.end(), 0);
        for (int t : support) units[t] = 1;
        std::uniform_int_distribution<std::size_t> pick(0, support.size() - 1);
        for (int k = static_cast<int>(support.size()); k < q; ++k) ++units[support[pick(rng)]];
        for (int t = 0; t < S; ++t)
            transitions[row * S + t] = static_cast<double>(units[t]) / q;

        rewards[row] = reward(rng);
        costs[row] = cost(rng);
    }
    return CMdp(S, A, H, 0, std::move(transitions), std::move(rewards), std::move(costs));
}

} // namespace

CMdp random_cmdp(const GeneratorSpec& spec) {
    validate(spec);
    std::mt19937_64 rng(spec.seed);
    return draw_cmdp(spec, rng);
}

GeneratedProblem random_problem(const GeneratorSpec& spec) {
    validate(spec);
    std::mt19937_64 rng(spec.seed);
    CMdp cmdp = draw_cmdp(spec, rng);
    std::uniform_int_distribution<int> budget(spec.budget_range.lo, spec.budget_range.hi);
    const double b = budget(rng);
    return {std::move(cmdp), b};
}

KnapsackProblem knapsack_instance(const std::vector<int>& weights, const std::vector<int>& values,
                                  int capacity) {
    if (weights.size() != values.size())
        throw Error(ErrorKind::LengthMismatch, "weights and values differ in length");
    if (weights.empty()) throw Error(ErrorKind::InvalidArgument, "knapsack needs at least one item");
    if (std::any_of(weights.begin(), weights.end(), [](int w) { return w <= 0; }) ||
        std::any_of(values.begin(), values.end(), [](int v) { return v <= 0; }))
        throw Error(ErrorKind::InvalidArgument, "knapsack weights and values must be positive");
    const int n = static_cast<int>(weights.size());
    std::vector<double> transitions(static_cast<std::size_t>(n) * 2, 1.0);
    std::vector<double> rewards, costs;
    for (int h = 0; h < n; ++h) {
        rewards.insert(rewards.end(), {0.0, static_cast<double>(values[h])});
        costs.insert(costs.end(), {0.0, static_cast<double>(weights[h])});
    }
    return {CMdp(1, 2, n, 0, std::move(transitions), std::move(rewards), std::move(costs)),
            make_criterion(CriterionKind::AlmostSure), static_cast<double>(capacity)};
}

} // namespace dcmdp
