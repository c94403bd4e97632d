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

// Independent oracles and small builders shared by the test binaries. Nothing
// here calls into the DP code paths under test.

#include "dcmdp/core/cmdp.hpp"
#include "dcmdp/core/criterion.hpp"
#include "dcmdp/core/history_policy.hpp"
#include "dcmdp/oracle/generator.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <vector>

namespace dcmdp::testing {

/// S = 1, A = 1, deterministic chain with the given per-epoch costs/rewards.
inline CMdp chain(std::vector<double> costs, std::vector<double> rewards = {}) {
    const int H = static_cast<int>(costs.size());
    if (rewards.empty()) rewards.assign(H, 0.0);
    return CMdp(1, 1, H, 0, std::vector<double>(H, 1.0), std::move(rewards), std::move(costs));
}

/// H = 2, S = 3, A = 1: state 0 branches with probability p to states 1 and 2.
inline CMdp branch(double r0, double c0, double p, double r1, double c1, double r2, double c2) {
    std::vector<double> P(2 * 3 * 3, 0.0);
    P[0 * 3 + 1] = p;
    P[0 * 3 + 2] = 1.0 - p;
    P[1 * 3 + 1] = 1.0;
    P[2 * 3 + 2] = 1.0;
    for (int s = 0; s < 3; ++s) P[(3 + s) * 3 + s] = 1.0;
    std::vector<double> r{r0, 0, 0, 0, r1, r2};
    std::vector<double> c{c0, 0, 0, 0, c1, c2};
    return CMdp(3, 1, 2, 0, std::move(P), std::move(r), std::move(c));
}

struct Path {
    double probability = 1.0;
    std::vector<double> rewards, costs;
};

/// Every supported trajectory of a history policy, by plain recursion.
inline std::vector<Path> trajectories(const CMdp& m, const HistoryPolicy& pi) {
    std::vector<Path> out;
    History hist{m.initial_state()};
    Path cur;
    std::function<void(int)> walk = [&](int h) {
        if (h == m.horizon()) {
            out.push_back(cur);
            return;
        }
        const int s = hist.back();
        const int a = *pi.action(hist);
        for (int t = 0; t < m.num_states(); ++t) {
            const double p = m.probability(h, s, a, t);
            if (p <= 0.0) continue;
            const Path saved = cur;
            cur.probability *= p;
            cur.rewards.push_back(m.reward(h, s, a));
            cur.costs.push_back(m.cost(h, s, a));
            hist.push_back(a);
            hist.push_back(t);
            walk(h + 1);
            hist.resize(hist.size() - 2);
            cur = saved;
        }
    };
    walk(0);
    return out;
}

inline double sum(const std::vector<double>& xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s;
}

inline double expected_reward(const std::vector<Path>& paths) {
    double v = 0.0;
    for (const auto& p : paths) v += p.probability * sum(p.rewards);
    return v;
}

inline double expected_cost(const std::vector<Path>& paths) {
    double v = 0.0;
    for (const auto& p : paths) v += p.probability * sum(p.costs);
    return v;
}

inline double max_total_cost(const std::vector<Path>& paths) {
    double v = -std::numeric_limits<double>::infinity();
    for (const auto& p : paths) v = std::max(v, sum(p.costs));
    return v;
}

inline double max_prefix_cost(const std::vector<Path>& paths) {
    double v = -std::numeric_limits<double>::infinity();
    for (const auto& p : paths) {
        double run = 0.0;
        for (double c : p.costs) v = std::max(v, run += c);
    }
    return v;
}

/// Random Markov policy as a history policy.
inline HistoryPolicy random_markov(const CMdp& m, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, m.num_actions() - 1);
    std::vector<int> table(static_cast<std::size_t>(m.horizon()) * m.num_states());
    for (int& a : table) a = pick(rng);
    return HistoryPolicy::markov(m.num_states(), std::move(table));
}

/// Unconstrained optimal value by textbook backward induction.
inline double optimal_value(const CMdp& m) {
    std::vector<double> next(m.num_states(), 0.0), cur(m.num_states());
    for (int h = m.horizon() - 1; h >= 0; --h) {
        for (int s = 0; s < m.num_states(); ++s) {
            double best = -std::numeric_limits<double>::infinity();
            for (int a = 0; a < m.num_actions(); ++a) {
                double q = m.reward(h, s, a);
                for (int t = 0; t < m.num_states(); ++t) q += m.probability(h, s, a, t) * next[t];
                best = std::max(best, q);
            }
            cur[s] = best;
        }
        next = cur;
    }
    return next[m.initial_state()];
}

struct Outcome {
    double value;
    ExtendedCost cost;
};

/// (value, cost) of every deterministic history-dependent policy from (h, s),
/// built bottom-up: a policy at a node is an action plus an independent
/// sub-policy per supported successor. Exponential; tiny instances only.
inline std::vector<Outcome> all_outcomes(const CMdp& m, Criterion crit, int h, int s) {
    if (h == m.horizon()) return {{0.0, ExtendedCost(0.0)}};
    std::vector<Outcome> out;
    for (int a = 0; a < m.num_actions(); ++a) {
        // partial combinations over successors, folded right to left at the end
        struct Partial {
            double value;
            std::vector<ExtendedCost> costs;
        };
        std::vector<Partial> acc{{m.reward(h, s, a), {}}};
        for (int t = 0; t < m.num_states(); ++t) {
            const double p = m.probability(h, s, a, t);
            std::vector<Partial> grown;
            if (p <= 0.0) {
                for (auto part : acc) {
                    part.costs.push_back(ExtendedCost(0.0));
                    grown.push_back(std::move(part));
                }
            } else {
                const auto sub = all_outcomes(m, crit, h + 1, t);
                for (const auto& part : acc)
                    for (const auto& o : sub) {
                        Partial next = part;
                        next.value += p * o.value;
                        next.costs.push_back(o.cost);
                        grown.push_back(std::move(next));
                    }
            }
            acc = std::move(grown);
        }
        for (const auto& part : acc) {
            ExtendedCost g(0.0);
            for (int t = m.num_states() - 1; t >= 0; --t)
                g = crit.alpha(crit.beta(m.probability(h, s, a, t), part.costs[t]), g);
            out.push_back({part.value, ExtendedCost(m.cost(h, s, a)) + g});
        }
    }
    return out;
}

/// Weight-indexed 0/1 knapsack DP.
inline int knapsack_dp(const std::vector<int>& w, const std::vector<int>& v, int capacity) {
    std::vector<int> best(capacity + 1, 0);
    for (std::size_t i = 0; i < w.size(); ++i)
        for (int c = capacity; c >= w[i]; --c) best[c] = std::max(best[c], best[c - w[i]] + v[i]);
    return best[capacity];
}

/// The seeded small-instance family used by the oracle cross-checks:
/// S <= 3, A <= 2, H <= 3, rewards in [0,3], costs in [0,2], budgets in [0,4].
inline GeneratedProblem small_instance(std::uint64_t seed) {
    GeneratorSpec spec;
    spec.seed = seed;
    spec.num_states = 1 + static_cast<int>(seed % 3);
    spec.num_actions = 1 + static_cast<int>((seed / 3) % 2);
    spec.horizon = 1 + static_cast<int>((seed / 6) % 3);
    spec.transition_sparsity = 0.6;
    return random_problem(spec);
}

inline constexpr CriterionKind kAllCriteria[] = {CriterionKind::Expectation, CriterionKind::AlmostSure,
                                                 CriterionKind::Anytime};

} // namespace dcmdp::testing
