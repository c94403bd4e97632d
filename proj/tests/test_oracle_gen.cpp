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

#include "dcmdp/core/evaluation.hpp"
#include "dcmdp/error.hpp"
#include "dcmdp/exact_cover/solve_exact.hpp"
#include "dcmdp/oracle/brute_force.hpp"
#include "dcmdp/oracle/generator.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace dcmdp {
namespace {

constexpr double kHuge = 1e18;

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::InvalidArgument;
}

TEST(BruteForce, UnconstrainedEqualsBackwardInduction) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const CMdp m = testing::small_instance(seed).cmdp;
        for (CriterionKind kind : testing::kAllCriteria) {
            const BruteForceResult r = brute_force(m, make_criterion(kind), kHuge);
            ASSERT_TRUE(r.feasible);
            EXPECT_EQ(r.value, testing::optimal_value(m)) << seed;
        }
    }
}

TEST(BruteForce, AllCostsOneBudgetZero) {
    const CMdp m(1, 2, 2, 0, {1, 1, 1, 1}, {1, 2, 0, 1}, {1, 1, 1, 1});
    for (CriterionKind kind : testing::kAllCriteria) EXPECT_FALSE(brute_force(m, make_criterion(kind), 0.0).feasible);
}

TEST(BruteForce, WitnessIsFeasibleAndOptimal) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const GeneratedProblem p = testing::small_instance(seed);
        for (CriterionKind kind : testing::kAllCriteria) {
            const Criterion crit = make_criterion(kind);
            const BruteForceResult r = brute_force(p.cmdp, crit, p.budget);
            if (!r.feasible) continue;
            const Evaluation e = evaluate(p.cmdp, r.witness, crit);
            EXPECT_EQ(e.value, r.value);
            EXPECT_EQ(e.cost, r.cost);
            EXPECT_LE(e.cost, ExtendedCost(p.budget));
        }
    }
}

TEST(BruteForce, PruningDoesNotChangeTheAnswer) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const GeneratedProblem p = testing::small_instance(seed);
        for (CriterionKind kind : testing::kAllCriteria) {
            BruteForceOptions plain;
            plain.prune = false;
            const BruteForceResult a = brute_force(p.cmdp, make_criterion(kind), p.budget);
            const BruteForceResult b = brute_force(p.cmdp, make_criterion(kind), p.budget, plain);
            ASSERT_EQ(a.feasible, b.feasible);
            if (a.feasible) {
                EXPECT_EQ(a.value, b.value);
            }
            EXPECT_LE(a.policies_evaluated, b.policies_evaluated);
        }
    }
}

TEST(BruteForce, HistoryPoliciesAtLeastMatchMarkov) {
    // H = 3 so that the epoch-2 decision can depend on the epoch-0 branch.
    GeneratorSpec spec;
    spec.num_states = 2;
    spec.horizon = 3;
    spec.cost_range = {0, 3};
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        spec.seed = seed;
        const GeneratedProblem p = random_problem(spec);
        const Criterion crit = make_criterion(CriterionKind::Expectation);
        double markov = -1e300;
        for (int code = 0; code < 64; ++code) {
            std::vector<int> table(6);
            for (int i = 0; i < 6; ++i) table[i] = code >> i & 1;
            const Evaluation e = evaluate(p.cmdp, HistoryPolicy::markov(2, table), crit);
            if (e.cost <= ExtendedCost(p.budget)) markov = std::max(markov, e.value);
        }
        const BruteForceResult r = brute_force(p.cmdp, crit, p.budget);
        if (markov > -1e300) {
            ASSERT_TRUE(r.feasible);
            EXPECT_GE(r.value, markov);
        }
    }
}

TEST(BruteForce, DecisionNodeCap) {
    GeneratorSpec spec;
    spec.num_states = 3;
    spec.horizon = 4;
    const CMdp m = random_cmdp(spec);
    EXPECT_GT(decision_nodes(m), 20u);
    EXPECT_EQ(kind_of([&] { brute_force(m, make_criterion(CriterionKind::Expectation), 1.0); }),
              ErrorKind::CapExceeded);
    EXPECT_EQ(decision_nodes(testing::chain({0, 0, 0})), 3u);
}

TEST(Generator, SameSeedSameInstance) {
    GeneratorSpec spec;
    spec.seed = 99;
    spec.num_states = 3;
    spec.transition_sparsity = 0.5;
    const CMdp a = random_cmdp(spec), b = random_cmdp(spec);
    EXPECT_EQ(a.transitions(), b.transitions());
    EXPECT_EQ(a.rewards(), b.rewards());
    EXPECT_EQ(a.costs(), b.costs());
    spec.seed = 100;
    EXPECT_NE(random_cmdp(spec).transitions(), a.transitions());
}

TEST(Generator, SingleStateIsPointMass) {
    GeneratorSpec spec;
    spec.num_states = 1;
    spec.horizon = 3;
    const CMdp m = random_cmdp(spec);
    for (double p : m.transitions()) EXPECT_EQ(p, 1.0);
}

TEST(Generator, RowsAreDistributionsAndValuesIntegers) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        GeneratorSpec spec;
        spec.seed = seed;
        spec.num_states = 1 + seed % 5;
        spec.num_actions = 1 + seed % 3;
        spec.horizon = 1 + seed % 4;
        spec.transition_sparsity = 0.1 + 0.9 * (seed % 10) / 9.0;
        spec.probability_denominator = 8;
        const CMdp m = random_cmdp(spec);
        const int S = m.num_states();
        for (int h = 0; h < m.horizon(); ++h)
            for (int s = 0; s < S; ++s)
                for (int a = 0; a < m.num_actions(); ++a) {
                    double total = 0;
                    for (double p : m.transition(h, s, a)) total += p;
                    EXPECT_NEAR(total, 1.0, 1e-9);
                    EXPECT_EQ(m.reward(h, s, a), std::floor(m.reward(h, s, a)));
                    EXPECT_GE(m.cost(h, s, a), 0.0);
                    EXPECT_LE(m.cost(h, s, a), 2.0);
                }
        const GeneratedProblem p = random_problem(spec);
        EXPECT_GE(p.budget, 0.0);
        EXPECT_LE(p.budget, 4.0);
    }
}

TEST(Generator, RejectsBadSpecs) {
    GeneratorSpec spec;
    spec.num_states = 0;
    EXPECT_EQ(kind_of([&] { random_cmdp(spec); }), ErrorKind::InvalidArgument);
    spec = {};
    spec.transition_sparsity = 0.0;
    EXPECT_EQ(kind_of([&] { random_cmdp(spec); }), ErrorKind::InvalidArgument);
    spec = {};
    spec.reward_range = {3, 1};
    EXPECT_EQ(kind_of([&] { random_cmdp(spec); }), ErrorKind::InvalidArgument);
}

TEST(Generator, DeterministicInstancesCriteriaCoincide) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        GeneratorSpec spec;
        spec.seed = seed;
        spec.num_states = 3;
        spec.horizon = 3;
        spec.transition_sparsity = 1e-9; // one successor per row
        const CMdp m = random_cmdp(spec);
        std::mt19937_64 rng(seed);
        for (int k = 0; k < 10; ++k) {
            const HistoryPolicy pi = testing::random_markov(m, rng);
            const ExtendedCost e = evaluate_cost(m, pi, make_criterion(CriterionKind::Expectation));
            const ExtendedCost s = evaluate_cost(m, pi, make_criterion(CriterionKind::AlmostSure));
            const ExtendedCost a = evaluate_cost(m, pi, make_criterion(CriterionKind::Anytime));
            EXPECT_EQ(e, s);
            EXPECT_EQ(a, s); // costs are non-negative
        }
    }
}

TEST(Knapsack, TwoItems) {
    const KnapsackProblem k = knapsack_instance({2, 3}, {3, 4}, 4);
    EXPECT_EQ(k.criterion.kind(), CriterionKind::AlmostSure);
    EXPECT_EQ(k.budget, 4.0);
    EXPECT_EQ(k.cmdp.horizon(), 2);
    EXPECT_EQ(k.cmdp.num_states(), 1);
    EXPECT_EQ(brute_force(k.cmdp, k.criterion, k.budget).value, 4.0);
    EXPECT_EQ(solve_exact(k.cmdp, k.criterion, k.budget).certificate->value, 4.0);
}

TEST(Knapsack, ZeroCapacitySkipsEverything) {
    const KnapsackProblem k = knapsack_instance({2, 3, 1}, {3, 4, 5}, 0);
    const SolveOutcome out = solve_exact(k.cmdp, k.criterion, k.budget);
    ASSERT_TRUE(out.feasible());
    EXPECT_EQ(out.certificate->value, 0.0);
}

TEST(Knapsack, TwelveItemsMatchWeightDp) {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> weight(1, 10), value(1, 20);
    for (int trial = 0; trial < 3; ++trial) {
        std::vector<int> w(12), v(12);
        for (int i = 0; i < 12; ++i) {
            w[i] = weight(rng);
            v[i] = value(rng);
        }
        const KnapsackProblem k = knapsack_instance(w, v, 25);
        EXPECT_EQ(solve_exact(k.cmdp, k.criterion, k.budget).certificate->value, testing::knapsack_dp(w, v, 25));
        // all three criteria agree on a deterministic chain
        for (CriterionKind kind : testing::kAllCriteria)
            EXPECT_EQ(solve_exact(k.cmdp, make_criterion(kind), k.budget).certificate->value,
                      testing::knapsack_dp(w, v, 25));
    }
}

TEST(Knapsack, Preconditions) {
    EXPECT_EQ(kind_of([] { knapsack_instance({1, 2}, {1}, 3); }), ErrorKind::LengthMismatch);
    EXPECT_EQ(kind_of([] { knapsack_instance({}, {}, 3); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { knapsack_instance({0}, {1}, 3); }), ErrorKind::InvalidArgument);
    // a negative capacity is merely infeasible
    const KnapsackProblem k = knapsack_instance({1}, {1}, -1);
    EXPECT_FALSE(solve_exact(k.cmdp, k.criterion, k.budget).feasible());
}

} // namespace
} // namespace dcmdp
