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

#include "dcmdp/bellman/bellman.hpp"
#include "dcmdp/bellman/partial_sums.hpp"
#include "dcmdp/error.hpp"
#include "dcmdp/exact_cover/solve_exact.hpp"
#include "dcmdp/exact_cover/value_space.hpp"
#include "recursion_oracle.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <optional>

namespace dcmdp {
namespace {

constexpr Criterion kExp = make_criterion(CriterionKind::Expectation);

std::vector<double> values_of(const std::vector<GridPoint>& pts) {
    std::vector<double> out;
    for (const auto& p : pts) out.push_back(p.value);
    return out;
}

ValueGrid exact_grid(const CMdp& m) { return ValueGrid::identity(value_space(m).all, m.num_states()); }

TEST(InputSets, SumStartsAtReward) {
    const CMdp m = testing::chain({0}, {1});
    const ValueGrid g = ValueGrid::identity({0.0, 1.0}, 1);
    const PartialSumTable sets = input_sets(0, 0, 0, g, m, Variant::Sum);
    EXPECT_EQ(values_of(sets.layers[0]), std::vector<double>{1.0});
    EXPECT_EQ(values_of(sets.layers[1]), (std::vector<double>{1.0, 2.0}));
    EXPECT_EQ(sets.link(0, 0, 1), 1u);
}

TEST(InputSets, ZeroProbabilitySuccessorOnlyRounds) {
    const CMdp m = testing::branch(1, 0, 1.0, 2, 0, 3, 0); // P(2 | 0) = 0
    const ValueGrid g = ValueGrid::additive(1.0, m);
    const PartialSumTable sets = input_sets(0, 0, 0, g, m, Variant::Sum);
    EXPECT_EQ(sets.choices(0), 1u); // state 0 itself is unreachable
    EXPECT_EQ(sets.choices(2), 1u);
    EXPECT_EQ(values_of(sets.layers[3]), values_of(sets.layers[2]));
    for (std::size_t i = 0; i < sets.layers[2].size(); ++i) EXPECT_EQ(sets.link(2, i, 0), i);
}

TEST(InputSets, AdditiveAdvanceRoundsDown) {
    const ValueGrid g = ValueGrid::restore(GridScheme::Additive, 1.0, 0.5, -4, 4, 1);
    EXPECT_EQ(g.advance(g.round_down(1.0), 0.5, 1.5).value, 1.5);
}

TEST(InputSets, DifferenceStartsAtEveryDemand) {
    const CMdp m = testing::small_instance(23).cmdp;
    const ValueGrid g = ValueGrid::additive(1.0, m);
    const PartialSumTable sets = input_sets(0, 0, 0, g, m, Variant::Difference);
    EXPECT_EQ(sets.layers[0].size(), g.demands().size());
}

TEST(InputSets, LinkCap) {
    const CMdp m = testing::small_instance(47).cmdp;
    EXPECT_THROW(input_sets(0, 0, 0, ValueGrid::additive(0.1, m), m, Variant::Sum, 10), Error);
}

TEST(ExactInnerMin, PicksTheOnlyFeasibleDemand) {
    const CMdp m = testing::chain({0, 0}, {0, 0});
    const std::vector<double> values{0, 1, 2, 3};
    CostTable next(2, 1, 4);
    for (std::size_t d = 0; d < 4; ++d) next.at(1, 0, d) = values[d] <= 2 ? ExtendedCost(0.0) : kInfiniteCost;
    const InnerChoice c = exact_inner_min(m, kExp, 0, 0, 0, 2.0, next, values);
    EXPECT_EQ(c.cost, ExtendedCost(0.0));
    EXPECT_EQ(c.demands, std::vector<std::uint32_t>{2});
    EXPECT_EQ(exact_inner_min(m, kExp, 0, 0, 0, 4.0, next, values).cost, kInfiniteCost);
}

TEST(ExactInnerMin, TwoSuccessorsMatchPairEnumeration) {
    // state 0 -> {1, 2} with probabilities 1/4, 3/4
    const CMdp m = testing::branch(1, 0, 0.25, 2, 1, 3, 2);
    const ValueGrid g = exact_grid(m);
    const std::vector<double> values = values_of(g.demands());
    const SolveOutcome exact = solve_exact(m, kExp, 100.0);
    for (double target : values) {
        ExtendedCost want = kInfiniteCost;
        for (std::size_t i = 0; i < values.size(); ++i)
            for (std::size_t j = 0; j < values.size(); ++j)
                if (1 + 0.25 * values[i] + 0.75 * values[j] >= target)
                    want = min(want, kExp.alpha(kExp.beta(0.25, exact.table.at(1, 1, i)),
                                                kExp.beta(0.75, exact.table.at(1, 2, j))));
        EXPECT_EQ(exact_inner_min(m, kExp, 0, 0, 0, target, exact.table, values).cost, want) << target;
    }
}

TEST(ApproxUpdate, IdentityGridMatchesExactBellman) {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const GeneratedProblem p = testing::small_instance(seed);
        const ValueGrid g = exact_grid(p.cmdp);
        const SolveOutcome exact = solve_exact(p.cmdp, kExp, p.budget);
        const std::vector<double> values = values_of(g.demands());
        for (int s = 0; s < p.cmdp.num_states(); ++s)
            for (std::size_t d = 0; d < values.size(); ++d) {
                ExtendedCost want = kInfiniteCost;
                for (int a = 0; a < p.cmdp.num_actions(); ++a)
                    want = min(want, ExtendedCost(p.cmdp.cost(0, s, a)) +
                                         exact_inner_min(p.cmdp, kExp, 0, s, a, values[d], exact.table, values).cost);
                EXPECT_EQ(approx_bellman_update(0, s, d, exact.table, g, p.cmdp, kExp).cost, want);
            }
    }
}

TEST(ApproxUpdate, ImmediateRewardSufficesPicksLowestDemand) {
    const CMdp m = testing::chain({3, 0}, {5, 1});
    const ValueGrid g = ValueGrid::additive(1.0, m);
    CostTable next(2, 1, g.demands().size());
    for (std::size_t d = 0; d < g.demands().size(); ++d) next.at(1, 0, d) = ExtendedCost(0.0);
    // r + (lowest demand) = 5 - 10 already meets the target, so index 0 wins
    const std::size_t d = *g.demand_index(g.round_down(-5.0));
    const BellmanChoice c = approx_bellman_update(0, 0, d, next, g, m, kExp);
    EXPECT_EQ(c.cost, ExtendedCost(3.0));
    EXPECT_EQ(c.demands, std::vector<std::uint32_t>{0});
}

TEST(ApproxUpdate, AdditiveIsOptimistic) {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const GeneratedProblem p = testing::small_instance(seed);
        const SolveOutcome exact = solve_exact(p.cmdp, kExp, p.budget);
        const ValueGrid g = ValueGrid::additive(0.5, p.cmdp);
        const SolveTables approx = approx_solve(p.cmdp, kExp, g);
        const auto& values = exact.policy.grid().demands();
        for (int h = 0; h < p.cmdp.horizon(); ++h)
            for (int s = 0; s < p.cmdp.num_states(); ++s)
                for (std::size_t d = 0; d < values.size(); ++d) {
                    const auto k = g.demand_index(g.round_down(values[d].value));
                    ASSERT_TRUE(k);
                    EXPECT_LE(approx.table.at(h, s, *k), exact.table.at(h, s, d));
                }
    }
}

TEST(ApproxSolve, IdentityReproducesExactTables) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const GeneratedProblem p = testing::small_instance(seed);
        for (CriterionKind kind : testing::kAllCriteria) {
            const Criterion crit = make_criterion(kind);
            const ValueGrid g = exact_grid(p.cmdp);
            const SolveOutcome exact = solve_exact(p.cmdp, crit, p.budget);
            EXPECT_EQ(approx_solve(p.cmdp, crit, g).table, exact.table) << seed;
            EXPECT_EQ(diff_solve(p.cmdp, crit, g).table, exact.table) << seed;
        }
    }
}

TEST(ApproxSolve, ZeroCostsGiveZeroEntries) {
    GeneratorSpec spec;
    spec.seed = 4;
    spec.num_states = 3;
    spec.horizon = 3;
    spec.cost_range = {0, 0};
    const CMdp m = random_cmdp(spec);
    for (Variant v : {Variant::Sum, Variant::Difference}) {
        const SolveTables t = bellman_solve(m, kExp, ValueGrid::additive(0.5, m), v);
        for (int h = 0; h < m.horizon(); ++h)
            for (int s = 0; s < 3; ++s)
                for (ExtendedCost c : t.table.row(h, s))
                    if (c.is_finite()) {
                        EXPECT_EQ(c, ExtendedCost(0.0));
                    }
    }
}

class BellmanProperty : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(BellmanProperty, TablesMonotoneAndArgminsConsistent) {
    const GeneratedProblem p = testing::small_instance(GetParam());
    for (CriterionKind kind : testing::kAllCriteria) {
        const Criterion crit = make_criterion(kind);
        for (const ValueGrid& g : {ValueGrid::additive(0.5, p.cmdp), ValueGrid::relative(0.5, p.cmdp), exact_grid(p.cmdp)}) {
            for (Variant variant : {Variant::Sum, Variant::Difference}) {
                const ValueGrid grid = variant == Variant::Difference && g.scheme() == GridScheme::Relative
                                           ? ValueGrid::relative(0.5, p.cmdp, Variant::Difference)
                                           : g;
                const SolveTables t = bellman_solve(p.cmdp, crit, grid, variant);
                const auto& demands = grid.demands();
                for (int h = 0; h < p.cmdp.horizon(); ++h)
                    for (int s = 0; s < p.cmdp.num_states(); ++s)
                        for (std::size_t d = 0; d < demands.size(); ++d) {
                            const ExtendedCost c = t.table.at(h, s, d);
                            if (d > 0) {
                                EXPECT_LE(t.table.at(h, s, d - 1), c);
                            }
                            ASSERT_EQ(t.policy.has_entry(h, s, d), c.is_finite());
                            if (c.is_infinite()) continue;
                            const int a = t.policy.action(h, s, d);
                            const auto next = t.policy.next_demands(h, s, d);
                            const auto probs = p.cmdp.transition(h, s, a);
                            std::vector<ExtendedCost> costs(probs.size(), ExtendedCost(0.0));
                            GridPoint u = variant == Variant::Sum ? GridPoint{0, p.cmdp.reward(h, s, a)} : demands[d];
                            for (std::size_t k = 0; k < probs.size(); ++k) {
                                const double v = probs[k] > 0.0 ? demands[next[k]].value : 0.0;
                                if (probs[k] > 0.0) costs[k] = t.table.at(h + 1, static_cast<int>(k), next[k]);
                                u = variant == Variant::Sum ? grid.advance(u, probs[k], v) : grid.retreat(u, probs[k], v);
                            }
                            EXPECT_TRUE(variant == Variant::Sum ? grid.covers(u, demands[d])
                                                                : grid.within(u, p.cmdp.reward(h, s, a)));
                            EXPECT_EQ(ExtendedCost(p.cmdp.cost(h, s, a)) + testing::fold_from(crit, probs, costs, 0), c);
                        }
            }
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Seeds, BellmanProperty, ::testing::Range<std::uint64_t>(0, 18));

class RecursionEquivalence : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(RecursionEquivalence, EveryEntryEqualsConstrainedMinimum) {
    const GeneratedProblem p = testing::small_instance(GetParam());
    const CMdp& m = p.cmdp;
    for (CriterionKind kind : testing::kAllCriteria) {
        const Criterion crit = make_criterion(kind);
        const auto cases = testing::small_cases(m, 6);
        EXPECT_GE(cases.size(), 2u);
        for (const auto& [grid, variant] : cases) {
            EXPECT_EQ(testing::check_table(m, crit, grid, variant), "")
                << "grid " << static_cast<int>(grid.scheme()) << " variant " << static_cast<int>(variant);
            if (variant == Variant::Sum) {
                EXPECT_EQ(testing::check_inner(m, crit, grid), "");
            }
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RecursionEquivalence, ::testing::Range<std::uint64_t>(0, 18));

TEST(KnapsackInnerMin, MatchesSubsetEnumeration) {
    // Root state 0 branches to states 1..4; at h = 1 state t either idles or
    // earns 1 at cost k_t, so each successor demand is effectively 0 or 1.
    const std::vector<double> p{0.125, 0.125, 0.25, 0.5};
    const std::vector<double> k{3, 1, 4, 2};
    const int S = 5;
    std::vector<double> P(2 * S * 2 * S, 0.0), r(2 * S * 2, 0.0), c(2 * S * 2, 0.0);
    auto at = [&](int h, int s, int a) { return (h * S + s) * 2 + a; };
    for (int s = 0; s < S; ++s)
        for (int a = 0; a < 2; ++a) {
            if (s == 0)
                for (int t = 1; t < S; ++t) P[at(0, s, a) * S + t] = p[t - 1];
            else
                P[at(0, s, a) * S + s] = 1.0;
            P[at(1, s, a) * S + s] = 1.0;
            if (s > 0 && a == 1) {
                r[at(1, s, a)] = 1.0;
                c[at(1, s, a)] = k[s - 1];
            }
        }
    const CMdp m(S, 2, 2, 0, P, r, c);
    const SolveOutcome exact = solve_exact(m, kExp, 100.0);
    const ValueGrid& g = exact.policy.grid();
    const std::vector<double> values = values_of(g.demands());
    for (std::size_t d = 0; d < values.size(); ++d) {
        double want = std::numeric_limits<double>::infinity();
        for (int mask = 0; mask < 16; ++mask) {
            double got = 0, cost = 0;
            for (int i = 0; i < 4; ++i)
                if (mask >> i & 1) {
                    got += p[i];
                    cost += p[i] * k[i];
                }
            if (got >= values[d]) want = std::min(want, cost);
        }
        const InnerChoice inner = exact_inner_min(m, kExp, 0, 0, 0, values[d], exact.table, values);
        const ExtendedCost expected = std::isinf(want) ? kInfiniteCost : ExtendedCost(want);
        EXPECT_EQ(inner.cost, expected) << values[d];
        EXPECT_EQ(approx_bellman_update(0, 0, d, exact.table, g, m, kExp).cost, expected);
    }
}

TEST(DiffSolve, RelativeNegativeDifferenceHitsZeroPoint) {
    const CMdp m = testing::small_instance(5).cmdp;
    const ValueGrid g = ValueGrid::relative(0.5, m, Variant::Difference);
    const GridPoint u = g.retreat(g.demands()[1], 1.0, g.demands().back().value);
    EXPECT_EQ(u.key, ValueGrid::kZeroKey);
}

} // namespace
} // namespace dcmdp
