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

#include "dcmdp/error.hpp"

#include <algorithm>
#include <cmath>

namespace dcmdp {

namespace {

std::vector<CostRun> cost_runs(std::span<const ExtendedCost> row, std::uint32_t choices) {
    std::vector<CostRun> runs;
    for (std::uint32_t j = 0; j < choices; ++j) {
        if (!runs.empty() && runs.back().cost == row[j])
            runs.back().end = j;
        else
            runs.push_back(CostRun{j, j, row[j]});
    }
    return runs;
}

/// One layer of ĝ: g[i] = min_j α(β(p, C_j), next[link(i, j)]), lowest j on
/// ties. Inside a run the step value is non-increasing in j (links move
/// toward easier positions), so each run is probed at its end and the
/// winning run is binary-searched for its first minimiser.
template <class Link>
void relax_layer(std::size_t n, double p, const std::vector<CostRun>& runs,
                 const std::vector<ExtendedCost>& next, Criterion criterion, Link&& link,
                 std::vector<ExtendedCost>& g, std::vector<std::uint32_t>& arg) {
    g.assign(n, kInfiniteCost);
    arg.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        auto value = [&](const CostRun& r, std::uint32_t j) {
            return criterion.step(p, r.cost, next[link(i, j)]);
        };
        ExtendedCost best = kInfiniteCost;
        std::size_t best_run = 0;
        for (std::size_t r = 0; r < runs.size(); ++r) {
            const ExtendedCost v = value(runs[r], runs[r].end);
            if (v < best) {
                best = v;
                best_run = r;
            }
        }
        const CostRun& r = runs[best_run];
        std::uint32_t lo = r.begin, hi = r.end;
        while (lo < hi) {
            const std::uint32_t mid = lo + (hi - lo) / 2;
            if (value(r, mid) <= best)
                hi = mid;
            else
                lo = mid + 1;
        }
        g[i] = best;
        arg[i] = lo;
    }
}

} // namespace

InnerDp::InnerDp(const PartialSumTable& sets, std::span<const double> probs, const CostTable& table,
                 int next_h, Criterion criterion)
    : sets_(sets), probs_(probs), criterion_(criterion),
      num_states_(static_cast<int>(sets.num_choices.size())), runs_(num_states_),
      g_(num_states_ + 1), arg_(num_states_) {
    for (int t = 0; t < num_states_; ++t) runs_[t] = cost_runs(table.row(next_h, t), sets.choices(t));
}

void InnerDp::run(std::span<const ExtendedCost> base) {
    g_[num_states_].assign(base.begin(), base.end());
    sweep();
}

void InnerDp::run_threshold(std::size_t first) {
    const std::size_t n = sets_.layers[num_states_].size();
    auto& base = g_[num_states_];
    base.assign(n, kInfiniteCost);
    if (sets_.variant == Variant::Sum)
        std::fill(base.begin() + std::min(first, n), base.end(), ExtendedCost(0.0));
    else
        std::fill(base.begin(), base.begin() + std::min(first, n), ExtendedCost(0.0));
    sweep();
}

void InnerDp::sweep() {
    for (int t = num_states_ - 1; t >= 0; --t) {
        const std::uint32_t choices = sets_.choices(t);
        const std::uint32_t* links = sets_.links[t].data();
        relax_layer(sets_.layers[t].size(), probs_[t], runs_[t], g_[t + 1], criterion_,
                    [&](std::size_t i, std::uint32_t j) { return links[i * choices + j]; }, g_[t],
                    arg_[t]);
    }
}

std::vector<std::uint32_t> InnerDp::trace(std::size_t i) const {
    std::vector<std::uint32_t> demands(num_states_, 0);
    for (int t = 0; t < num_states_; ++t) {
        const std::uint32_t j = arg_[t][i];
        demands[t] = sets_.choices(t) > 1 ? j : 0;
        i = sets_.link(t, i, j);
    }
    return demands;
}

namespace {

/// Difference recursion on an additive or relative grid. Each layer is the
/// dense key interval spanned by the reachable differences (rounding is
/// monotone, so the extremes bound it); links are rounded on demand, which
/// is what removes the |V̂| factor from the forward pass.
class LazyDiffDp {
public:
    LazyDiffDp(const ValueGrid& grid, std::span<const double> probs, const CostTable& table,
               int next_h, Criterion criterion)
        : grid_(grid), probs_(probs), criterion_(criterion),
          num_states_(static_cast<int>(probs.size())), lo_(num_states_ + 1),
          points_(num_states_ + 1), runs_(num_states_), g_(num_states_ + 1), arg_(num_states_) {
        const auto& demands = grid.demands();
        const double v_lo = demands.front().value, v_hi = demands.back().value;
        lo_[0] = demands.front().key;
        points_[0] = demands;
        for (int t = 0; t < num_states_; ++t) {
            const auto& cur = points_[t];
            const double p = probs[t];
            const std::uint32_t choices = p > 0.0 ? static_cast<std::uint32_t>(demands.size()) : 1u;
            runs_[t] = cost_runs(table.row(next_h, t), choices);
            const std::int64_t lo =
                p > 0.0 ? grid.retreat(cur.front(), p, v_hi).key : cur.front().key;
            const std::int64_t hi = p > 0.0 ? grid.retreat(cur.back(), p, v_lo).key : cur.back().key;
            lo_[t + 1] = lo;
            auto& layer = points_[t + 1];
            layer.reserve(static_cast<std::size_t>(hi - lo + 1));
            for (std::int64_t k = lo; k <= hi; ++k) layer.push_back(grid.point(k));
        }
    }

    void run(double reward) {
        const auto& last = points_[num_states_];
        auto& base = g_[num_states_];
        base.assign(last.size(), kInfiniteCost);
        for (std::size_t i = 0; i < last.size() && grid_.within(last[i], reward); ++i)
            base[i] = ExtendedCost(0.0);
        for (int t = num_states_ - 1; t >= 0; --t)
            relax_layer(points_[t].size(), probs_[t], runs_[t], g_[t + 1], criterion_,
                        [&](std::size_t i, std::uint32_t j) { return link(t, i, j); }, g_[t],
                        arg_[t]);
    }

    ExtendedCost value(std::size_t d) const noexcept { return g_[0][d]; }

    std::vector<std::uint32_t> trace(std::size_t i) const {
        std::vector<std::uint32_t> demands(num_states_, 0);
        for (int t = 0; t < num_states_; ++t) {
            const std::uint32_t j = arg_[t][i];
            demands[t] = probs_[t] > 0.0 ? j : 0;
            i = link(t, i, j);
        }
        return demands;
    }

private:
    std::uint32_t link(int t, std::size_t i, std::uint32_t j) const {
        const double p = probs_[t];
        const double v = p > 0.0 ? grid_.demands()[j].value : 0.0;
        return static_cast<std::uint32_t>(grid_.retreat(points_[t][i], p, v).key - lo_[t + 1]);
    }

    const ValueGrid& grid_;
    std::span<const double> probs_;
    Criterion criterion_;
    int num_states_;
    std::vector<std::int64_t> lo_;
    std::vector<std::vector<GridPoint>> points_;
    std::vector<std::vector<CostRun>> runs_;
    std::vector<std::vector<ExtendedCost>> g_;
    std::vector<std::vector<std::uint32_t>> arg_;
};

} // namespace

namespace {

constexpr double kIdentityTolerance = 1e-9;

struct ExactSearch {
    const CMdp& cmdp;
    Criterion criterion;
    int h;
    std::span<const double> row;
    double target;
    const CostTable& next;
    std::span<const double> values;
    std::vector<std::uint32_t> current;
    std::vector<ExtendedCost> child;
    InnerChoice best{{}, kInfiniteCost};

    void visit(int t, double sum) {
        const int S = cmdp.num_states();
        if (t == S) {
            if (sum < target - kIdentityTolerance * std::max(1.0, std::abs(target))) return;
            const ExtendedCost c = criterion.fold(row, child);
            if (c < best.cost) best = {current, c};
            return;
        }
        if (row[t] <= 0.0) {
            current[t] = 0;
            child[t] = ExtendedCost(0.0);
            visit(t + 1, sum);
            return;
        }
        for (std::uint32_t j = 0; j < values.size(); ++j) {
            current[t] = j;
            child[t] = next.at(h + 1, t, j);
            visit(t + 1, sum + row[t] * values[j]);
        }
    }
};

} // namespace

InnerChoice exact_inner_min(const CMdp& cmdp, Criterion criterion, int h, int s, int a,
                            double target, const CostTable& next, std::span<const double> values) {
    const int S = cmdp.num_states();
    ExactSearch search{cmdp, criterion, h, cmdp.transition(h, s, a), target, next, values,
                       std::vector<std::uint32_t>(S, 0), std::vector<ExtendedCost>(S, ExtendedCost(0.0)),
                       InnerChoice{{}, kInfiniteCost}};
    search.visit(0, cmdp.reward(h, s, a));
    if (search.best.demands.empty()) search.best.demands.assign(S, 0);
    return search.best;
}

namespace {

/// First final-layer position whose partial sum covers the demand.
std::size_t first_cover(const std::vector<GridPoint>& final_layer, const ValueGrid& grid,
                        const GridPoint& demand, std::size_t from = 0) {
    std::size_t i = from;
    while (i < final_layer.size() && !grid.covers(final_layer[i], demand)) ++i;
    return i;
}

void init_terminal(CostTable& table, const ValueGrid& grid, int H, int S) {
    const auto& demands = grid.demands();
    for (int s = 0; s < S; ++s)
        for (std::size_t d = 0; d < demands.size(); ++d)
            table.at(H, s, d) = Criterion::terminal(demands[d].value);
}

} // namespace

BellmanChoice approx_bellman_update(int h, int s, std::size_t d, const CostTable& table,
                                    const ValueGrid& grid, const CMdp& cmdp, Criterion criterion) {
    BellmanChoice out;
    out.demands.assign(cmdp.num_states(), 0);
    for (int a = 0; a < cmdp.num_actions(); ++a) {
        const PartialSumTable sets = input_sets(h, s, a, grid, cmdp, Variant::Sum);
        const auto& final_layer = sets.layers.back();
        const std::size_t first = first_cover(final_layer, grid, grid.demands()[d]);
        if (first == final_layer.size()) continue;
        InnerDp dp(sets, cmdp.transition(h, s, a), table, h + 1, criterion);
        dp.run_threshold(first);
        const ExtendedCost c = ExtendedCost(cmdp.cost(h, s, a)) + dp.value(0, 0);
        if (c < out.cost) {
            out.cost = c;
            out.action = a;
            out.demands = dp.trace(0);
        }
    }
    return out;
}

SolveTables approx_solve(const CMdp& cmdp, Criterion criterion, const ValueGrid& grid) {
    const int H = cmdp.horizon();
    const int S = cmdp.num_states();
    const auto& demands = grid.demands();
    const std::size_t D = demands.size();
    SolveTables out{AugmentedPolicy(grid, H, S), CostTable(H, S, D)};
    init_terminal(out.table, grid, H, S);

    std::vector<BellmanChoice> best(D);
    for (int h = H - 1; h >= 0; --h) {
        for (int s = 0; s < S; ++s) {
            std::fill(best.begin(), best.end(), BellmanChoice{});
            for (int a = 0; a < cmdp.num_actions(); ++a) {
                const PartialSumTable sets = input_sets(h, s, a, grid, cmdp, Variant::Sum);
                const auto& final_layer = sets.layers.back();
                InnerDp dp(sets, cmdp.transition(h, s, a), out.table, h + 1, criterion);
                const ExtendedCost c(cmdp.cost(h, s, a));
                // ĝ depends on the target only through the first covering
                // final position, which moves right as targets grow.
                std::size_t first = 0, solved_for = final_layer.size() + 1;
                for (std::size_t d = 0; d < D; ++d) {
                    first = first_cover(final_layer, grid, demands[d], first);
                    if (first == final_layer.size()) break;
                    if (first != solved_for) {
                        dp.run_threshold(first);
                        solved_for = first;
                    }
                    const ExtendedCost total = c + dp.value(0, 0);
                    if (total < best[d].cost) best[d] = {a, dp.trace(0), total};
                }
            }
            for (std::size_t d = 0; d < D; ++d) {
                out.table.at(h, s, d) = best[d].cost;
                if (best[d].cost.is_finite()) out.policy.set(h, s, d, best[d].action, best[d].demands);
            }
        }
    }
    return out;
}

SolveTables diff_solve(const CMdp& cmdp, Criterion criterion, const ValueGrid& grid) {
    const int H = cmdp.horizon();
    const int S = cmdp.num_states();
    const std::size_t D = grid.demands().size();
    SolveTables out{AugmentedPolicy(grid, H, S), CostTable(H, S, D)};
    init_terminal(out.table, grid, H, S);

    std::vector<ExtendedCost> best(D);
    std::vector<int> best_action(D);
    for (int h = H - 1; h >= 0; --h) {
        for (int s = 0; s < S; ++s) {
            std::fill(best.begin(), best.end(), kInfiniteCost);
            std::fill(best_action.begin(), best_action.end(), -1);
            std::vector<std::vector<std::uint32_t>> best_vec(D);
            for (int a = 0; a < cmdp.num_actions(); ++a) {
                const ExtendedCost c(cmdp.cost(h, s, a));
                auto consider = [&](auto&& cost_of, auto&& trace_of) {
                    for (std::size_t d = 0; d < D; ++d) {
                        const ExtendedCost total = c + cost_of(d);
                        if (total < best[d]) {
                            best[d] = total;
                            best_action[d] = a;
                            best_vec[d] = trace_of(d);
                        }
                    }
                };
                const auto row = cmdp.transition(h, s, a);
                const double r = cmdp.reward(h, s, a);
                if (grid.scheme() == GridScheme::Identity) {
                    const PartialSumTable sets = input_sets(h, s, a, grid, cmdp, Variant::Difference);
                    const auto& final_layer = sets.layers.back();
                    std::size_t within = 0;
                    while (within < final_layer.size() && grid.within(final_layer[within], r)) ++within;
                    InnerDp dp(sets, row, out.table, h + 1, criterion);
                    dp.run_threshold(within);
                    consider([&](std::size_t d) { return dp.value(0, d); },
                             [&](std::size_t d) { return dp.trace(d); });
                } else {
                    LazyDiffDp dp(grid, row, out.table, h + 1, criterion);
                    dp.run(r);
                    consider([&](std::size_t d) { return dp.value(d); },
                             [&](std::size_t d) { return dp.trace(d); });
                }
            }
            for (std::size_t d = 0; d < D; ++d) {
                out.table.at(h, s, d) = best[d];
                if (best[d].is_finite()) out.policy.set(h, s, d, best_action[d], best_vec[d]);
            }
        }
    }
    return out;
}

SolveTables bellman_solve(const CMdp& cmdp, Criterion criterion, const ValueGrid& grid,
                          Variant variant) {
    return variant == Variant::Sum ? approx_solve(cmdp, criterion, grid)
                                   : diff_solve(cmdp, criterion, grid);
}

} // namespace dcmdp
