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

#include "dcmdp/exact_cover/solve_exact.hpp"

#include "dcmdp/error.hpp"
#include "dcmdp/exact_cover/cover.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace dcmdp {

namespace {

struct Candidate {
    double sum;
    ExtendedCost cost;
    std::size_t vector_id;
};

} // namespace

SolveOutcome solve_exact(const CMdp& cmdp, Criterion criterion, double budget, std::size_t cap) {
    const ValueSpace vs = value_space(cmdp, cap);
    const int H = cmdp.horizon();
    const int S = cmdp.num_states();
    const int A = cmdp.num_actions();

    ValueGrid grid = ValueGrid::identity(vs.all, S);
    const auto& demands = grid.demands();
    const std::size_t D = demands.size();

    CostTable table(H, S, D);
    for (int s = 0; s < S; ++s)
        for (std::size_t d = 0; d < D; ++d) table.at(H, s, d) = Criterion::terminal(demands[d].value);
    AugmentedPolicy policy(grid, H, S);

    auto union_index = [&](double v) {
        return static_cast<std::uint32_t>(std::lower_bound(vs.all.begin(), vs.all.end(), v) -
                                          vs.all.begin());
    };

    std::vector<ExtendedCost> best(D);
    std::vector<int> best_action(D);
    std::vector<std::vector<std::uint32_t>> best_vector(D);
    std::vector<ExtendedCost> child(S);

    for (int h = H - 1; h >= 0; --h) {
        for (int s = 0; s < S; ++s) {
            std::fill(best.begin(), best.end(), kInfiniteCost);
            std::fill(best_action.begin(), best_action.end(), -1);

            for (int a = 0; a < A; ++a) {
                const auto row = cmdp.transition(h, s, a);
                // Per successor, keep only demands not dominated by a larger
                // demand of no greater cost.
                std::vector<int> support;
                std::vector<std::vector<std::uint32_t>> options;
                for (int t = 0; t < S; ++t) {
                    if (row[t] <= 0.0) continue;
                    std::vector<std::uint32_t> kept;
                    ExtendedCost running = kInfiniteCost;
                    const auto& layer = vs.at(h + 1, t);
                    for (std::size_t i = layer.size(); i-- > 0;) {
                        const std::uint32_t idx = union_index(layer[i]);
                        const ExtendedCost c = table.at(h + 1, t, idx);
                        if (c < running) {
                            running = c;
                            kept.push_back(idx);
                        }
                    }
                    std::reverse(kept.begin(), kept.end());
                    support.push_back(t);
                    options.push_back(std::move(kept));
                }

                std::size_t total = 1;
                for (const auto& o : options) {
                    if (o.empty()) { total = 0; break; }
                    if (total > cap / o.size())
                        throw Error(ErrorKind::CapExceeded,
                                    "demand-vector enumeration exceeds " + std::to_string(cap));
                    total *= o.size();
                }
                if (total == 0) continue;

                std::vector<Candidate> cands;
                cands.reserve(total);
                std::vector<std::uint32_t> vectors(total * support.size());
                std::vector<std::size_t> odo(support.size(), 0);
                for (std::size_t id = 0; id < total; ++id) {
                    double sum = cmdp.reward(h, s, a);
                    std::fill(child.begin(), child.end(), ExtendedCost(0.0));
                    for (std::size_t k = 0; k < support.size(); ++k) {
                        const int t = support[k];
                        const std::uint32_t idx = options[k][odo[k]];
                        vectors[id * support.size() + k] = idx;
                        sum += row[t] * vs.all[idx];
                        child[t] = table.at(h + 1, t, idx);
                    }
                    cands.push_back({sum, ExtendedCost(cmdp.cost(h, s, a)) + criterion.fold(row, child), id});
                    for (std::size_t k = support.size(); k-- > 0;) {
                        if (++odo[k] < options[k].size()) break;
                        odo[k] = 0;
                    }
                }
                std::stable_sort(cands.begin(), cands.end(),
                                 [](const Candidate& x, const Candidate& y) { return x.sum < y.sum; });
                // suffix minima: best[i] = argmin cost over cands[i..]
                std::vector<std::size_t> suffix(cands.size());
                for (std::size_t i = cands.size(); i-- > 0;) {
                    suffix[i] = i;
                    if (i + 1 < cands.size() && cands[suffix[i + 1]].cost < cands[i].cost)
                        suffix[i] = suffix[i + 1];
                }

                std::size_t lo = 0;
                for (std::size_t d = 0; d < D; ++d) {
                    // targets ascend, so the first covering candidate only moves right
                    while (lo < cands.size() && !grid.covers(GridPoint{0, cands[lo].sum}, demands[d])) ++lo;
                    if (lo == cands.size()) break;
                    const Candidate& c = cands[suffix[lo]];
                    if (c.cost < best[d]) {
                        best[d] = c.cost;
                        best_action[d] = a;
                        auto& vec = best_vector[d];
                        vec.assign(S, 0);
                        for (std::size_t k = 0; k < support.size(); ++k)
                            vec[support[k]] = vectors[c.vector_id * support.size() + k];
                    }
                }
            }

            for (std::size_t d = 0; d < D; ++d) {
                table.at(h, s, d) = best[d];
                if (best_action[d] >= 0 && best[d].is_finite())
                    policy.set(h, s, d, best_action[d], best_vector[d]);
            }
        }
    }

    SolveOutcome out{Verdict::Infeasible, Mode::Exact, Variant::Sum, 0.0, std::nullopt,
                     std::nullopt, std::move(policy), std::move(table), std::nullopt};
    if (const auto d0 = select_initial_demand(out.table, cmdp.initial_state(), budget)) {
        out.verdict = Verdict::Feasible;
        out.initial_index = *d0;
        out.initial_demand = out.policy.grid().demands()[*d0];
        out.certificate = certify(out.policy, cmdp, criterion, *d0);
    }
    return out;
}

} // namespace dcmdp
