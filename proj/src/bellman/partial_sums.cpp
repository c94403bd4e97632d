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

#include "dcmdp/bellman/partial_sums.hpp"

#include "dcmdp/error.hpp"

#include <algorithm>
#include <string>

namespace dcmdp {

PartialSumTable input_sets(int h, int s, int a, const ValueGrid& grid, const CMdp& cmdp,
                           Variant variant, std::size_t link_cap) {
    const int S = cmdp.num_states();
    const auto& demands = grid.demands();
    const auto row = cmdp.transition(h, s, a);

    PartialSumTable table;
    table.variant = variant;
    table.layers.resize(S + 1);
    table.num_choices.resize(S);
    table.links.resize(S);
    if (variant == Variant::Sum)
        table.layers[0] = {GridPoint{0, cmdp.reward(h, s, a)}};
    else
        table.layers[0] = demands;

    auto by_value = [](const GridPoint& x, const GridPoint& y) { return x.value < y.value; };
    std::size_t total_links = 0;
    std::vector<GridPoint> reached;
    for (int t = 0; t < S; ++t) {
        const double p = row[t];
        const auto& cur = table.layers[t];
        const std::uint32_t choices = p > 0.0 ? static_cast<std::uint32_t>(demands.size()) : 1u;
        table.num_choices[t] = choices;
        total_links += cur.size() * choices;
        if (total_links > link_cap)
            throw Error(ErrorKind::CapExceeded,
                        "partial-sum links exceed " + std::to_string(link_cap));

        auto step = [&](std::size_t i, std::uint32_t j) {
            const double v = p > 0.0 ? demands[j].value : 0.0;
            return variant == Variant::Sum ? grid.advance(cur[i], p, v) : grid.retreat(cur[i], p, v);
        };
        auto& links = table.links[t];
        links.resize(cur.size() * choices);
        if (grid.scheme() != GridScheme::Identity) {
            // Integer keys: mark the occupied key range, then rank it.
            std::vector<std::int64_t> keys(links.size());
            for (std::size_t i = 0; i < cur.size(); ++i)
                for (std::uint32_t j = 0; j < choices; ++j) keys[i * choices + j] = step(i, j).key;
            const auto [lo, hi] = std::minmax_element(keys.begin(), keys.end());
            const std::int64_t base = *lo;
            std::vector<std::uint32_t> rank(static_cast<std::size_t>(*hi - base + 1), 0);
            for (std::int64_t k : keys) rank[k - base] = 1;
            reached.clear();
            std::uint32_t next = 0;
            for (std::size_t k = 0; k < rank.size(); ++k) {
                if (!rank[k]) continue;
                rank[k] = next++;
                reached.push_back(grid.point(base + static_cast<std::int64_t>(k)));
            }
            for (std::size_t k = 0; k < keys.size(); ++k) links[k] = rank[keys[k] - base];
        } else {
            std::vector<GridPoint> raw(links.size());
            for (std::size_t i = 0; i < cur.size(); ++i)
                for (std::uint32_t j = 0; j < choices; ++j) raw[i * choices + j] = step(i, j);
            reached = raw;
            std::sort(reached.begin(), reached.end(), by_value);
            reached.erase(std::unique(reached.begin(), reached.end()), reached.end());
            for (std::size_t k = 0; k < raw.size(); ++k)
                links[k] = static_cast<std::uint32_t>(
                    std::lower_bound(reached.begin(), reached.end(), raw[k], by_value) - reached.begin());
        }
        table.layers[t + 1] = std::move(reached);
        reached = {};
    }
    return table;
}

} // namespace dcmdp
