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

#include "dcmdp/exact_cover/value_space.hpp"

#include "dcmdp/error.hpp"

#include <algorithm>
#include <string>

namespace dcmdp {

namespace {

void sort_unique(std::vector<double>& xs) {
    for (double& x : xs)
        if (x == 0.0) x = 0.0;
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

[[noreturn]] void too_large(std::size_t cap) {
    throw Error(ErrorKind::CapExceeded,
                "value space exceeds the exact-path cap of " + std::to_string(cap));
}

} // namespace

ValueSpace value_space(const CMdp& cmdp, std::size_t cap) {
    const int H = cmdp.horizon();
    const int S = cmdp.num_states();
    ValueSpace vs;
    vs.horizon = H;
    vs.num_states = S;
    vs.layers.assign(static_cast<std::size_t>(H + 1) * S, {});
    for (int s = 0; s < S; ++s) vs.layers[static_cast<std::size_t>(H) * S + s] = {0.0};

    std::vector<double> partial, next;
    for (int h = H - 1; h >= 0; --h) {
        for (int s = 0; s < S; ++s) {
            std::vector<double> out;
            for (int a = 0; a < cmdp.num_actions(); ++a) {
                const auto row = cmdp.transition(h, s, a);
                // Deduplicating each prefix is exact: later terms only see the
                // running sum.
                partial.assign(1, cmdp.reward(h, s, a));
                for (int t = 0; t < S; ++t) {
                    if (row[t] <= 0.0) continue;
                    const auto& succ = vs.at(h + 1, t);
                    if (partial.size() * succ.size() > cap) too_large(cap);
                    next.clear();
                    next.reserve(partial.size() * succ.size());
                    for (double u : partial)
                        for (double v : succ) next.push_back(u + row[t] * v);
                    sort_unique(next);
                    partial.swap(next);
                }
                out.insert(out.end(), partial.begin(), partial.end());
            }
            sort_unique(out);
            if (out.size() > cap) too_large(cap);
            vs.layers[static_cast<std::size_t>(h) * S + s] = std::move(out);
        }
    }
    for (const auto& layer : vs.layers) vs.all.insert(vs.all.end(), layer.begin(), layer.end());
    sort_unique(vs.all);
    if (vs.all.size() > cap) too_large(cap);
    return vs;
}

} // namespace dcmdp
