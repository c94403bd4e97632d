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

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace dcmdp {

/// Observed history (s0, a0, s1, a1, ..., s_h); length 2h + 1 at epoch h.
using History = std::vector<int>;

/// Deterministic policy over histories. Either an explicit history map or a
/// Markov table [h][s] that ignores everything but the current state.
class HistoryPolicy {
public:
    HistoryPolicy() = default;

    /// Markov policy from a flattened [h][s] action table.
    static HistoryPolicy markov(int num_states, std::vector<int> actions);

    void assign(History history, int action);
    void erase(const History& history) { map_.erase(history); }

    /// Action for a history, or nullopt if undefined there.
    std::optional<int> action(std::span<const int> history) const;

    bool is_markov() const noexcept { return markov_states_ > 0; }
    std::size_t size() const noexcept { return is_markov() ? table_.size() : map_.size(); }
    const std::map<History, int>& entries() const noexcept { return map_; }

private:
    int markov_states_ = 0;
    std::vector<int> table_;
    std::map<History, int> map_;
};

} // namespace dcmdp
