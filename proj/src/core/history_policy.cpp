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

#include "dcmdp/core/history_policy.hpp"

#include "dcmdp/error.hpp"


namespace dcmdp {

HistoryPolicy HistoryPolicy::markov(int num_states, std::vector<int> actions) {
    if (num_states <= 0 || actions.size() % static_cast<std::size_t>(num_states) != 0)
        throw Error(ErrorKind::InvalidArgument, "Markov table size is not a multiple of S");
    HistoryPolicy policy;
    policy.markov_states_ = num_states;
    policy.table_ = std::move(actions);
    return policy;
}

void HistoryPolicy::assign(History history, int action) {
    if (is_markov()) throw Error(ErrorKind::InvalidArgument, "cannot assign into a Markov policy");
    map_.insert_or_assign(std::move(history), action);
}

std::optional<int> HistoryPolicy::action(std::span<const int> history) const {
    if (history.empty()) return std::nullopt;
    if (is_markov()) {
        const std::size_t h = history.size() / 2;
        const std::size_t idx = h * markov_states_ + history.back();
        if (idx >= table_.size() || table_[idx] < 0) return std::nullopt;
        return table_[idx];
    }
    const auto it = map_.find(History(history.begin(), history.end()));
    if (it == map_.end()) return std::nullopt;
    return it->second;
}

} // namespace dcmdp
