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

#include "dcmdp/fptas/fptas.hpp"

#include "dcmdp/bellman/bellman.hpp"
#include "dcmdp/error.hpp"
#include "dcmdp/exact_cover/cover.hpp"

namespace dcmdp {

ValueGrid solve_grid(const CMdp& cmdp, const SolveOptions& options) {
    switch (options.mode) {
    case Mode::Exact:
        return ValueGrid::identity(value_space(cmdp, options.exact_cap).all, cmdp.num_states());
    case Mode::Additive: return ValueGrid::additive(options.epsilon, cmdp);
    case Mode::Relative: return ValueGrid::relative(options.epsilon, cmdp, options.variant);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown mode");
}

SolveOutcome solve(const CMdp& cmdp, Criterion criterion, double budget, const SolveOptions& options) {
    ValueGrid grid = solve_grid(cmdp, options);
    SolveTables tables = bellman_solve(cmdp, criterion, grid, options.variant);

    SolveOutcome out{Verdict::Infeasible,
                     options.mode,
                     options.variant,
                     options.mode == Mode::Exact ? 0.0 : options.epsilon,
                     std::nullopt,
                     std::nullopt,
                     std::move(tables.policy),
                     std::move(tables.table),
                     std::nullopt};
    if (const auto d0 = select_initial_demand(out.table, cmdp.initial_state(), budget)) {
        out.verdict = Verdict::Feasible;
        out.initial_index = *d0;
        out.initial_demand = out.policy.grid().demands()[*d0];
        out.certificate = certify(out.policy, cmdp, criterion, *d0);
    }
    return out;
}

} // namespace dcmdp
