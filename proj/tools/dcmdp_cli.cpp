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

// Command-line front end: solve, execute, compare, generate.
//
// Exit codes: 0 feasible / success, 2 infeasible, 1 any error.

#include "dcmdp/error.hpp"
#include "dcmdp/exact_cover/cover.hpp"
#include "dcmdp/fptas/fptas.hpp"
#include "dcmdp/io/formats.hpp"
#include "dcmdp/oracle/brute_force.hpp"
#include "dcmdp/oracle/generator.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace dcmdp;

constexpr int kExitFeasible = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
    return os.str();
}

struct SolveArgs {
    std::string instance, problem, out;
    std::optional<std::string> mode, variant;
    std::optional<double> epsilon;
};

int run_solve(const SolveArgs& args) {
    const CMdp cmdp = io::load_instance(args.instance);
    const io::Problem problem = io::load_problem(args.problem);

    SolveOptions options;
    if (problem.mode) options.mode = *problem.mode;
    if (problem.variant) options.variant = *problem.variant;
    if (problem.epsilon) options.epsilon = *problem.epsilon;
    if (args.mode) options.mode = parse_mode(*args.mode);
    if (args.variant) options.variant = parse_variant(*args.variant);
    if (args.epsilon) options.epsilon = *args.epsilon;

    const SolveOutcome out = solve(cmdp, make_criterion(problem.criterion), problem.budget, options);
    std::cout << "verdict " << to_string(out.verdict) << "\n"
              << "mode " << to_string(out.mode) << "\n"
              << "variant " << to_string(out.variant) << "\n";
    if (out.mode != Mode::Exact) std::cout << "epsilon " << fmt(out.epsilon) << "\n";
    if (out.feasible()) {
        std::cout << "demand " << fmt(out.initial_demand->value) << "\n"
                  << "value " << fmt(out.certificate->value) << "\n"
                  << "cost " << to_string(out.certificate->cost) << "\n";
    }
    if (!args.out.empty())
        io::write_file(args.out, io::serialize_policy(out.policy, cmdp.initial_state(), out.initial_index));
    return out.feasible() ? kExitFeasible : kExitInfeasible;
}

int run_execute(const std::string& policy_path, const std::string& instance_path, std::uint64_t seed,
                int episodes) {
    const CMdp cmdp = io::load_instance(instance_path);
    const io::PolicyFile file = io::load_policy(policy_path);
    io::check_compatible(file, cmdp);
    if (!file.initial_index) {
        std::cout << "verdict Infeasible\n";
        return kExitInfeasible;
    }
    std::cout << "episode,reward,cost,final_state\n";
    double reward_sum = 0.0, cost_sum = 0.0;
    for (int e = 0; e < episodes; ++e) {
        const Trajectory t = execute_index(file.policy, cmdp, *file.initial_index, seed + e);
        reward_sum += t.total_reward();
        cost_sum += t.total_cost();
        std::cout << e << "," << fmt(t.total_reward()) << "," << fmt(t.total_cost()) << "," << t.final_state
                  << "\n";
    }
    std::cerr << "mean reward " << fmt(reward_sum / episodes) << ", mean cost " << fmt(cost_sum / episodes)
              << "\n";
    return kExitFeasible;
}

int run_compare(const std::string& instance_path, const std::string& problem_path,
                const std::vector<double>& epsilons) {
    const CMdp cmdp = io::load_instance(instance_path);
    const io::Problem problem = io::load_problem(problem_path);
    const Criterion crit = make_criterion(problem.criterion);

    // Gaps are measured against the brute-force optimum.
    const BruteForceResult oracle = brute_force(cmdp, crit, problem.budget);
    const std::optional<double> best = oracle.feasible ? std::optional<double>(oracle.value) : std::nullopt;

    std::cout << "epsilon,mode,variant,verdict,value,cost,gap\n";
    std::cout << "0,oracle,," << (oracle.feasible ? "Feasible," + fmt(oracle.value) + "," + to_string(oracle.cost) + ",0"
                                                  : std::string("Infeasible,,,"))
              << "\n";
    auto row = [&](double eps, Mode mode, Variant variant) {
        std::cout << (mode == Mode::Exact ? std::string("0") : fmt(eps)) << "," << to_string(mode) << ","
                  << to_string(variant) << ",";
        try {
            SolveOptions opts;
            opts.mode = mode;
            opts.variant = variant;
            opts.epsilon = eps;
            const SolveOutcome out = solve(cmdp, crit, problem.budget, opts);
            std::cout << to_string(out.verdict);
            if (out.feasible()) {
                std::cout << "," << fmt(out.certificate->value) << "," << to_string(out.certificate->cost) << ","
                          << (best ? fmt(*best - out.certificate->value) : "");
            } else {
                std::cout << ",,,";
            }
        } catch (const Error& e) {
            std::cout << to_string(e.kind()) << ",,,";
        }
        std::cout << "\n";
    };
    row(0.0, Mode::Exact, Variant::Sum);
    for (double eps : epsilons)
        for (Mode mode : {Mode::Additive, Mode::Relative})
            for (Variant variant : {Variant::Sum, Variant::Difference}) row(eps, mode, variant);
    return oracle.feasible ? kExitFeasible : kExitInfeasible;
}

int run_generate(const std::string& spec_path, std::optional<std::uint64_t> seed, const std::string& out,
                 const std::string& problem_out, const std::string& criterion) {
    GeneratorSpec spec = io::parse_generator_spec(io::read_file(spec_path));
    if (seed) spec.seed = *seed;
    const GeneratedProblem gen = random_problem(spec);
    const std::string text = io::serialize_instance(gen.cmdp);
    if (out.empty())
        std::cout << text;
    else
        io::write_file(out, text);
    if (!problem_out.empty()) {
        io::Problem p;
        p.criterion = parse_criterion(criterion);
        p.budget = gen.budget;
        io::write_file(problem_out, io::serialize_problem(p));
    }
    return kExitFeasible;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constrained finite-horizon MDP solver"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "Solve an instance under a cost budget");
    solve_cmd->add_option("instance", solve_args.instance, "Instance JSON")->required()->check(CLI::ExistingFile);
    solve_cmd->add_option("problem", solve_args.problem, "Problem JSON")->required()->check(CLI::ExistingFile);
    solve_cmd->add_option("--mode", solve_args.mode, "exact | additive | relative");
    solve_cmd->add_option("--epsilon", solve_args.epsilon, "Approximation parameter");
    solve_cmd->add_option("--variant", solve_args.variant, "sum | diff");
    solve_cmd->add_option("--out", solve_args.out, "Write the policy JSON here");

    std::string policy_path, exec_instance;
    std::uint64_t exec_seed = 0;
    int episodes = 1;
    auto* exec_cmd = app.add_subcommand("execute", "Simulate a saved policy");
    exec_cmd->add_option("policy", policy_path, "Policy JSON")->required()->check(CLI::ExistingFile);
    exec_cmd->add_option("instance", exec_instance, "Instance JSON")->required()->check(CLI::ExistingFile);
    exec_cmd->add_option("--seed", exec_seed, "RNG seed");
    exec_cmd->add_option("--episodes", episodes, "Number of episodes")->check(CLI::PositiveNumber);

    std::string cmp_instance, cmp_problem;
    std::vector<double> epsilons{1.0, 0.5, 0.25};
    auto* cmp_cmd = app.add_subcommand("compare", "Tabulate exact vs approximate solves as CSV");
    cmp_cmd->add_option("instance", cmp_instance, "Instance JSON")->required()->check(CLI::ExistingFile);
    cmp_cmd->add_option("problem", cmp_problem, "Problem JSON")->required()->check(CLI::ExistingFile);
    cmp_cmd->add_option("--epsilons", epsilons, "Approximation parameters")->delimiter(',');

    std::string spec_path, gen_out, gen_problem, gen_criterion = "expectation";
    std::optional<std::uint64_t> gen_seed;
    auto* gen_cmd = app.add_subcommand("generate", "Generate a random instance from a spec");
    gen_cmd->add_option("spec", spec_path, "Generator spec JSON")->required()->check(CLI::ExistingFile);
    gen_cmd->add_option("--seed", gen_seed, "Override the spec seed");
    gen_cmd->add_option("--out", gen_out, "Instance output (default stdout)");
    gen_cmd->add_option("--problem-out", gen_problem, "Also write a problem JSON with the drawn budget");
    gen_cmd->add_option("--criterion", gen_criterion, "Criterion for --problem-out");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (*solve_cmd) return run_solve(solve_args);
        if (*exec_cmd) return run_execute(policy_path, exec_instance, exec_seed, episodes);
        if (*cmp_cmd) return run_compare(cmp_instance, cmp_problem, epsilons);
        if (*gen_cmd) return run_generate(spec_path, gen_seed, gen_out, gen_problem, gen_criterion);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
