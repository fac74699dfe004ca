// Copyright 2026 The qorder Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

// qorder: compile ordering problems to QUBOs, solve them with a Hopfield
// network and check the results against brute-force oracles.
//
// Exit codes:
//   0  success
//   1  unexpected internal error
//   2  invalid arguments, unreadable or inconsistent input files
//   3  all-zero input with normalization requested
//   4  solver did not reach a feasible permutation (after restarts)
//   5  verification failed

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qorder/io.hpp"
#include "qorder/qorder.hpp"

namespace {

using namespace qorder;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitZeroInput = 3;
constexpr int kExitInfeasible = 4;
constexpr int kExitVerifyFailed = 5;

// Carries an exit code out of a subcommand.
struct ExitError {
    int code;
    std::string message;
};

std::uint64_t default_seed() {
    const char* env = std::getenv("QP_SEED");
    if (env == nullptr || *env == '\0') return 0;
    try {
        std::size_t used = 0;
        const auto seed = std::stoull(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument(env);
        return seed;
    } catch (const std::exception&) {
        throw ExitError{kExitUsage, std::string("QP_SEED is not an unsigned integer: ") + env};
    }
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw ExitError{kExitUsage, "cannot write '" + path + "'"};
}

std::string format_values(const std::vector<double>& values) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out << ", ";
        out << values[i];
    }
    out << ']';
    return out.str();
}

std::string format_mapping(const std::vector<int>& mapping) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < mapping.size(); ++i) {
        if (i > 0) out << ", ";
        out << mapping[i];
    }
    out << ']';
    return out.str();
}

BuilderConfig make_config(std::size_t n, std::optional<double> lambda_r,
                          std::optional<double> lambda_c, bool no_normalize) {
    auto cfg = BuilderConfig::defaults_for(n);
    if (lambda_r) cfg.lambda_r = *lambda_r;
    if (lambda_c) cfg.lambda_c = *lambda_c;
    cfg.normalize = !no_normalize;
    return cfg;
}

// --- program ---------------------------------------------------------------

struct ProgramArgs {
    std::string kind;
    int n = 0;
    int b = 2;
    std::string out;
};

int run_program(const ProgramArgs& args) {
    const auto kind = parse_program_kind(args.kind);
    if (kind == ProgramKind::custom) {
        throw ExitError{kExitUsage, "kind must be ascending, descending, bst or heap"};
    }
    const auto program = make_program(kind, args.n, args.b);
    write_output(args.out, io::program_to_json(program).dump(2) + "\n");
    return kExitOk;
}

// --- build -----------------------------------------------------------------

struct BuildArgs {
    std::string x_path;
    std::string program_path;
    std::optional<double> lambda_r;
    std::optional<double> lambda_c;
    bool no_normalize = false;
    std::string out;
};

int run_build(const BuildArgs& args) {
    const ValueVector x(io::parse_values(io::read_file(args.x_path)));
    const auto program = io::program_from_json(io::parse_json(io::read_file(args.program_path)));
    const auto cfg = make_config(x.size(), args.lambda_r, args.lambda_c, args.no_normalize);
    const auto inst = build_qubo(x, program, cfg);
    write_output(args.out, io::qubo_to_json(inst, &x.entries(), &program).dump() + "\n");
    return kExitOk;
}

// --- solve -----------------------------------------------------------------

struct SolveArgs {
    std::string qubo_path;
    std::string x_path;
    bool trace = false;
    std::optional<std::uint64_t> seed;
    std::optional<int> restarts;
    std::optional<int> max_steps;
    std::string init = "inactive";
};

int run_solve(const SolveArgs& args) {
    auto file = io::qubo_from_json(io::parse_json(io::read_file(args.qubo_path)));
    if (!args.x_path.empty()) {
        file.values = io::parse_values(io::read_file(args.x_path));
        if (file.values->size() != file.instance.source_n()) {
            throw ExitError{kExitUsage, "input length differs from the instance size"};
        }
    }
    const std::size_t n = file.instance.source_n();

    SolverConfig cfg;
    cfg.seed = args.seed.value_or(default_seed());
    cfg.restarts = args.restarts.value_or(static_cast<int>(n * n));
    cfg.max_steps = args.max_steps;
    if (args.init == "random") {
        cfg.initial = InitialState::random;
    } else if (args.init != "inactive") {
        throw ExitError{kExitUsage, "--init must be 'inactive' or 'random'"};
    }

    const auto network = qubo_to_hopfield(file.instance);
    const auto result = solve(network, cfg, decodes_to_permutation);

    if (args.trace) std::cout << io::render_trace(result.trace);
    if (!result.feasible) {
        std::cout << "state: " << io::render_state(result.state) << "\n";
        throw ExitError{kExitInfeasible, "converged state is not a permutation after " +
                                             std::to_string(result.attempts) + " run(s)"};
    }
    const auto p = decode_permutation(bipolar_to_binary(result.state));
    std::cout << "mapping: " << format_mapping(p.as_mapping()) << "\n";
    if (file.values) {
        std::cout << "output: " << format_values(apply_permutation(p, ValueVector(*file.values)))
                  << "\n";
    } else {
        std::cout << "output: unavailable (instance carries no input values)\n";
    }
    std::cout << "flips: " << result.trace.flips << "\n";
    std::cout << "runs: " << result.attempts << "\n";
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.10g", result.trace.steps.back().energy);
    std::cout << "energy: " << buffer << "\n";
    return kExitOk;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
    std::string x_path;
    std::string program_path;
    bool exhaustive = false;
    std::optional<double> lambda_r;
    std::optional<double> lambda_c;
    bool no_normalize = false;
    std::optional<std::uint64_t> seed;
};

constexpr std::size_t kMaxExhaustiveVerifySize = 4;

int run_verify(const VerifyArgs& args) {
    const ValueVector x(io::parse_values(io::read_file(args.x_path)));
    const auto program = io::program_from_json(io::parse_json(io::read_file(args.program_path)));
    const std::size_t n = x.size();
    if (n > kMaxPermutationOracleSize) {
        throw ExitError{kExitUsage, "verify supports n <= " +
                                        std::to_string(kMaxPermutationOracleSize)};
    }
    if (args.exhaustive && n > kMaxExhaustiveVerifySize) {
        throw ExitError{kExitUsage, "--exhaustive supports n <= " +
                                        std::to_string(kMaxExhaustiveVerifySize)};
    }
    const auto cfg = make_config(n, args.lambda_r, args.lambda_c, args.no_normalize);
    const auto inst = build_qubo(x, program, cfg);

    bool all_passed = true;
    auto check = [&](bool ok, const std::string& what) {
        std::cout << (ok ? "PASS " : "FAIL ") << what << "\n";
        all_passed = all_passed && ok;
    };

    SolverConfig solver_cfg;
    solver_cfg.seed = args.seed.value_or(default_seed());
    solver_cfg.restarts = static_cast<int>(n * n);
    std::optional<SolveResult> result;
    try {
        result = solve(qubo_to_hopfield(inst), solver_cfg, decodes_to_permutation);
        check(true, "converged (flips=" + std::to_string(result->trace.flips) +
                        ", runs=" + std::to_string(result->attempts) + ")");
    } catch (const MaxStepsExceeded& e) {
        check(false, std::string("converged: ") + e.what());
    }

    if (result) {
        const auto report = certify(x, program, cfg, result->state);
        check(report.feasible, "feasible permutation" +
                                   (report.failure.empty() ? "" : " (" + report.failure + ")"));
        if (report.feasible) {
            std::ostringstream what;
            what.precision(12);
            what << "optimal objective (achieved=" << report.achieved_objective
                 << ", best=" << report.best_objective << ")";
            check(report.optimal, what.str());
            std::cout << "output: " << format_values(report.output) << "\n";
        }
        if (report.structure_valid) {
            check(*report.structure_valid,
                  std::string("structure ") + std::string(to_string(program.kind())));
        } else {
            std::cout << "SKIP structure (kind=" << to_string(program.kind()) << ")\n";
        }
        if (report.objective_tie) {
            std::cout << "note: objective-tie (duplicate input values, several orders are optimal)\n";
        }
    }

    if (args.exhaustive) {
        const auto global = exhaustive_qubo_min(inst);
        try {
            const auto p = decode_permutation(global.z);
            const auto best = best_permutation(x, program);
            check(true, "exhaustive minimum is a permutation");
            check(objectives_equal(ordering_objective(x, program, p), best.objective),
                  "exhaustive minimum matches permutation oracle");
        } catch (const NotAPermutation& e) {
            check(false, std::string("exhaustive minimum is a permutation: ") + e.what());
        }
    }

    std::cout << (all_passed ? "PASS" : "FAIL") << "\n";
    return all_passed ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Compile ordering problems to QUBOs and solve them with Hopfield networks"};
    app.require_subcommand(1);

    ProgramArgs program_args;
    auto* program_cmd = app.add_subcommand("program", "Emit an order program as JSON");
    program_cmd->add_option("--kind", program_args.kind, "ascending, descending, bst or heap")
        ->required();
    program_cmd->add_option("--n", program_args.n, "Number of items")->required();
    program_cmd->add_option("--b", program_args.b, "Branching factor (heap only)");
    program_cmd->add_option("--out", program_args.out, "Output file (default stdout)");

    BuildArgs build_args;
    auto* build_cmd = app.add_subcommand("build", "Compile input values and a program to a QUBO");
    build_cmd->add_option("--x", build_args.x_path, "Input values: JSON array or one per line")
        ->required();
    build_cmd->add_option("--program", build_args.program_path, "Program JSON file")->required();
    build_cmd->add_option("--lambda-r", build_args.lambda_r, "Row penalty weight (default n)");
    build_cmd->add_option("--lambda-c", build_args.lambda_c, "Column penalty weight (default n)");
    build_cmd->add_flag("--no-normalize", build_args.no_normalize, "Use raw input values");
    build_cmd->add_option("--out", build_args.out, "Output file (default stdout)");

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "Run steepest descent on a QUBO file");
    solve_cmd->add_option("qubo", solve_args.qubo_path, "QUBO JSON file")->required();
    solve_cmd->add_flag("--trace", solve_args.trace, "Print every state and energy");
    solve_cmd->add_option("--seed", solve_args.seed, "Seed for restarts (default $QP_SEED or 0)");
    solve_cmd->add_option("--restarts", solve_args.restarts, "Random restarts (default n^2)");
    solve_cmd->add_option("--max-steps", solve_args.max_steps, "Flip budget per run (default N^2)");
    solve_cmd->add_option("--init", solve_args.init, "inactive (default) or random");
    solve_cmd->add_option("--x", solve_args.x_path, "Input values overriding those in the file");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Run the pipeline and certify the result");
    verify_cmd->add_option("--x", verify_args.x_path, "Input values")->required();
    verify_cmd->add_option("--program", verify_args.program_path, "Program JSON file")
        ->required();
    verify_cmd->add_flag("--exhaustive", verify_args.exhaustive,
                         "Also search all 2^(n^2) binary states (n <= 4)");
    verify_cmd->add_option("--lambda-r", verify_args.lambda_r, "Row penalty weight (default n)");
    verify_cmd->add_option("--lambda-c", verify_args.lambda_c,
                           "Column penalty weight (default n)");
    verify_cmd->add_flag("--no-normalize", verify_args.no_normalize, "Use raw input values");
    verify_cmd->add_option("--seed", verify_args.seed, "Seed for restarts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*program_cmd) return run_program(program_args);
        if (*build_cmd) return run_build(build_args);
        if (*solve_cmd) return run_solve(solve_args);
        if (*verify_cmd) return run_verify(verify_args);
    } catch (const ExitError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const ZeroVector& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitZeroInput;
    } catch (const MaxStepsExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const qorder::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
