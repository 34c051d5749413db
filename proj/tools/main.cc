// Copyright 2026 The listgrover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <iostream>

#include "cli.h"

using namespace listgrover;

namespace {

void add_run_flags(CLI::App *cmd, cli::SolveOptions &opts, std::string &iterations, std::string &mode,
                   std::string &lowering, std::string &reduce) {
    cmd->add_option("--shots", opts.shots, "Number of measurement shots")->capture_default_str();
    cmd->add_option("--seed", opts.seed, "Sampling seed")->capture_default_str();
    cmd->add_option("--iterations", iterations, "Grover iterations: auto or an integer")->capture_default_str();
    cmd->add_option("--mode", mode, "Iteration mode when --iterations=auto")
        ->check(CLI::IsMember({"exact", "unknown"}))
        ->capture_default_str();
    cmd->add_option("--lowering", lowering, "Gate set to simulate")
        ->check(CLI::IsMember({"native", "elementary"}))
        ->capture_default_str();
    cmd->add_option("--reduce", reduce, "Singleton propagation and color remapping")
        ->check(CLI::IsMember({"on", "off"}))
        ->capture_default_str();
    cmd->add_option("--retries", opts.retry_cap, "Sampling passes (exact) or circuit builds (unknown)")
        ->capture_default_str();
    cmd->add_option("--max-qubits", opts.max_qubits, "Simulator width cap")->capture_default_str();
}

bool finalize_run_flags(cli::SolveOptions &opts, const std::string &iterations, const std::string &mode,
                        const std::string &lowering, const std::string &reduce) {
    if (iterations != "auto") {
        try {
            std::size_t used = 0;
            opts.iterations = std::stoul(iterations, &used);
            if (used != iterations.size()) throw std::invalid_argument(iterations);
        } catch (const std::exception &) {
            std::cerr << "error: --iterations must be 'auto' or a non-negative integer\n";
            return false;
        }
    }
    opts.mode = mode == "unknown" ? IterationMode::kUnknownCount : IterationMode::kExactCount;
    opts.lowering = parse_lowering(lowering);
    opts.reduce = reduce == "on";
    return true;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Restricted Grover search for list coloring: synthesis, simulation and verification"};
    app.require_subcommand(1);

    cli::SolveOptions opts;
    std::string iterations = "auto", mode = "exact", lowering = "native", reduce = "off";
    std::string problem_file, coloring_file, out_file, list_u, list_v;
    std::string part = "full", format = "netlist";
    bool exact = false;

    auto *solve = app.add_subcommand("solve", "Search for a proper list coloring and verify it");
    solve->add_option("problem", problem_file, "Problem JSON file")->required();
    add_run_flags(solve, opts, iterations, mode, lowering, reduce);

    auto *reduce_cmd = app.add_subcommand("oracle-reduce", "Synthesize the edge oracle term set for two lists");
    reduce_cmd->add_option("list_u", list_u, "Comma-separated colors, e.g. 1,2,3")->required();
    reduce_cmd->add_option("list_v", list_v, "Comma-separated colors")->required();

    auto *synth = app.add_subcommand("synth", "Print a circuit component");
    synth->add_option("problem", problem_file, "Problem JSON file")->required();
    synth->add_option("--part", part, "Component")
        ->check(CLI::IsMember({"init", "oracle", "diffusion", "full"}))
        ->capture_default_str();
    synth->add_option("--lowering", lowering, "Gate set")
        ->check(CLI::IsMember({"native", "elementary"}))
        ->capture_default_str();
    synth->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"netlist", "qasm"}))
        ->capture_default_str();
    synth->add_option("--iterations", iterations, "Grover iterations for --part full")->capture_default_str();

    auto *hist = app.add_subcommand("histogram", "Write the vertex-register histogram as CSV");
    hist->add_option("problem", problem_file, "Problem JSON file")->required();
    hist->add_option("--out", out_file, "CSV output path")->required();
    hist->add_flag("--exact", exact, "Exact probabilities instead of sampled frequencies");
    add_run_flags(hist, opts, iterations, mode, lowering, reduce);

    auto *verify = app.add_subcommand("verify", "Check a coloring against a problem");
    verify->add_option("problem", problem_file, "Problem JSON file")->required();
    verify->add_option("coloring", coloring_file, "Coloring JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? cli::kSuccess : cli::kInputError;
    }

    if (!finalize_run_flags(opts, iterations, mode, lowering, reduce)) {
        return cli::kInputError;
    }

    if (*solve) {
        return cli::cmd_solve(problem_file, opts, std::cout, std::cerr);
    }
    if (*reduce_cmd) {
        return cli::cmd_oracle_reduce(list_u, list_v, std::cout, std::cerr);
    }
    if (*synth) {
        cli::SynthPart p = part == "init"        ? cli::SynthPart::kInit
                           : part == "oracle"    ? cli::SynthPart::kOracle
                           : part == "diffusion" ? cli::SynthPart::kDiffusion
                                                 : cli::SynthPart::kFull;
        cli::CircuitFormat f = format == "qasm" ? cli::CircuitFormat::kQasm : cli::CircuitFormat::kNetlist;
        return cli::cmd_synth(problem_file, p, opts.lowering, f, opts, std::cout, std::cerr);
    }
    if (*hist) {
        return cli::cmd_histogram(problem_file, opts, exact, out_file, std::cout, std::cerr);
    }
    return cli::cmd_verify(problem_file, coloring_file, std::cout, std::cerr);
}
