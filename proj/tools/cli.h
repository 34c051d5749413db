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

#ifndef LISTGROVER_TOOLS_CLI_H
#define LISTGROVER_TOOLS_CLI_H

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "listgrover/circuit.h"
#include "listgrover/problem.h"
#include "listgrover/sim.h"
#include "listgrover/synth.h"

namespace listgrover::cli {

/// Process exit codes.
enum ExitCode : int {
    kSuccess = 0,
    kUnsatisfied = 1,  // unsatisfiable instance or invalid coloring
    kInputError = 2,
    kResourceLimit = 3,
};

struct SolveOptions {
    std::uint64_t shots = 2000;
    std::uint64_t seed = 1;
    std::optional<std::size_t> iterations;  // nullopt = auto
    IterationMode mode = IterationMode::kExactCount;  // exact or unknown
    Lowering lowering = Lowering::kNative;
    bool reduce = false;
    std::size_t retry_cap = 20;
    std::uint64_t enumeration_cap = kDefaultEnumerationCap;
    std::size_t max_qubits = 26;
};

enum class Verdict { kSolved, kUnsatisfiable, kNotFound, kLikelyUnsatisfiable };

const char *verdict_name(Verdict v);

struct Attempt {
    std::size_t iterations = 0;
    std::uint64_t seed = 0;
    std::string modal_state;
    bool verified = false;
};

struct RunReport {
    // problem
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t residual_vertices = 0;
    std::size_t residual_edges = 0;
    Coloring forced;
    std::vector<Color> color_map;  // compact -> original, empty if not remapped

    // plan
    std::string mode;
    std::uint64_t space_size = 0;
    std::optional<std::uint64_t> solution_count;
    std::size_t iterations = 0;

    // circuit
    std::size_t layout_qubits = 0;
    std::size_t scratch_ancillas = 0;
    std::size_t circuit_qubits = 0;
    std::string lowering;
    std::map<std::string, std::size_t> gate_counts;
    std::uint64_t edge_oracle_cost = 0;
    std::uint64_t full_oracle_cost = 0;

    // outcome
    std::map<std::string, std::uint64_t> histogram;
    std::uint64_t shots = 0;
    std::vector<Attempt> attempts;
    Verdict verdict = Verdict::kNotFound;
    std::string reason;
    std::optional<Coloring> coloring;
    std::uint64_t seed = 0;
    std::string sampler = kSamplerAlgorithm;
    double elapsed_ms = 0;
};

/// Preprocess, plan, simulate, sample and verify.
RunReport solve(const Problem &problem, const SolveOptions &options);

std::string report_to_json(const RunReport &report);

/// Most frequent label; ties go to the smallest label.
std::string modal_state(const std::map<std::string, std::uint64_t> &counts);

/// Vertex-register distribution of the search circuit the options describe
/// (no preprocessing). Unknown mode uses the first draw of the schedule.
struct SimulatedPlan {
    GroverPlan plan;
    Circuit circuit;
    Distribution distribution;
};
SimulatedPlan simulate_plan(const Problem &problem, const SolveOptions &options);

/// `State;Probability` rows in label order.
std::string histogram_csv(const std::map<std::string, double> &rows);

// Subcommands. Each writes its normal output to `out` and returns an
// ExitCode; errors are reported on `err`.
int cmd_solve(const std::filesystem::path &problem_file, const SolveOptions &options, std::ostream &out,
              std::ostream &err);
int cmd_oracle_reduce(const std::string &list_u, const std::string &list_v, std::ostream &out, std::ostream &err);

enum class SynthPart { kInit, kOracle, kDiffusion, kFull };
enum class CircuitFormat { kNetlist, kQasm };
int cmd_synth(const std::filesystem::path &problem_file, SynthPart part, Lowering lowering, CircuitFormat format,
              const SolveOptions &options, std::ostream &out, std::ostream &err);

int cmd_histogram(const std::filesystem::path &problem_file, const SolveOptions &options, bool exact,
                  const std::filesystem::path &out_file, std::ostream &out, std::ostream &err);
int cmd_verify(const std::filesystem::path &problem_file, const std::filesystem::path &coloring_file,
               std::ostream &out, std::ostream &err);

}  // namespace listgrover::cli

#endif
