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

#ifndef LISTGROVER_SYNTH_H
#define LISTGROVER_SYNTH_H

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "listgrover/circuit.h"
#include "listgrover/gf2.h"
#include "listgrover/matrix.h"
#include "listgrover/problem.h"

namespace listgrover {

// ---------------------------------------------------------------------------
// Initialization

/// U_v: maps |0> to the uniform superposition over the list.
struct InitUnitary {
    std::size_t width = 0;
    ColorList list;
    Matrix matrix;  // 2^width square, column 0 is the target state
};

/// Gram-Schmidt on the ordered basis {chi, e_0, ..., e_{2^w - 1}} with
/// e_{max(list)} dropped. Throws InputError if a color does not fit.
InitUnitary build_init_unitary(std::span<const Color> list, std::size_t width);

/// U_v blocks on each vertex register, then H and Z on the phase ancilla.
Circuit build_full_initialization(const Problem &p);

// ---------------------------------------------------------------------------
// Edge oracles

/// One control pattern (J, s): wire positions J (0-based over the
/// concatenated u|v register, ascending) and the bit each must hold.
struct Term {
    std::vector<std::uint32_t> wires;
    std::string bits;  // '0'/'1', same length as wires

    std::size_t weight() const { return wires.size(); }
    /// Whether the basis string `t` (MSB first, '0'/'1') matches.
    bool matches(std::string_view t) const;
    bool operator==(const Term &) const = default;
    auto operator<=>(const Term &) const = default;
};

/// "({1,4},11)" with 1-based wire numbers.
std::string format_term(const Term &term);

/// All (J, s) with 1 <= |J| <= k over `wires` positions, ordered by
/// (|J|, J lexicographic, s lexicographic).
std::vector<Term> enumerate_terms(std::size_t wires, std::size_t k);

struct OracleReductionOptions {
    gf2::SearchBudget budget;
    /// Largest variable count for which the parity system is built.
    std::size_t max_variables = std::size_t{1} << 16;
};

struct TermSet {
    std::size_t width_u = 0;
    std::size_t width_v = 0;
    std::size_t k = 0;              // first feasible term size bound
    std::vector<Term> terms;        // W'
    std::uint64_t cost = 0;         // sum of |J|
    bool certified = false;         // cost proven minimal at this k
    gf2::SearchMethod method = gf2::SearchMethod::kUncertified;
    std::size_t variable_count = 0;
    std::size_t equation_count = 0;
};

/// Bit strings of a color pair a|b, widths taken from the lists.
std::string pair_string(Color a, std::size_t width_a, Color b, std::size_t width_b);

/// Builds, for k = 1, 2, ..., the parity system whose solutions are term
/// sets flipping exactly the pairs with distinct colors, and returns the
/// cheapest solution at the first feasible k. If the system would exceed
/// `max_variables`, falls back to one full-width term per valid pair
/// (uncertified).
TermSet oracle_reduction(std::span<const Color> list_u, std::span<const Color> list_v,
                         const OracleReductionOptions &options = {});

/// Parity system for a fixed k, exposed for inspection and testing.
gf2::System build_reduction_system(std::span<const Color> list_u, std::span<const Color> list_v,
                                   std::span<const Term> variables);

struct EdgeOracle {
    TermSet terms;
    /// Over local wires 0..width_u+width_v, target on the last one.
    Circuit circuit;
};

EdgeOracle build_edge_oracle(std::span<const Color> list_u, std::span<const Color> list_v,
                             const OracleReductionOptions &options = {});

/// Compute every O_{u,v} into its edge qubit, flip the phase ancilla if all
/// edge qubits are set, uncompute. Throws InputError for edgeless problems.
Circuit build_full_oracle(const Problem &p, const OracleReductionOptions &options = {});

/// A^dagger, anticontrolled X on the phase ancilla over all vertex qubits, A.
Circuit build_diffusion(const Problem &p);

// ---------------------------------------------------------------------------
// Planning and assembly

enum class IterationMode { kExactCount, kFixed, kUnknownCount };

const char *iteration_mode_name(IterationMode mode);

struct GroverPlan {
    Problem problem;
    IterationMode mode = IterationMode::kExactCount;
    std::size_t iterations = 0;
    std::uint64_t space_size = 0;      // |S|
    std::uint64_t solution_count = 0;  // |S'|, exact mode only
    bool solution_count_known = false;
    bool unsatisfiable = false;
};

/// floor(pi/4 * sqrt(space / solutions)).
std::size_t optimal_iterations(std::uint64_t space_size, std::uint64_t solution_count);

/// Exact mode counts solutions classically and applies the iteration
/// formula over the restricted space. Fixed mode uses `fixed_iterations`.
/// Unknown mode returns a plan with zero iterations; drive it with
/// UnknownCountSchedule.
GroverPlan grover_plan(const Problem &p, IterationMode mode, std::size_t fixed_iterations = 0,
                       std::uint64_t enumeration_cap = kDefaultEnumerationCap);

/// Randomized iteration schedule for an unknown number of solutions:
/// draw r uniformly from [0, m), then m <- min(lambda * m, sqrt(|S|)).
class UnknownCountSchedule {
   public:
    UnknownCountSchedule(std::uint64_t space_size, std::uint64_t seed, double lambda = 6.0 / 5.0);

    std::size_t next();
    double bound() const { return bound_; }

   private:
    std::mt19937_64 rng_;
    double lambda_;
    double bound_ = 1.0;
    double cap_;
};

/// Initialization followed by `plan.iterations` rounds of (oracle, diffusion).
Circuit build_grover_circuit(const GroverPlan &plan, const OracleReductionOptions &options = {});

// ---------------------------------------------------------------------------
// Unrestricted search over n qubits (phase ancilla is qubit n)

/// Phase oracle flipping each marked n-bit string, one MCX per string.
Circuit build_marking_oracle(std::size_t n, std::span<const std::string> marked);

/// H on all n qubits and |-> on the ancilla, then `iterations` rounds of
/// (marking oracle, H^n, anticontrolled X onto the ancilla, H^n).
Circuit build_unrestricted_grover(std::size_t n, std::span<const std::string> marked, std::size_t iterations);

}  // namespace listgrover

#endif
