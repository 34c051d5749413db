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

#ifndef LISTGROVER_SIM_H
#define LISTGROVER_SIM_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "listgrover/circuit.h"
#include "listgrover/matrix.h"
#include "listgrover/problem.h"

namespace listgrover {

/// Dense state over q qubits. Qubit 0 is the most significant bit of the
/// basis index, so index 0b100 on three qubits prints as "100" and has
/// qubit 0 set.
class StateVector {
   public:
    StateVector() = default;
    /// |0...0>.
    explicit StateVector(std::size_t qubit_count);

    static StateVector basis_state(std::size_t qubit_count, std::uint64_t index);
    static StateVector basis_state(std::string_view label);

    std::size_t qubit_count() const { return qubit_count_; }
    std::size_t size() const { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    std::span<Complex> amplitudes() { return amplitudes_; }
    Complex amplitude(std::uint64_t index) const { return amplitudes_[index]; }
    Complex amplitude(std::string_view label) const;

    /// Mask of qubit q inside a basis index.
    std::uint64_t qubit_mask(std::size_t q) const { return std::uint64_t{1} << (qubit_count_ - 1 - q); }

    double norm_squared() const;

    void apply(const Gate &g);

   private:
    void apply_single(std::size_t q, const Matrix &m);
    void apply_mcx(const Gate &g);
    void apply_block(const Gate &g);

    std::size_t qubit_count_ = 0;
    std::vector<Complex> amplitudes_;
};

/// "0110..." for `index` over `width` bits, MSB first.
std::string basis_label(std::uint64_t index, std::size_t width);

struct SimOptions {
    std::size_t max_qubits = 26;
};

/// Applies the circuit in place. A state with fewer qubits than the circuit
/// is rejected. Throws ResourceLimitError above `max_qubits`.
void run(const Circuit &c, StateVector &state, const SimOptions &options = {});

/// Runs from |0...0>.
StateVector run(const Circuit &c, const SimOptions &options = {});

/// Probability per vertex-register string.
struct Distribution {
    std::map<std::string, double> probabilities;

    double total() const;
    double at(const std::string &label) const;
};

/// Sums |amplitude|^2 over edge, ancilla and scratch qubits. Strings with
/// exactly zero probability are omitted.
Distribution vertex_marginal(const StateVector &s, const RegisterLayout &layout);

/// Total probability on basis states where any of `qubits` is set.
double probability_any_set(const StateVector &s, std::span<const std::size_t> qubits);

inline constexpr const char *kSamplerAlgorithm = "mt19937_64/inverse-cdf-53bit";

/// `shots` i.i.d. draws. Identical inputs give identical counts on every
/// platform: the engine is std::mt19937_64 and the uniform variate and
/// inverse-CDF lookup are implemented here.
std::map<std::string, std::uint64_t> sample(const Distribution &d, std::uint64_t shots, std::uint64_t seed);

}  // namespace listgrover

#endif
