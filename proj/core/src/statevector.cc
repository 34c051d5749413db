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

#include <cmath>
#include <stdexcept>

#include "listgrover/errors.h"
#include "listgrover/sim.h"

namespace listgrover {

namespace {

// Plain complex product; std::complex's operator* adds NaN/Inf recovery
// that costs several times more in the inner loops.
inline Complex mul(Complex a, Complex b) {
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

}  // namespace

StateVector::StateVector(std::size_t qubit_count)
    : qubit_count_(qubit_count), amplitudes_(std::size_t{1} << qubit_count) {
    amplitudes_[0] = 1.0;
}

StateVector StateVector::basis_state(std::size_t qubit_count, std::uint64_t index) {
    StateVector s(qubit_count);
    s.amplitudes_[0] = 0.0;
    s.amplitudes_.at(index) = 1.0;
    return s;
}

StateVector StateVector::basis_state(std::string_view label) {
    std::uint64_t index = 0;
    for (char ch : label) {
        index = (index << 1) | (ch == '1' ? 1 : 0);
    }
    return basis_state(label.size(), index);
}

Complex StateVector::amplitude(std::string_view label) const {
    if (label.size() != qubit_count_) {
        throw std::invalid_argument("label width does not match the state");
    }
    std::uint64_t index = 0;
    for (char ch : label) {
        index = (index << 1) | (ch == '1' ? 1 : 0);
    }
    return amplitudes_[index];
}

double StateVector::norm_squared() const {
    double total = 0;
    for (const Complex &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

void StateVector::apply(const Gate &g) {
    for (std::size_t q : g.touched_qubits()) {
        if (q >= qubit_count_) {
            throw InputError("gate " + g.name() + " addresses qubit " + std::to_string(q) + " of a " +
                             std::to_string(qubit_count_) + "-qubit state");
        }
    }
    switch (g.kind()) {
        case GateKind::kMcx:
            apply_mcx(g);
            break;
        case GateKind::kUnitary:
            apply_block(g);
            break;
        default:
            apply_single(g.target(), g.single_qubit_matrix());
            break;
    }
}

void StateVector::apply_single(std::size_t q, const Matrix &m) {
    const std::size_t stride = qubit_mask(q);
    const Complex m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
    for (std::size_t base = 0; base < amplitudes_.size(); base += 2 * stride) {
        for (std::size_t j = base; j < base + stride; j++) {
            Complex a0 = amplitudes_[j];
            Complex a1 = amplitudes_[j + stride];
            amplitudes_[j] = mul(m00, a0) + mul(m01, a1);
            amplitudes_[j + stride] = mul(m10, a0) + mul(m11, a1);
        }
    }
}

void StateVector::apply_mcx(const Gate &g) {
    std::uint64_t mask = 0, value = 0;
    for (const Control &c : g.controls()) {
        mask |= qubit_mask(c.qubit);
        if (c.positive) {
            value |= qubit_mask(c.qubit);
        }
    }
    const std::size_t stride = qubit_mask(g.target());
    for (std::size_t base = 0; base < amplitudes_.size(); base += 2 * stride) {
        for (std::size_t j = base; j < base + stride; j++) {
            if ((j & mask) == value) {
                std::swap(amplitudes_[j], amplitudes_[j + stride]);
            }
        }
    }
}

void StateVector::apply_block(const Gate &g) {
    const Matrix &m = g.matrix();
    const std::size_t k = g.qubits().size();
    const std::size_t dim = std::size_t{1} << k;
    std::vector<std::uint64_t> offset(dim, 0);
    std::uint64_t block_mask = 0;
    for (std::size_t local = 0; local < dim; local++) {
        for (std::size_t b = 0; b < k; b++) {
            if ((local >> (k - 1 - b)) & 1) {
                offset[local] |= qubit_mask(g.qubits()[b]);
            }
        }
    }
    for (std::size_t q : g.qubits()) {
        block_mask |= qubit_mask(q);
    }

    std::vector<Complex> in(dim), out(dim);
    for (std::size_t base = 0; base < amplitudes_.size(); base++) {
        if (base & block_mask) {
            continue;
        }
        for (std::size_t c = 0; c < dim; c++) {
            in[c] = amplitudes_[base | offset[c]];
        }
        for (std::size_t r = 0; r < dim; r++) {
            Complex acc = 0;
            for (std::size_t c = 0; c < dim; c++) {
                acc += mul(m(r, c), in[c]);
            }
            out[r] = acc;
        }
        for (std::size_t r = 0; r < dim; r++) {
            amplitudes_[base | offset[r]] = out[r];
        }
    }
}

std::string basis_label(std::uint64_t index, std::size_t width) {
    std::string s(width, '0');
    for (std::size_t k = 0; k < width; k++) {
        if ((index >> (width - 1 - k)) & 1) {
            s[k] = '1';
        }
    }
    return s;
}

void run(const Circuit &c, StateVector &state, const SimOptions &options) {
    if (c.qubit_count() > options.max_qubits || state.qubit_count() > options.max_qubits) {
        throw ResourceLimitError("circuit needs " + std::to_string(c.qubit_count()) +
                                 " qubits, above the simulator cap of " + std::to_string(options.max_qubits));
    }
    if (state.qubit_count() < c.qubit_count()) {
        throw InputError("state has fewer qubits than the circuit");
    }
    for (const Gate &g : c.gates()) {
        if (g.kind() == GateKind::kUnitary && !g.matrix().is_unitary(1e-10)) {
            throw InputError("unitary block '" + g.label() + "' is not unitary");
        }
        state.apply(g);
    }
}

StateVector run(const Circuit &c, const SimOptions &options) {
    if (c.qubit_count() > options.max_qubits) {
        throw ResourceLimitError("circuit needs " + std::to_string(c.qubit_count()) +
                                 " qubits, above the simulator cap of " + std::to_string(options.max_qubits));
    }
    StateVector state(c.qubit_count());
    run(c, state, options);
    return state;
}

double Distribution::total() const {
    double t = 0;
    for (const auto &[label, p] : probabilities) {
        t += p;
    }
    return t;
}

double Distribution::at(const std::string &label) const {
    auto it = probabilities.find(label);
    return it == probabilities.end() ? 0.0 : it->second;
}

Distribution vertex_marginal(const StateVector &s, const RegisterLayout &layout) {
    if (s.qubit_count() < layout.total) {
        throw InputError("state is narrower than the register layout");
    }
    const std::size_t width = layout.vertex_qubits;
    const std::size_t shift = s.qubit_count() - width;
    std::vector<double> mass(std::size_t{1} << width, 0.0);
    auto amps = s.amplitudes();
    for (std::size_t i = 0; i < amps.size(); i++) {
        mass[i >> shift] += std::norm(amps[i]);
    }
    Distribution d;
    for (std::size_t v = 0; v < mass.size(); v++) {
        if (mass[v] != 0.0) {
            d.probabilities.emplace(basis_label(v, width), mass[v]);
        }
    }
    return d;
}

double probability_any_set(const StateVector &s, std::span<const std::size_t> qubits) {
    std::uint64_t mask = 0;
    for (std::size_t q : qubits) {
        mask |= s.qubit_mask(q);
    }
    double total = 0;
    auto amps = s.amplitudes();
    for (std::size_t i = 0; i < amps.size(); i++) {
        if (i & mask) {
            total += std::norm(amps[i]);
        }
    }
    return total;
}

}  // namespace listgrover
