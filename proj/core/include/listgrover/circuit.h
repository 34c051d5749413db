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

#ifndef LISTGROVER_CIRCUIT_H
#define LISTGROVER_CIRCUIT_H

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "listgrover/matrix.h"

namespace listgrover {

enum class GateKind { kH, kX, kZ, kS, kSdg, kT, kTdg, kRy, kMcx, kUnitary };

/// A control wire. `positive == false` is an anticontrol (fires on |0>).
struct Control {
    std::size_t qubit = 0;
    bool positive = true;
    bool operator==(const Control &) const = default;
};

/// One gate of the IR.
///
/// Single-qubit kinds and MCX act on `target()`. MCX with no controls is a
/// plain X; with one control it is a (possibly anti-) CNOT. Unitary blocks
/// act on `qubits()` with the first listed qubit as the most significant bit
/// of the block's local basis index.
class Gate {
   public:
    static Gate h(std::size_t q) { return Gate(GateKind::kH, q); }
    static Gate x(std::size_t q) { return Gate(GateKind::kX, q); }
    static Gate z(std::size_t q) { return Gate(GateKind::kZ, q); }
    static Gate s(std::size_t q) { return Gate(GateKind::kS, q); }
    static Gate sdg(std::size_t q) { return Gate(GateKind::kSdg, q); }
    static Gate t(std::size_t q) { return Gate(GateKind::kT, q); }
    static Gate tdg(std::size_t q) { return Gate(GateKind::kTdg, q); }
    /// Ry(theta) = [[cos(theta/2), -sin(theta/2)], [sin(theta/2), cos(theta/2)]].
    static Gate ry(std::size_t q, double theta);
    static Gate mcx(std::vector<Control> controls, std::size_t target);
    static Gate cx(std::size_t control, std::size_t target) { return mcx({{control, true}}, target); }
    /// Throws InputError unless `m` is unitary within 1e-10 and matches the
    /// qubit count.
    static Gate unitary(std::vector<std::size_t> qubits, Matrix m, std::string label);

    GateKind kind() const { return kind_; }
    std::size_t target() const { return target_; }
    double angle() const { return angle_; }
    const std::vector<Control> &controls() const { return controls_; }
    const std::vector<std::size_t> &qubits() const { return qubits_; }
    const Matrix &matrix() const { return *matrix_; }
    const std::string &label() const { return label_; }

    /// Every qubit the gate reads or writes.
    std::vector<std::size_t> touched_qubits() const;

    /// 2x2 matrix of a single-qubit kind.
    Matrix single_qubit_matrix() const;

    Gate inverse() const;

    /// Short mnemonic: H, X, CX, CCX, MCX, RY, U, ...
    std::string name() const;

   private:
    Gate(GateKind kind, std::size_t target) : kind_(kind), target_(target) {}

    GateKind kind_ = GateKind::kX;
    std::size_t target_ = 0;
    double angle_ = 0;
    std::vector<Control> controls_;
    std::vector<std::size_t> qubits_;
    std::shared_ptr<const Matrix> matrix_;
    std::string label_;
};

class Circuit {
   public:
    Circuit() = default;
    explicit Circuit(std::size_t qubit_count, std::size_t scratch_ancillas = 0)
        : qubit_count_(qubit_count), scratch_ancillas_(scratch_ancillas) {}

    std::size_t qubit_count() const { return qubit_count_; }
    /// Clean decomposition ancillas occupying the last qubit indices.
    std::size_t scratch_ancillas() const { return scratch_ancillas_; }
    const std::vector<Gate> &gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }

    /// Throws InputError on an out-of-range or repeated qubit index.
    void add(Gate g);
    void append(const Circuit &other);
    void append(std::span<const Gate> gates);

    /// Reversed circuit of inverted gates.
    Circuit inverse() const;

    /// Gate count per mnemonic.
    std::map<std::string, std::size_t> gate_counts() const;

   private:
    std::size_t qubit_count_ = 0;
    std::size_t scratch_ancillas_ = 0;
    std::vector<Gate> gates_;
};

/// Sum of control counts over MCX gates: a k-controlled NOT costs k.
std::uint64_t cost(const Circuit &c);
std::uint64_t cost(std::span<const Gate> gates);

/// Hands out clean scratch qubits in stack order.
class ScratchAllocator {
   public:
    explicit ScratchAllocator(std::size_t first_index,
                              std::size_t capacity = std::numeric_limits<std::size_t>::max())
        : first_(first_index), capacity_(capacity) {}

    /// Throws ResourceLimitError when the capacity is used up.
    std::size_t acquire();
    /// Must release the most recently acquired qubit.
    void release(std::size_t qubit);

    std::size_t in_use() const { return in_use_; }
    std::size_t high_water() const { return high_water_; }

   private:
    std::size_t first_;
    std::size_t capacity_;
    std::size_t in_use_ = 0;
    std::size_t high_water_ = 0;
};

/// Two-control Toffoli as the H/T/T-dagger/S/CX network:
/// 16 gates, exact (no global phase). Anticontrols are X-conjugated.
std::vector<Gate> decompose_toffoli(Control c1, Control c2, std::size_t target);

/// MCX with three or more controls into Toffolis using clean scratch
/// ancillas. Three controls use one ancilla (compute, use, uncompute);
/// more controls are split in halves recursively. Every scratch qubit is
/// back in |0> at the end of the fragment. The Toffolis are emitted as CCX
/// gates; use `lower` to expand them further.
std::vector<Gate> decompose_mcx(const Gate &g, ScratchAllocator &scratch);

enum class Lowering { kNative, kElementary };

const char *lowering_name(Lowering mode);
Lowering parse_lowering(const std::string &name);

/// Native returns the circuit unchanged. Elementary expands every MCX with
/// two or more controls into one- and two-qubit gates, X-conjugates
/// anticontrolled CNOTs, and appends the scratch ancillas it needed.
/// Unitary blocks are kept as they are.
Circuit lower(const Circuit &c, Lowering mode);

/// One gate per line: `NAME target [ctl:+q|-q ...] [angle]`, unitary blocks
/// as `UNITARY label q0,q1,...` followed by `#` matrix rows. Header lines
/// give the qubit and scratch counts.
std::string to_netlist(const Circuit &c);

/// OpenQASM 2.0. Unitary blocks are declared as opaque gates. Throws
/// InputError for MCX gates with more than two controls.
std::string to_qasm(const Circuit &c);

}  // namespace listgrover

#endif
