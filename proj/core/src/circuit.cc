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

#include "listgrover/circuit.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "listgrover/errors.h"

namespace listgrover {

Gate Gate::ry(std::size_t q, double theta) {
    Gate g(GateKind::kRy, q);
    g.angle_ = theta;
    return g;
}

Gate Gate::mcx(std::vector<Control> controls, std::size_t target) {
    Gate g(GateKind::kX, target);
    if (!controls.empty()) {
        g.kind_ = GateKind::kMcx;
        g.controls_ = std::move(controls);
    }
    return g;
}

Gate Gate::unitary(std::vector<std::size_t> qubits, Matrix m, std::string label) {
    if (qubits.empty() || qubits.size() >= 20 || m.dim() != (std::size_t{1} << qubits.size())) {
        throw InputError("unitary block '" + label + "' does not match its qubit count");
    }
    if (!m.is_unitary(1e-10)) {
        throw InputError("unitary block '" + label + "' is not unitary");
    }
    Gate g(GateKind::kUnitary, qubits.front());
    g.qubits_ = std::move(qubits);
    g.matrix_ = std::make_shared<const Matrix>(std::move(m));
    g.label_ = std::move(label);
    return g;
}

std::vector<std::size_t> Gate::touched_qubits() const {
    if (kind_ == GateKind::kUnitary) {
        return qubits_;
    }
    std::vector<std::size_t> result;
    for (const Control &c : controls_) {
        result.push_back(c.qubit);
    }
    result.push_back(target_);
    return result;
}

Matrix Gate::single_qubit_matrix() const {
    using namespace std::complex_literals;
    Matrix m = Matrix::identity(2);
    const double r = std::numbers::sqrt2 / 2;
    switch (kind_) {
        case GateKind::kH:
            m(0, 0) = r, m(0, 1) = r, m(1, 0) = r, m(1, 1) = -r;
            break;
        case GateKind::kX:
            m(0, 0) = 0, m(0, 1) = 1, m(1, 0) = 1, m(1, 1) = 0;
            break;
        case GateKind::kZ:
            m(1, 1) = -1;
            break;
        case GateKind::kS:
            m(1, 1) = 1i;
            break;
        case GateKind::kSdg:
            m(1, 1) = -1i;
            break;
        case GateKind::kT:
            m(1, 1) = std::polar(1.0, std::numbers::pi / 4);
            break;
        case GateKind::kTdg:
            m(1, 1) = std::polar(1.0, -std::numbers::pi / 4);
            break;
        case GateKind::kRy: {
            double c = std::cos(angle_ / 2), s = std::sin(angle_ / 2);
            m(0, 0) = c, m(0, 1) = -s, m(1, 0) = s, m(1, 1) = c;
            break;
        }
        default:
            throw std::logic_error("not a single-qubit gate: " + name());
    }
    return m;
}

Gate Gate::inverse() const {
    Gate g = *this;
    switch (kind_) {
        case GateKind::kS:
            g.kind_ = GateKind::kSdg;
            break;
        case GateKind::kSdg:
            g.kind_ = GateKind::kS;
            break;
        case GateKind::kT:
            g.kind_ = GateKind::kTdg;
            break;
        case GateKind::kTdg:
            g.kind_ = GateKind::kT;
            break;
        case GateKind::kRy:
            g.angle_ = -angle_;
            break;
        case GateKind::kUnitary:
            g.matrix_ = std::make_shared<const Matrix>(matrix_->adjoint());
            g.label_ = label_.ends_with("^dg") ? label_.substr(0, label_.size() - 3) : label_ + "^dg";
            break;
        default:
            break;
    }
    return g;
}

std::string Gate::name() const {
    switch (kind_) {
        case GateKind::kH:
            return "H";
        case GateKind::kX:
            return "X";
        case GateKind::kZ:
            return "Z";
        case GateKind::kS:
            return "S";
        case GateKind::kSdg:
            return "SDG";
        case GateKind::kT:
            return "T";
        case GateKind::kTdg:
            return "TDG";
        case GateKind::kRy:
            return "RY";
        case GateKind::kMcx:
            return controls_.size() == 1 ? "CX" : controls_.size() == 2 ? "CCX" : "MCX";
        case GateKind::kUnitary:
            return "UNITARY";
    }
    return "?";
}

void Circuit::add(Gate g) {
    std::vector<std::size_t> touched = g.touched_qubits();
    std::set<std::size_t> distinct(touched.begin(), touched.end());
    if (distinct.size() != touched.size()) {
        throw InputError("gate " + g.name() + " uses a qubit more than once");
    }
    if (!touched.empty() && *distinct.rbegin() >= qubit_count_) {
        throw InputError("gate " + g.name() + " addresses qubit " + std::to_string(*distinct.rbegin()) +
                         " of a " + std::to_string(qubit_count_) + "-qubit circuit");
    }
    gates_.push_back(std::move(g));
}

void Circuit::append(const Circuit &other) { append(other.gates()); }

void Circuit::append(std::span<const Gate> gates) {
    for (const Gate &g : gates) {
        add(g);
    }
}

Circuit Circuit::inverse() const {
    Circuit result(qubit_count_, scratch_ancillas_);
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        result.gates_.push_back(it->inverse());
    }
    return result;
}

std::map<std::string, std::size_t> Circuit::gate_counts() const {
    std::map<std::string, std::size_t> counts;
    for (const Gate &g : gates_) {
        counts[g.name()]++;
    }
    return counts;
}

std::uint64_t cost(std::span<const Gate> gates) {
    std::uint64_t total = 0;
    for (const Gate &g : gates) {
        if (g.kind() == GateKind::kMcx) {
            total += g.controls().size();
        }
    }
    return total;
}

std::uint64_t cost(const Circuit &c) { return cost(c.gates()); }

std::size_t ScratchAllocator::acquire() {
    if (in_use_ >= capacity_) {
        throw ResourceLimitError("scratch allocator exhausted after " + std::to_string(capacity_) + " ancillas");
    }
    std::size_t q = first_ + in_use_++;
    high_water_ = std::max(high_water_, in_use_);
    return q;
}

void ScratchAllocator::release(std::size_t qubit) {
    if (in_use_ == 0 || qubit != first_ + in_use_ - 1) {
        throw std::logic_error("scratch qubits must be released in stack order");
    }
    in_use_--;
}

std::vector<Gate> decompose_toffoli(Control c1, Control c2, std::size_t target) {
    const std::size_t a = c1.qubit, b = c2.qubit, t = target;
    std::vector<Gate> out;
    for (const Control &c : {c1, c2}) {
        if (!c.positive) out.push_back(Gate::x(c.qubit));
    }
    out.push_back(Gate::h(t));
    out.push_back(Gate::cx(b, t));
    out.push_back(Gate::tdg(t));
    out.push_back(Gate::cx(a, t));
    out.push_back(Gate::t(t));
    out.push_back(Gate::cx(b, t));
    out.push_back(Gate::tdg(t));
    out.push_back(Gate::cx(a, t));
    out.push_back(Gate::tdg(b));
    out.push_back(Gate::t(t));
    out.push_back(Gate::h(t));
    out.push_back(Gate::cx(a, b));
    out.push_back(Gate::tdg(b));
    out.push_back(Gate::cx(a, b));
    out.push_back(Gate::t(a));
    out.push_back(Gate::s(b));
    for (const Control &c : {c1, c2}) {
        if (!c.positive) out.push_back(Gate::x(c.qubit));
    }
    return out;
}

namespace {

// Flips `target` iff every control fires. Scratch is restored on exit.
void emit_and(std::span<const Control> controls, std::size_t target, ScratchAllocator &scratch,
              std::vector<Gate> &out) {
    const std::size_t k = controls.size();
    if (k <= 2) {
        out.push_back(Gate::mcx({controls.begin(), controls.end()}, target));
        return;
    }
    if (k == 3) {
        std::size_t anc = scratch.acquire();
        out.push_back(Gate::mcx({controls[0], controls[1]}, anc));
        out.push_back(Gate::mcx({controls[2], {anc, true}}, target));
        out.push_back(Gate::mcx({controls[0], controls[1]}, anc));
        scratch.release(anc);
        return;
    }

    std::span<const Control> left = controls.first((k + 1) / 2);
    std::span<const Control> right = controls.subspan(left.size());
    auto compute = [&](std::span<const Control> half) -> Control {
        if (half.size() == 1) {
            return half[0];
        }
        std::size_t anc = scratch.acquire();
        emit_and(half, anc, scratch, out);
        return {anc, true};
    };
    Control l = compute(left);
    Control r = compute(right);
    out.push_back(Gate::mcx({l, r}, target));
    if (right.size() > 1) {
        emit_and(right, r.qubit, scratch, out);
        scratch.release(r.qubit);
    }
    if (left.size() > 1) {
        emit_and(left, l.qubit, scratch, out);
        scratch.release(l.qubit);
    }
}

}  // namespace

std::vector<Gate> decompose_mcx(const Gate &g, ScratchAllocator &scratch) {
    if (g.kind() != GateKind::kMcx || g.controls().size() < 3) {
        throw std::invalid_argument("decompose_mcx needs an MCX gate with at least three controls");
    }
    std::vector<Gate> out;
    emit_and(g.controls(), g.target(), scratch, out);
    return out;
}

const char *lowering_name(Lowering mode) { return mode == Lowering::kNative ? "native" : "elementary"; }

Lowering parse_lowering(const std::string &name) {
    if (name == "native") return Lowering::kNative;
    if (name == "elementary") return Lowering::kElementary;
    throw InputError("unknown lowering mode '" + name + "'");
}

Circuit lower(const Circuit &c, Lowering mode) {
    if (mode == Lowering::kNative) {
        return c;
    }
    ScratchAllocator scratch(c.qubit_count());
    std::vector<Gate> out;
    auto emit_small = [&](const Gate &g) {
        const auto &ctl = g.controls();
        if (g.kind() != GateKind::kMcx) {
            out.push_back(g);
        } else if (ctl.size() == 1) {
            if (!ctl[0].positive) out.push_back(Gate::x(ctl[0].qubit));
            out.push_back(Gate::cx(ctl[0].qubit, g.target()));
            if (!ctl[0].positive) out.push_back(Gate::x(ctl[0].qubit));
        } else {
            auto toffoli = decompose_toffoli(ctl[0], ctl[1], g.target());
            out.insert(out.end(), toffoli.begin(), toffoli.end());
        }
    };
    for (const Gate &g : c.gates()) {
        if (g.kind() == GateKind::kMcx && g.controls().size() >= 3) {
            for (const Gate &part : decompose_mcx(g, scratch)) {
                emit_small(part);
            }
        } else {
            emit_small(g);
        }
    }
    Circuit result(c.qubit_count() + scratch.high_water(), c.scratch_ancillas() + scratch.high_water());
    result.append(out);
    return result;
}

}  // namespace listgrover
