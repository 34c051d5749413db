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

#include <cctype>
#include <cstdio>
#include <map>
#include <sstream>

#include "listgrover/circuit.h"
#include "listgrover/errors.h"

namespace listgrover {

namespace {

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_matrix_comment(std::ostream &out, const Matrix &m) {
    for (std::size_t r = 0; r < m.dim(); r++) {
        out << "#  ";
        for (std::size_t c = 0; c < m.dim(); c++) {
            const Complex &z = m(r, c);
            out << ' ' << format_double(z.real());
            if (z.imag() != 0) {
                out << (z.imag() < 0 ? "" : "+") << format_double(z.imag()) << 'i';
            }
        }
        out << '\n';
    }
}

// QASM identifiers must match [a-z][A-Za-z0-9_]*.
std::string qasm_identifier(const std::string &label) {
    std::string id = "blk_";
    for (char ch : label) {
        id += std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_';
    }
    return id;
}

}  // namespace

std::string to_netlist(const Circuit &c) {
    std::ostringstream out;
    out << "# qubits " << c.qubit_count() << '\n';
    out << "# scratch " << c.scratch_ancillas() << '\n';
    for (const Gate &g : c.gates()) {
        if (g.kind() == GateKind::kUnitary) {
            out << "UNITARY " << g.label() << ' ';
            for (std::size_t k = 0; k < g.qubits().size(); k++) {
                out << (k ? "," : "") << g.qubits()[k];
            }
            out << '\n';
            write_matrix_comment(out, g.matrix());
            continue;
        }
        out << g.name() << ' ' << g.target();
        if (!g.controls().empty()) {
            out << " ctl:";
            for (std::size_t k = 0; k < g.controls().size(); k++) {
                const Control &ctl = g.controls()[k];
                out << (k ? " " : "") << (ctl.positive ? '+' : '-') << ctl.qubit;
            }
        }
        if (g.kind() == GateKind::kRy) {
            out << ' ' << format_double(g.angle());
        }
        out << '\n';
    }
    return out.str();
}

std::string to_qasm(const Circuit &c) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "// qubits " << c.qubit_count() << ", scratch " << c.scratch_ancillas() << '\n';

    std::map<std::string, const Gate *> blocks;
    for (const Gate &g : c.gates()) {
        if (g.kind() == GateKind::kMcx && g.controls().size() > 2) {
            throw InputError("QASM export needs MCX gates with at most two controls; lower the circuit first");
        }
        if (g.kind() == GateKind::kUnitary) {
            blocks.emplace(qasm_identifier(g.label()), &g);
        }
    }
    for (const auto &[id, g] : blocks) {
        out << "// " << g->label() << " matrix:\n";
        std::ostringstream m;
        write_matrix_comment(m, g->matrix());
        std::string line;
        std::istringstream lines(m.str());
        while (std::getline(lines, line)) {
            out << "//" << line.substr(1) << '\n';
        }
        out << "opaque " << id << ' ';
        for (std::size_t k = 0; k < g->qubits().size(); k++) {
            out << (k ? "," : "") << 'a' << k;
        }
        out << ";\n";
    }
    out << "qreg q[" << c.qubit_count() << "];\n";

    auto q = [](std::size_t i) { return "q[" + std::to_string(i) + "]"; };
    for (const Gate &g : c.gates()) {
        switch (g.kind()) {
            case GateKind::kH:
                out << "h " << q(g.target()) << ";\n";
                break;
            case GateKind::kX:
                out << "x " << q(g.target()) << ";\n";
                break;
            case GateKind::kZ:
                out << "z " << q(g.target()) << ";\n";
                break;
            case GateKind::kS:
                out << "s " << q(g.target()) << ";\n";
                break;
            case GateKind::kSdg:
                out << "sdg " << q(g.target()) << ";\n";
                break;
            case GateKind::kT:
                out << "t " << q(g.target()) << ";\n";
                break;
            case GateKind::kTdg:
                out << "tdg " << q(g.target()) << ";\n";
                break;
            case GateKind::kRy:
                out << "ry(" << format_double(g.angle()) << ") " << q(g.target()) << ";\n";
                break;
            case GateKind::kMcx: {
                for (const Control &ctl : g.controls()) {
                    if (!ctl.positive) out << "x " << q(ctl.qubit) << ";\n";
                }
                out << (g.controls().size() == 1 ? "cx " : "ccx ");
                for (const Control &ctl : g.controls()) {
                    out << q(ctl.qubit) << ',';
                }
                out << q(g.target()) << ";\n";
                for (const Control &ctl : g.controls()) {
                    if (!ctl.positive) out << "x " << q(ctl.qubit) << ";\n";
                }
                break;
            }
            case GateKind::kUnitary: {
                out << qasm_identifier(g.label()) << ' ';
                for (std::size_t k = 0; k < g.qubits().size(); k++) {
                    out << (k ? "," : "") << q(g.qubits()[k]);
                }
                out << ";\n";
                break;
            }
        }
    }
    return out.str();
}

}  // namespace listgrover
