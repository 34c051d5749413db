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

#include "listgrover/synth.h"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "listgrover/errors.h"

namespace listgrover {

namespace {

// Unbiased integer in [0, n) from a 64-bit engine, by rejection. Avoids
// std::uniform_int_distribution, whose algorithm differs between standard
// libraries.
std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

}  // namespace

InitUnitary build_init_unitary(std::span<const Color> list, std::size_t width) {
    if (list.empty()) {
        throw InputError("cannot initialize an empty color list");
    }
    if (width == 0 || width >= 16) {
        throw InputError("register width " + std::to_string(width) + " is out of range");
    }
    const std::size_t dim = std::size_t{1} << width;
    Color max = 0;
    for (Color c : list) {
        if (c >= dim) {
            throw InputError("color " + std::to_string(c) + " does not fit in " + std::to_string(width) + " qubits");
        }
        max = std::max(max, c);
    }

    // Ordered basis: chi first, then the standard basis without |max>.
    std::vector<std::vector<double>> basis;
    std::vector<double> chi(dim, 0.0);
    const double amp = 1.0 / std::sqrt(static_cast<double>(list.size()));
    for (Color c : list) {
        chi[c] = amp;
    }
    basis.push_back(chi);
    for (std::size_t i = 0; i < dim; i++) {
        if (i != max) {
            std::vector<double> e(dim, 0.0);
            e[i] = 1.0;
            basis.push_back(std::move(e));
        }
    }

    // Modified Gram-Schmidt, two passes for orthogonality to round-off.
    for (std::size_t k = 0; k < dim; k++) {
        std::vector<double> &v = basis[k];
        for (int pass = 0; pass < 2; pass++) {
            for (std::size_t j = 0; j < k; j++) {
                double proj = 0;
                for (std::size_t i = 0; i < dim; i++) proj += basis[j][i] * v[i];
                for (std::size_t i = 0; i < dim; i++) v[i] -= proj * basis[j][i];
            }
        }
        double norm = 0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        for (double &x : v) x /= norm;
    }

    InitUnitary u{width, ColorList(list.begin(), list.end()), Matrix(dim)};
    for (std::size_t col = 0; col < dim; col++) {
        for (std::size_t row = 0; row < dim; row++) {
            u.matrix(row, col) = basis[col][row];
        }
    }
    return u;
}

Circuit build_full_initialization(const Problem &p) {
    RegisterLayout layout = p.layout();
    Circuit c(layout.total);
    for (std::size_t v = 0; v < p.vertex_count(); v++) {
        InitUnitary u = build_init_unitary(p.list(v), layout.vertex_width[v]);
        c.add(Gate::unitary(layout.vertex_register(v), std::move(u.matrix), "U_" + p.vertices()[v]));
    }
    c.add(Gate::h(layout.phase_ancilla));
    c.add(Gate::z(layout.phase_ancilla));
    return c;
}

Circuit build_full_oracle(const Problem &p, const OracleReductionOptions &options) {
    if (p.edge_count() == 0) {
        throw InputError("the full oracle needs at least one edge");
    }
    RegisterLayout layout = p.layout();
    std::map<std::pair<ColorList, ColorList>, EdgeOracle> cache;

    std::vector<Gate> compute;
    for (std::size_t e = 0; e < p.edge_count(); e++) {
        const Edge &edge = p.edges()[e];
        auto key = std::make_pair(p.list(edge.u), p.list(edge.v));
        auto it = cache.find(key);
        if (it == cache.end()) {
            it = cache.emplace(key, build_edge_oracle(key.first, key.second, options)).first;
        }
        std::vector<std::size_t> wires = layout.vertex_register(edge.u);
        for (std::size_t q : layout.vertex_register(edge.v)) {
            wires.push_back(q);
        }
        wires.push_back(layout.edge_qubit[e]);
        for (const Gate &g : it->second.circuit.gates()) {
            std::vector<Control> controls;
            for (const Control &ctl : g.controls()) {
                controls.push_back({wires[ctl.qubit], ctl.positive});
            }
            compute.push_back(Gate::mcx(std::move(controls), wires[g.target()]));
        }
    }

    Circuit c(layout.total);
    c.append(compute);
    std::vector<Control> all_edges;
    for (std::size_t q : layout.edge_qubit) {
        all_edges.push_back({q, true});
    }
    c.add(Gate::mcx(std::move(all_edges), layout.phase_ancilla));
    c.append(compute);
    return c;
}

Circuit build_diffusion(const Problem &p) {
    Circuit a = build_full_initialization(p);
    RegisterLayout layout = p.layout();
    Circuit c(layout.total);
    std::vector<Gate> blocks;
    for (const Gate &g : a.gates()) {
        if (g.kind() == GateKind::kUnitary) {
            blocks.push_back(g);
        }
    }
    for (const Gate &g : blocks) {
        c.add(g.inverse());
    }
    std::vector<Control> zero;
    for (std::size_t q = 0; q < layout.vertex_qubits; q++) {
        zero.push_back({q, false});
    }
    c.add(Gate::mcx(std::move(zero), layout.phase_ancilla));
    c.append(blocks);
    return c;
}

const char *iteration_mode_name(IterationMode mode) {
    switch (mode) {
        case IterationMode::kExactCount:
            return "exact";
        case IterationMode::kFixed:
            return "fixed";
        case IterationMode::kUnknownCount:
            return "unknown";
    }
    return "?";
}

std::size_t optimal_iterations(std::uint64_t space_size, std::uint64_t solution_count) {
    if (solution_count == 0 || solution_count >= space_size) {
        return 0;
    }
    double ratio = static_cast<double>(space_size) / static_cast<double>(solution_count);
    return static_cast<std::size_t>(std::floor(std::numbers::pi / 4 * std::sqrt(ratio)));
}

GroverPlan grover_plan(const Problem &p, IterationMode mode, std::size_t fixed_iterations,
                       std::uint64_t enumeration_cap) {
    GroverPlan plan;
    plan.problem = p;
    plan.mode = mode;
    plan.space_size = p.restricted_space_size();
    if (p.edge_count() == 0) {
        plan.solution_count = plan.space_size;
        plan.solution_count_known = true;
        plan.iterations = 0;
        return plan;
    }
    switch (mode) {
        case IterationMode::kExactCount:
            plan.solution_count = enumerate_valid_colorings(p, false, enumeration_cap).count;
            plan.solution_count_known = true;
            plan.unsatisfiable = plan.solution_count == 0;
            plan.iterations = optimal_iterations(plan.space_size, plan.solution_count);
            break;
        case IterationMode::kFixed:
            plan.iterations = fixed_iterations;
            break;
        case IterationMode::kUnknownCount:
            plan.iterations = 0;
            break;
    }
    return plan;
}

UnknownCountSchedule::UnknownCountSchedule(std::uint64_t space_size, std::uint64_t seed, double lambda)
    : rng_(seed), lambda_(lambda), cap_(std::sqrt(static_cast<double>(space_size))) {}

std::size_t UnknownCountSchedule::next() {
    auto range = static_cast<std::uint64_t>(std::ceil(bound_));
    std::size_t r = static_cast<std::size_t>(uniform_below(rng_, std::max<std::uint64_t>(range, 1)));
    bound_ = std::min(lambda_ * bound_, std::max(cap_, 1.0));
    return r;
}

Circuit build_grover_circuit(const GroverPlan &plan, const OracleReductionOptions &options) {
    if (plan.unsatisfiable) {
        throw std::invalid_argument("cannot build a search circuit for an unsatisfiable plan");
    }
    Circuit c = build_full_initialization(plan.problem);
    if (plan.iterations == 0 || plan.problem.edge_count() == 0) {
        return c;
    }
    Circuit oracle = build_full_oracle(plan.problem, options);
    Circuit diffusion = build_diffusion(plan.problem);
    for (std::size_t r = 0; r < plan.iterations; r++) {
        c.append(oracle);
        c.append(diffusion);
    }
    return c;
}

Circuit build_marking_oracle(std::size_t n, std::span<const std::string> marked) {
    Circuit c(n + 1);
    for (const std::string &s : marked) {
        if (s.size() != n || s.find_first_not_of("01") != std::string::npos) {
            throw InputError("marked string '" + s + "' is not an " + std::to_string(n) + "-bit string");
        }
        std::vector<Control> controls;
        for (std::size_t q = 0; q < n; q++) {
            controls.push_back({q, s[q] == '1'});
        }
        c.add(Gate::mcx(std::move(controls), n));
    }
    return c;
}

Circuit build_unrestricted_grover(std::size_t n, std::span<const std::string> marked, std::size_t iterations) {
    Circuit c(n + 1);
    for (std::size_t q = 0; q <= n; q++) {
        c.add(Gate::h(q));
    }
    c.add(Gate::z(n));
    Circuit oracle = build_marking_oracle(n, marked);
    std::vector<Control> zero;
    for (std::size_t q = 0; q < n; q++) {
        zero.push_back({q, false});
    }
    for (std::size_t r = 0; r < iterations; r++) {
        c.append(oracle);
        for (std::size_t q = 0; q < n; q++) c.add(Gate::h(q));
        c.add(Gate::mcx(zero, n));
        for (std::size_t q = 0; q < n; q++) c.add(Gate::h(q));
    }
    return c;
}

}  // namespace listgrover
