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

#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

namespace listgrover::testing {

namespace {

std::size_t bit_of(std::uint64_t index, std::size_t q, std::size_t qubits) { return (index >> (qubits - 1 - q)) & 1; }

}  // namespace

Matrix mcx_truth_table(std::size_t qubits, const std::vector<Control> &controls, std::size_t target) {
    const std::size_t dim = std::size_t{1} << qubits;
    Matrix m(dim);
    for (std::uint64_t in = 0; in < dim; in++) {
        bool fire = true;
        for (const Control &c : controls) {
            fire = fire && (bit_of(in, c.qubit, qubits) == (c.positive ? 1u : 0u));
        }
        std::uint64_t out = fire ? in ^ (std::uint64_t{1} << (qubits - 1 - target)) : in;
        m(out, in) = 1.0;
    }
    return m;
}

Matrix dense_gate(const Gate &g, std::size_t qubits) {
    const std::size_t dim = std::size_t{1} << qubits;
    if (g.kind() == GateKind::kMcx || g.kind() == GateKind::kX) {
        return mcx_truth_table(qubits, g.controls(), g.target());
    }
    std::vector<std::size_t> acted = g.kind() == GateKind::kUnitary ? g.qubits() : std::vector<std::size_t>{g.target()};
    Matrix local = g.kind() == GateKind::kUnitary ? g.matrix() : g.single_qubit_matrix();
    const std::size_t k = acted.size();
    Matrix m(dim);
    for (std::uint64_t r = 0; r < dim; r++) {
        for (std::uint64_t c = 0; c < dim; c++) {
            bool others_equal = true;
            std::size_t lr = 0, lc = 0;
            for (std::size_t q = 0; q < qubits; q++) {
                auto pos = std::find(acted.begin(), acted.end(), q);
                if (pos == acted.end()) {
                    others_equal = others_equal && bit_of(r, q, qubits) == bit_of(c, q, qubits);
                } else {
                    std::size_t shift = k - 1 - static_cast<std::size_t>(pos - acted.begin());
                    lr |= bit_of(r, q, qubits) << shift;
                    lc |= bit_of(c, q, qubits) << shift;
                }
            }
            if (others_equal) {
                m(r, c) = local(lr, lc);
            }
        }
    }
    return m;
}

Matrix dense_unitary(const Circuit &c) {
    const std::size_t q = c.qubit_count();
    Matrix total = Matrix::identity(std::size_t{1} << q);
    for (const Gate &g : c.gates()) {
        total = dense_gate(g, q) * total;
    }
    return total;
}

std::vector<Assignment> brute_force_colorings(const Problem &p) {
    std::vector<Assignment> out;
    Assignment current;
    std::function<void(std::size_t)> rec = [&](std::size_t v) {
        if (v == p.vertex_count()) {
            for (const Edge &e : p.edges()) {
                if (current[e.u] == current[e.v]) {
                    return;
                }
            }
            out.push_back(current);
            return;
        }
        for (Color c : p.list(v)) {
            current.push_back(c);
            rec(v + 1);
            current.pop_back();
        }
    };
    rec(0);
    return out;
}

std::optional<std::uint64_t> min_cost_exhaustive(const gf2::System &system, const std::vector<std::uint32_t> &cost) {
    const std::size_t n = system.variable_count;
    std::optional<std::uint64_t> best;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); mask++) {
        bool ok = true;
        for (std::size_t r = 0; r < system.rows.size() && ok; r++) {
            bool parity = false;
            for (std::size_t i = 0; i < n; i++) {
                if (((mask >> i) & 1) && system.rows[r].get(i)) {
                    parity = !parity;
                }
            }
            ok = parity == system.rhs.get(r);
        }
        if (!ok) {
            continue;
        }
        std::uint64_t c = 0;
        for (std::size_t i = 0; i < n; i++) {
            if ((mask >> i) & 1) c += cost[i];
        }
        if (!best || c < *best) {
            best = c;
        }
    }
    return best;
}

std::optional<std::uint64_t> min_cost_relaxation(const gf2::System &system, const std::vector<std::uint32_t> &cost) {
    const std::size_t rows = system.rows.size();
    const std::size_t states = std::size_t{1} << rows;
    std::vector<std::uint32_t> column(system.variable_count, 0);
    for (std::size_t r = 0; r < rows; r++) {
        for (std::size_t i = 0; i < system.variable_count; i++) {
            if (system.rows[r].get(i)) column[i] |= std::uint32_t{1} << r;
        }
    }
    std::uint32_t target = 0;
    for (std::size_t r = 0; r < rows; r++) {
        if (system.rhs.get(r)) target |= std::uint32_t{1} << r;
    }
    constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> dist(states, kInf);
    dist[0] = 0;
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t s = 0; s < states; s++) {
            if (dist[s] == kInf) continue;
            for (std::size_t i = 0; i < column.size(); i++) {
                std::size_t t = s ^ column[i];
                if (dist[s] + cost[i] < dist[t]) {
                    dist[t] = dist[s] + cost[i];
                    changed = true;
                }
            }
        }
    }
    if (dist[target] == kInf) {
        return std::nullopt;
    }
    return dist[target];
}

std::size_t cover_count(const std::vector<Term> &terms, const std::string &t) {
    std::size_t n = 0;
    for (const Term &term : terms) {
        bool match = true;
        for (std::size_t k = 0; k < term.wires.size(); k++) {
            match = match && t[term.wires[k]] == term.bits[k];
        }
        n += match;
    }
    return n;
}

double grover_marked_probability(std::uint64_t space, std::uint64_t marked, std::size_t rounds) {
    double theta = std::asin(std::sqrt(static_cast<double>(marked) / static_cast<double>(space)));
    double s = std::sin((2.0 * static_cast<double>(rounds) + 1.0) * theta);
    return s * s / static_cast<double>(marked);
}

ColorList random_list(std::mt19937_64 &rng, std::size_t width, std::size_t max_size) {
    const Color lo = width == 1 ? 0 : Color{1} << (width - 1);
    const Color hi = (Color{1} << width) - 1;
    ColorList list;
    // One color carries the top bit, the rest are drawn from the full range.
    list.push_back(lo + static_cast<Color>(rng() % (hi - lo + 1)));
    std::size_t extra = rng() % (std::size_t{1} << width);
    if (max_size) extra = std::min(extra, max_size - 1);
    for (std::size_t k = 0; k < extra; k++) {
        list.push_back(static_cast<Color>(rng() % (hi + 1)));
    }
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    return list;
}

Problem random_problem(std::mt19937_64 &rng, std::size_t max_vertices, Color max_color, double edge_probability,
                       std::uint64_t max_space) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    while (true) {
        ProblemInput in;
        std::size_t n = 1 + rng() % max_vertices;
        for (std::size_t v = 0; v < n; v++) {
            in.vertices.push_back("v" + std::to_string(v));
        }
        for (std::size_t u = 0; u < n; u++) {
            for (std::size_t v = u + 1; v < n; v++) {
                if (coin(rng) < edge_probability) {
                    in.edges.emplace_back(in.vertices[u], in.vertices[v]);
                }
            }
        }
        for (const std::string &name : in.vertices) {
            std::vector<std::int64_t> list;
            std::size_t size = 1 + rng() % (max_color + 1);
            for (std::size_t k = 0; k < size; k++) {
                list.push_back(static_cast<std::int64_t>(rng() % (max_color + 1)));
            }
            in.lists[name] = list;
        }
        Problem p = validate_problem(in);
        if (p.restricted_space_size() <= max_space) {
            return p;
        }
    }
}

}  // namespace listgrover::testing
