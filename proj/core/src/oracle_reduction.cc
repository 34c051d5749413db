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

#include <algorithm>

#include "listgrover/errors.h"
#include "listgrover/synth.h"

namespace listgrover {

bool Term::matches(std::string_view t) const {
    for (std::size_t k = 0; k < wires.size(); k++) {
        if (t[wires[k]] != bits[k]) {
            return false;
        }
    }
    return true;
}

std::string format_term(const Term &term) {
    std::string s = "({";
    for (std::size_t k = 0; k < term.wires.size(); k++) {
        s += (k ? "," : "") + std::to_string(term.wires[k] + 1);
    }
    return s + "}," + term.bits + ")";
}

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; i++) {
        r = r * (n - k + i) / i;
    }
    return r;
}

std::uint64_t term_count(std::size_t wires, std::size_t k) {
    std::uint64_t total = 0;
    for (std::size_t j = 1; j <= k; j++) {
        total += binomial(wires, j) << j;
    }
    return total;
}

std::string to_bits(Color c, std::size_t width) {
    std::string s(width, '0');
    for (std::size_t k = 0; k < width; k++) {
        if ((c >> (width - 1 - k)) & 1) {
            s[k] = '1';
        }
    }
    return s;
}

}  // namespace

std::string pair_string(Color a, std::size_t width_a, Color b, std::size_t width_b) {
    return to_bits(a, width_a) + to_bits(b, width_b);
}

std::vector<Term> enumerate_terms(std::size_t wires, std::size_t k) {
    std::vector<Term> terms;
    for (std::size_t size = 1; size <= std::min(k, wires); size++) {
        // Combinations of `size` wires in lexicographic order.
        std::vector<std::uint32_t> subset(size);
        for (std::size_t i = 0; i < size; i++) {
            subset[i] = static_cast<std::uint32_t>(i);
        }
        while (true) {
            for (std::uint64_t s = 0; s < (std::uint64_t{1} << size); s++) {
                terms.push_back({subset, to_bits(static_cast<Color>(s), size)});
            }
            std::size_t i = size;
            while (i > 0 && subset[i - 1] == wires - size + i - 1) {
                i--;
            }
            if (i == 0) {
                break;
            }
            subset[i - 1]++;
            for (std::size_t j = i; j < size; j++) {
                subset[j] = subset[j - 1] + 1;
            }
        }
    }
    return terms;
}

gf2::System build_reduction_system(std::span<const Color> list_u, std::span<const Color> list_v,
                                   std::span<const Term> variables) {
    const std::size_t wu = bit_width(list_u), wv = bit_width(list_v);
    gf2::System system(variables.size());
    for (Color a : list_u) {
        for (Color b : list_v) {
            std::string t = pair_string(a, wu, b, wv);
            gf2::BitVector row(variables.size());
            for (std::size_t i = 0; i < variables.size(); i++) {
                if (variables[i].matches(t)) {
                    row.set(i);
                }
            }
            system.add_equation(std::move(row), a != b);
        }
    }
    return system;
}

TermSet oracle_reduction(std::span<const Color> list_u, std::span<const Color> list_v,
                         const OracleReductionOptions &options) {
    if (list_u.empty() || list_v.empty()) {
        throw InputError("oracle reduction needs non-empty lists");
    }
    TermSet result;
    result.width_u = bit_width(list_u);
    result.width_v = bit_width(list_v);
    const std::size_t wires = result.width_u + result.width_v;

    for (std::size_t k = 1; k <= wires; k++) {
        if (term_count(wires, k) > options.max_variables) {
            break;
        }
        std::vector<Term> variables = enumerate_terms(wires, k);
        gf2::System system = build_reduction_system(list_u, list_v, variables);
        std::optional<gf2::Solution> solution = gf2::gaussian_eliminate(system);
        if (!solution) {
            continue;
        }
        std::vector<std::uint32_t> weights(variables.size());
        for (std::size_t i = 0; i < variables.size(); i++) {
            weights[i] = static_cast<std::uint32_t>(variables[i].weight());
        }
        gf2::CostedAssignment best = gf2::min_cost_solution(*solution, weights, options.budget);
        result.k = k;
        for (std::size_t i : best.assignment.ones()) {
            result.terms.push_back(variables[i]);
        }
        result.cost = best.cost;
        result.certified = best.certified;
        result.method = best.method;
        result.variable_count = variables.size();
        result.equation_count = system.equation_count();
        return result;
    }

    // Too many variables: one full-width term per valid pair always works.
    std::vector<std::uint32_t> all(wires);
    for (std::size_t i = 0; i < wires; i++) {
        all[i] = static_cast<std::uint32_t>(i);
    }
    for (Color a : list_u) {
        for (Color b : list_v) {
            if (a != b) {
                result.terms.push_back({all, pair_string(a, result.width_u, b, result.width_v)});
            }
        }
    }
    std::sort(result.terms.begin(), result.terms.end(),
              [](const Term &x, const Term &y) { return x.bits < y.bits; });
    result.k = wires;
    result.cost = wires * result.terms.size();
    result.certified = false;
    result.method = gf2::SearchMethod::kUncertified;
    result.equation_count = list_u.size() * list_v.size();
    return result;
}

EdgeOracle build_edge_oracle(std::span<const Color> list_u, std::span<const Color> list_v,
                             const OracleReductionOptions &options) {
    EdgeOracle oracle{oracle_reduction(list_u, list_v, options), {}};
    const std::size_t target = oracle.terms.width_u + oracle.terms.width_v;
    oracle.circuit = Circuit(target + 1);
    for (const Term &term : oracle.terms.terms) {
        std::vector<Control> controls;
        for (std::size_t k = 0; k < term.wires.size(); k++) {
            controls.push_back({term.wires[k], term.bits[k] == '1'});
        }
        oracle.circuit.add(Gate::mcx(std::move(controls), target));
    }
    return oracle;
}

}  // namespace listgrover
