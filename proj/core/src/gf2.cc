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

#include "listgrover/gf2.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace listgrover::gf2 {

BitVector &BitVector::operator^=(const BitVector &other) {
    if (other.size_ != size_) {
        throw std::invalid_argument("BitVector size mismatch");
    }
    for (std::size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

bool BitVector::none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BitVector::popcount() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) {
        n += static_cast<std::size_t>(std::popcount(w));
    }
    return n;
}

std::vector<std::size_t> BitVector::ones() const {
    std::vector<std::size_t> result;
    for (std::size_t k = 0; k < words_.size(); k++) {
        std::uint64_t w = words_[k];
        while (w) {
            result.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return result;
}

bool BitVector::dot(const BitVector &other) const {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < words_.size(); k++) {
        acc ^= words_[k] & other.words_[k];
    }
    return std::popcount(acc) & 1;
}

bool BitVector::lex_less(const BitVector &other) const {
    for (std::size_t k = 0; k < words_.size(); k++) {
        std::uint64_t diff = words_[k] ^ other.words_[k];
        if (diff) {
            std::uint64_t lowest = diff & (~diff + 1);
            return (words_[k] & lowest) == 0;
        }
    }
    return false;
}

std::string BitVector::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; i++) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

void System::add_equation(BitVector row, bool value) {
    if (row.size() != variable_count) {
        throw std::invalid_argument("equation width does not match the variable count");
    }
    rows.push_back(std::move(row));
    BitVector extended(rhs.size() + 1);
    for (std::size_t i = 0; i < rhs.size(); i++) {
        extended.set(i, rhs.get(i));
    }
    extended.set(rhs.size(), value);
    rhs = std::move(extended);
}

bool System::satisfied_by(const BitVector &x) const {
    for (std::size_t r = 0; r < rows.size(); r++) {
        if (rows[r].dot(x) != rhs.get(r)) {
            return false;
        }
    }
    return true;
}

std::optional<Solution> gaussian_eliminate(const System &system) {
    const std::size_t n = system.variable_count;
    std::vector<BitVector> rows = system.rows;
    std::vector<bool> rhs(rows.size());
    for (std::size_t r = 0; r < rows.size(); r++) {
        rhs[r] = system.rhs.get(r);
    }

    Solution solution;
    std::size_t next_row = 0;
    std::vector<bool> is_pivot(n, false);
    for (std::size_t col = 0; col < n && next_row < rows.size(); col++) {
        std::size_t pivot = next_row;
        while (pivot < rows.size() && !rows[pivot].get(col)) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[pivot], rows[next_row]);
        std::swap(rhs[pivot], rhs[next_row]);
        for (std::size_t r = 0; r < rows.size(); r++) {
            if (r != next_row && rows[r].get(col)) {
                rows[r] ^= rows[next_row];
                rhs[r] = rhs[r] != rhs[next_row];
            }
        }
        solution.pivot_columns.push_back(col);
        is_pivot[col] = true;
        next_row++;
    }
    for (std::size_t r = next_row; r < rows.size(); r++) {
        if (rhs[r]) {
            return std::nullopt;
        }
    }

    const std::size_t rank = next_row;
    solution.particular = BitVector(n);
    solution.reduced_rhs = BitVector(rank);
    for (std::size_t r = 0; r < rank; r++) {
        solution.particular.set(solution.pivot_columns[r], rhs[r]);
        solution.reduced_rhs.set(r, rhs[r]);
    }
    rows.resize(rank);
    for (std::size_t col = 0; col < n; col++) {
        if (is_pivot[col]) {
            continue;
        }
        solution.free_variables.push_back(col);
        BitVector k(n);
        k.set(col);
        for (std::size_t r = 0; r < rank; r++) {
            if (rows[r].get(col)) {
                k.set(solution.pivot_columns[r]);
            }
        }
        solution.basis.push_back(std::move(k));
    }
    solution.reduced_rows = std::move(rows);
    return solution;
}

const char *search_method_name(SearchMethod method) {
    switch (method) {
        case SearchMethod::kUnique:
            return "unique";
        case SearchMethod::kKernelScan:
            return "kernel-scan";
        case SearchMethod::kSyndromeSearch:
            return "syndrome-search";
        case SearchMethod::kUncertified:
            return "uncertified";
    }
    return "?";
}

std::uint64_t assignment_cost(const BitVector &x, std::span<const std::uint32_t> cost) {
    std::uint64_t total = 0;
    auto words = x.words();
    for (std::size_t k = 0; k < words.size(); k++) {
        std::uint64_t w = words[k];
        while (w) {
            total += cost[k * 64 + static_cast<std::size_t>(std::countr_zero(w))];
            w &= w - 1;
        }
    }
    return total;
}

namespace {

CostedAssignment kernel_scan(const Solution &solution, std::span<const std::uint32_t> cost) {
    BitVector x = solution.particular;
    CostedAssignment best{x, assignment_cost(x, cost), true, SearchMethod::kKernelScan};
    const std::uint64_t combinations = std::uint64_t{1} << solution.kernel_dimension();
    // Gray-code walk: each step toggles exactly one basis vector.
    for (std::uint64_t g = 1; g < combinations; g++) {
        x ^= solution.basis[static_cast<std::size_t>(std::countr_zero(g))];
        std::uint64_t c = assignment_cost(x, cost);
        if (c < best.cost || (c == best.cost && x.lex_less(best.assignment))) {
            best.assignment = x;
            best.cost = c;
        }
    }
    return best;
}

CostedAssignment syndrome_search(const Solution &solution, std::span<const std::uint32_t> cost) {
    const std::size_t n = solution.particular.size();
    const std::size_t rank = solution.rank();
    const std::size_t states = std::size_t{1} << rank;

    std::vector<std::uint32_t> syndrome(n, 0);
    for (std::size_t r = 0; r < rank; r++) {
        for (std::size_t col : solution.reduced_rows[r].ones()) {
            syndrome[col] |= std::uint32_t{1} << r;
        }
    }
    std::uint32_t target = 0;
    for (std::size_t r = 0; r < rank; r++) {
        if (solution.reduced_rhs.get(r)) {
            target |= std::uint32_t{1} << r;
        }
    }

    // Cheapest column per syndrome, first in variable order on ties.
    std::vector<std::size_t> moves;
    {
        std::vector<std::int64_t> cheapest(states, -1);
        for (std::size_t col = 0; col < n; col++) {
            std::uint32_t s = syndrome[col];
            if (s == 0) {
                continue;
            }
            if (cheapest[s] < 0 || cost[col] < cost[static_cast<std::size_t>(cheapest[s])]) {
                cheapest[s] = static_cast<std::int64_t>(col);
            }
        }
        for (std::size_t s = 0; s < states; s++) {
            if (cheapest[s] >= 0) {
                moves.push_back(static_cast<std::size_t>(cheapest[s]));
            }
        }
        std::sort(moves.begin(), moves.end());
    }

    constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> dist(states, kInf);
    std::vector<std::int32_t> via(states, -1);
    std::vector<std::vector<std::uint32_t>> buckets(1);
    dist[0] = 0;
    buckets[0].push_back(0);
    for (std::size_t d = 0; d < buckets.size() && d < dist[target]; d++) {
        // The bucket may grow while it is processed when zero-cost moves exist.
        for (std::size_t i = 0; i < buckets[d].size(); i++) {
            std::uint32_t s = buckets[d][i];
            if (dist[s] != d) {
                continue;
            }
            if (s == target) {
                break;
            }
            for (std::size_t col : moves) {
                std::uint32_t t = s ^ syndrome[col];
                std::uint64_t nd = d + cost[col];
                if (nd < dist[t]) {
                    dist[t] = nd;
                    via[t] = static_cast<std::int32_t>(col);
                    if (nd >= buckets.size()) {
                        buckets.resize(nd + 1);
                    }
                    buckets[nd].push_back(t);
                }
            }
        }
    }

    BitVector x(n);
    for (std::uint32_t s = target; s != 0;) {
        std::size_t col = static_cast<std::size_t>(via[s]);
        x.flip(col);
        s ^= syndrome[col];
    }
    return {x, assignment_cost(x, cost), true, SearchMethod::kSyndromeSearch};
}

}  // namespace

CostedAssignment min_cost_solution(const Solution &solution, std::span<const std::uint32_t> cost,
                                   SearchBudget budget) {
    if (cost.size() != solution.particular.size()) {
        throw std::invalid_argument("cost vector length does not match the variable count");
    }
    if (solution.kernel_dimension() == 0) {
        return {solution.particular, assignment_cost(solution.particular, cost), true, SearchMethod::kUnique};
    }
    if (solution.kernel_dimension() <= budget.kernel_bits && solution.kernel_dimension() < 63) {
        return kernel_scan(solution, cost);
    }
    if (solution.rank() <= budget.syndrome_bits && solution.rank() < 32) {
        return syndrome_search(solution, cost);
    }
    // Neither space is small enough to search exactly: descend from the
    // particular solution by single kernel-vector moves.
    BitVector x = solution.particular;
    std::uint64_t best = assignment_cost(x, cost);
    for (bool improved = true; improved;) {
        improved = false;
        for (const BitVector &b : solution.basis) {
            x ^= b;
            std::uint64_t c = assignment_cost(x, cost);
            if (c < best) {
                best = c;
                improved = true;
            } else {
                x ^= b;
            }
        }
    }
    return {x, best, false, SearchMethod::kUncertified};
}

}  // namespace listgrover::gf2
