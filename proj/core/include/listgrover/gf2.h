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

#ifndef LISTGROVER_GF2_H
#define LISTGROVER_GF2_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace listgrover::gf2 {

/// Fixed-length bit vector packed into 64-bit words. Bits past `size()` in
/// the last word are always zero.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool value = true) {
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        words_[i >> 6] = value ? (words_[i >> 6] | mask) : (words_[i >> 6] & ~mask);
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVector &operator^=(const BitVector &other);
    bool none() const;
    std::size_t popcount() const;
    std::vector<std::size_t> ones() const;

    std::span<const std::uint64_t> words() const { return words_; }

    /// Parity of the AND with `other`.
    bool dot(const BitVector &other) const;

    /// Lexicographic order with bit 0 most significant for comparison
    /// purposes, so that a vector with a 0 at the first differing position
    /// is the smaller one.
    bool lex_less(const BitVector &other) const;

    /// "0110..." with bit 0 first.
    std::string to_string() const;

    bool operator==(const BitVector &) const = default;

   private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Linear system rows * x = rhs over GF(2).
struct System {
    std::size_t variable_count = 0;
    std::vector<BitVector> rows;
    BitVector rhs;

    explicit System(std::size_t variables = 0) : variable_count(variables) {}

    /// Appends a row; `row.size()` must equal `variable_count`.
    void add_equation(BitVector row, bool value);
    std::size_t equation_count() const { return rows.size(); }

    /// Whether `x` satisfies every equation (direct substitution).
    bool satisfied_by(const BitVector &x) const;
};

/// All solutions of a feasible system: particular ^ span(basis).
struct Solution {
    BitVector particular;               // free variables zero
    std::vector<std::size_t> pivot_columns;
    std::vector<std::size_t> free_variables;
    std::vector<BitVector> basis;       // one kernel vector per free variable

    // Row-reduced echelon form: one row per pivot, same order as
    // pivot_columns. x is a solution iff reduced_rows * x == reduced_rhs.
    std::vector<BitVector> reduced_rows;
    BitVector reduced_rhs;

    std::size_t rank() const { return pivot_columns.size(); }
    std::size_t kernel_dimension() const { return free_variables.size(); }
};

/// Gauss-Jordan elimination, pivoting on the first available row of each
/// column in column order. Returns nullopt if some row reduces to 0 = 1.
std::optional<Solution> gaussian_eliminate(const System &system);

enum class SearchMethod {
    kUnique,          // empty kernel
    kKernelScan,      // all 2^f kernel combinations tried
    kSyndromeSearch,  // shortest path over the 2^rank syndrome space
    kUncertified,     // greedy descent, no optimality claim
};

const char *search_method_name(SearchMethod method);

struct SearchBudget {
    /// Kernel scan is used while the kernel dimension is at most this.
    std::size_t kernel_bits = 20;
    /// Syndrome search is used while the rank is at most this.
    std::size_t syndrome_bits = 16;
};

struct CostedAssignment {
    BitVector assignment;
    std::uint64_t cost = 0;
    bool certified = false;
    SearchMethod method = SearchMethod::kUncertified;
};

/// Minimizes sum(cost[i] * x[i]) over all solutions.
///
/// With a small kernel every solution is scanned and ties go to the
/// lexicographically smallest assignment. Otherwise, if the rank is small,
/// an exact Dijkstra search over syndromes R*x is run. If both spaces are too
/// large, a greedy descent from the particular solution is returned with
/// `certified == false`.
CostedAssignment min_cost_solution(const Solution &solution, std::span<const std::uint32_t> cost,
                                   SearchBudget budget = {});

std::uint64_t assignment_cost(const BitVector &x, std::span<const std::uint32_t> cost);

}  // namespace listgrover::gf2

#endif
