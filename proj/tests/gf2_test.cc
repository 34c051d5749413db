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

#include <gtest/gtest.h>

#include <random>

#include "listgrover/synth.h"
#include "support/oracles.h"

using namespace listgrover;
namespace oracle = listgrover::testing;
using gf2::BitVector;
using gf2::System;

namespace {

BitVector bits(const std::string &s) {
    BitVector v(s.size());
    for (std::size_t i = 0; i < s.size(); i++) v.set(i, s[i] == '1');
    return v;
}

System random_system(std::mt19937_64 &rng, std::size_t vars, std::size_t rows, bool consistent) {
    System sys(vars);
    BitVector witness(vars);
    for (std::size_t i = 0; i < vars; i++) witness.set(i, rng() & 1);
    for (std::size_t r = 0; r < rows; r++) {
        BitVector row(vars);
        for (std::size_t i = 0; i < vars; i++) row.set(i, rng() % 3 == 0);
        bool value = consistent ? row.dot(witness) : (rng() & 1);
        sys.add_equation(row, value);
    }
    return sys;
}

}  // namespace

TEST(bit_vector, basics) {
    BitVector v = bits("0110");
    EXPECT_EQ(v.popcount(), 2u);
    EXPECT_EQ(v.ones(), (std::vector<std::size_t>{1, 2}));
    EXPECT_EQ(v.to_string(), "0110");
    EXPECT_TRUE(v.dot(bits("0100")));
    EXPECT_FALSE(v.dot(bits("0110")));
    EXPECT_TRUE(bits("0111").lex_less(bits("1000")));
    EXPECT_FALSE(bits("1000").lex_less(bits("0111")));

    BitVector wide(130);
    wide.set(129);
    wide.set(64);
    EXPECT_EQ(wide.ones(), (std::vector<std::size_t>{64, 129}));
    wide ^= wide;
    EXPECT_TRUE(wide.none());
}

TEST(gaussian_eliminate, identity_system) {
    System sys(3);
    sys.add_equation(bits("100"), true);
    sys.add_equation(bits("010"), false);
    sys.add_equation(bits("001"), true);
    auto sol = gaussian_eliminate(sys);
    ASSERT_TRUE(sol);
    EXPECT_EQ(sol->particular, bits("101"));
    EXPECT_TRUE(sol->basis.empty());
}

TEST(gaussian_eliminate, one_free_variable) {
    System sys(2);
    sys.add_equation(bits("11"), true);
    auto sol = gaussian_eliminate(sys);
    ASSERT_TRUE(sol);
    EXPECT_EQ(sol->particular, bits("10"));
    ASSERT_EQ(sol->basis.size(), 1u);
    EXPECT_EQ(sol->basis[0], bits("11"));
    EXPECT_EQ(sol->free_variables, (std::vector<std::size_t>{1}));
}

TEST(gaussian_eliminate, infeasible) {
    System sys(2);
    sys.add_equation(bits("11"), true);
    sys.add_equation(bits("11"), false);
    EXPECT_FALSE(gaussian_eliminate(sys));
}

TEST(gaussian_eliminate, triangle_pair_system_feasible_at_two) {
    ColorList l{1, 2, 3};
    auto vars = enumerate_terms(4, 2);
    System sys = build_reduction_system(l, l, vars);
    EXPECT_EQ(sys.equation_count(), 9u);
    EXPECT_TRUE(gaussian_eliminate(sys));
    // Single-wire terms alone cannot express inequality.
    EXPECT_FALSE(gaussian_eliminate(build_reduction_system(l, l, enumerate_terms(4, 1))));
}

TEST(gaussian_eliminate, deterministic) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; trial++) {
        System sys = random_system(rng, 70, 40, true);
        auto a = gaussian_eliminate(sys);
        auto b = gaussian_eliminate(sys);
        ASSERT_TRUE(a && b);
        EXPECT_EQ(a->particular, b->particular);
        EXPECT_EQ(a->basis, b->basis);
        EXPECT_EQ(a->pivot_columns, b->pivot_columns);
    }
}

TEST(gaussian_eliminate, solutions_satisfy_by_substitution) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; trial++) {
        std::size_t vars = 1 + rng() % 150;
        std::size_t rows = 1 + rng() % 100;
        System sys = random_system(rng, vars, rows, trial % 4 != 0);
        auto sol = gaussian_eliminate(sys);
        if (!sol) {
            // Inconsistency must be real: try every solution for small sizes.
            if (vars <= 16) {
                for (std::uint64_t code = 0; code < (std::uint64_t{1} << vars); code++) {
                    BitVector x(vars);
                    for (std::size_t i = 0; i < vars; i++) x.set(i, (code >> i) & 1);
                    ASSERT_FALSE(sys.satisfied_by(x));
                }
            }
            continue;
        }
        EXPECT_EQ(sol->rank() + sol->kernel_dimension(), vars);
        ASSERT_TRUE(sys.satisfied_by(sol->particular));
        for (const BitVector &k : sol->basis) {
            System homogeneous = sys;
            homogeneous.rhs = BitVector(rows);
            EXPECT_TRUE(homogeneous.satisfied_by(k));
        }
        for (int combo = 0; combo < 100; combo++) {
            BitVector x = sol->particular;
            for (const BitVector &k : sol->basis) {
                if (rng() & 1) x ^= k;
            }
            ASSERT_TRUE(sys.satisfied_by(x));
        }
    }
}

TEST(min_cost_solution, unique) {
    System sys(2);
    sys.add_equation(bits("10"), true);
    sys.add_equation(bits("01"), true);
    auto sol = gaussian_eliminate(sys);
    std::vector<std::uint32_t> cost{3, 4};
    auto best = gf2::min_cost_solution(*sol, cost);
    EXPECT_EQ(best.cost, 7u);
    EXPECT_TRUE(best.certified);
    EXPECT_EQ(best.method, gf2::SearchMethod::kUnique);
}

TEST(min_cost_solution, two_candidates) {
    // x0 + x1 = 1 with x1 = x2: solutions {x0} and {x1, x2}.
    System sys(3);
    sys.add_equation(bits("110"), true);
    sys.add_equation(bits("011"), false);
    auto sol = gaussian_eliminate(sys);
    ASSERT_EQ(sol->kernel_dimension(), 1u);
    std::vector<std::uint32_t> cost{5, 1, 2};
    auto best = gf2::min_cost_solution(*sol, cost);
    EXPECT_EQ(best.cost, 3u);
    EXPECT_EQ(best.assignment, bits("011"));
    EXPECT_TRUE(best.certified);
}

TEST(min_cost_solution, lexicographic_tie_break) {
    System sys(2);
    sys.add_equation(bits("11"), true);
    auto sol = gaussian_eliminate(sys);
    std::vector<std::uint32_t> cost{1, 1};
    auto best = gf2::min_cost_solution(*sol, cost);
    EXPECT_EQ(best.assignment, bits("01"));
}

TEST(min_cost_solution, triangle_pair_costs_four) {
    ColorList l{1, 2, 3};
    auto vars = enumerate_terms(4, 2);
    auto sol = gaussian_eliminate(build_reduction_system(l, l, vars));
    std::vector<std::uint32_t> cost;
    for (const Term &t : vars) cost.push_back(static_cast<std::uint32_t>(t.weight()));
    auto best = gf2::min_cost_solution(*sol, cost);
    EXPECT_EQ(best.cost, 4u);
    EXPECT_TRUE(best.certified);
}

TEST(min_cost_solution, certified_results_match_exhaustive) {
    std::mt19937_64 rng(33);
    int checked = 0;
    for (int trial = 0; trial < 300; trial++) {
        std::size_t vars = 2 + rng() % 18;
        std::size_t rows = 1 + rng() % vars;
        System sys = random_system(rng, vars, rows, true);
        auto sol = gaussian_eliminate(sys);
        ASSERT_TRUE(sol);
        std::vector<std::uint32_t> cost(vars);
        for (auto &c : cost) c = static_cast<std::uint32_t>(rng() % 5);
        // Exercise both certifying tiers.
        gf2::SearchBudget budget;
        if (trial % 2) budget.kernel_bits = 0;
        auto best = gf2::min_cost_solution(*sol, cost, budget);
        ASSERT_TRUE(sys.satisfied_by(best.assignment));
        EXPECT_EQ(best.cost, gf2::assignment_cost(best.assignment, cost));
        if (!best.certified || sol->kernel_dimension() > 12) continue;
        checked++;
        EXPECT_EQ(best.cost, *oracle::min_cost_exhaustive(sys, cost)) << "trial " << trial;
    }
    EXPECT_GT(checked, 100);
}

TEST(min_cost_solution, fallback_is_feasible_and_flagged) {
    std::mt19937_64 rng(44);
    System sys = random_system(rng, 60, 30, true);
    auto sol = gaussian_eliminate(sys);
    std::vector<std::uint32_t> cost(60, 1);
    auto best = gf2::min_cost_solution(*sol, cost, gf2::SearchBudget{4, 4});
    EXPECT_FALSE(best.certified);
    EXPECT_EQ(best.method, gf2::SearchMethod::kUncertified);
    EXPECT_TRUE(sys.satisfied_by(best.assignment));
    EXPECT_LE(best.cost, gf2::assignment_cost(sol->particular, cost));
}
