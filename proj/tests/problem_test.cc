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

#include "listgrover/problem.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "listgrover/errors.h"
#include "listgrover/problem_io.h"
#include "support/oracles.h"

using namespace listgrover;
namespace oracle = listgrover::testing;

namespace {

ProblemInput triangle(std::vector<std::int64_t> list) {
    ProblemInput in;
    in.vertices = {"1", "2", "3"};
    in.edges = {{"1", "2"}, {"2", "3"}, {"1", "3"}};
    for (const auto &v : in.vertices) in.lists[v] = list;
    return in;
}

ProblemInput complete4() {
    ProblemInput in;
    in.vertices = {"1", "2", "3", "4"};
    in.edges = {{"1", "2"}, {"1", "3"}, {"1", "4"}, {"2", "3"}, {"2", "4"}, {"3", "4"}, {"1", "4"}};
    for (const auto &v : in.vertices) in.lists[v] = {0, 1, 2, 3};
    return in;
}

std::set<Coloring> as_colorings(const Problem &p, const std::vector<Assignment> &all) {
    std::set<Coloring> out;
    for (const Assignment &a : all) out.insert(to_coloring(p, a));
    return out;
}

}  // namespace

TEST(validate_problem, deduplicates_edges) {
    Problem p = validate_problem(complete4());
    EXPECT_EQ(p.edge_count(), 6u);
    EXPECT_EQ(p.vertex_count(), 4u);
}

TEST(validate_problem, single_vertex_unchanged) {
    ProblemInput in;
    in.vertices = {"a"};
    in.lists["a"] = {0};
    Problem p = validate_problem(in);
    EXPECT_EQ(p.vertex_count(), 1u);
    EXPECT_EQ(p.edge_count(), 0u);
    EXPECT_EQ(p.list(0), ColorList{0});
}

TEST(validate_problem, errors) {
    ProblemInput loop = triangle({1, 2, 3});
    loop.edges.push_back({"2", "2"});
    EXPECT_THROW(validate_problem(loop), InputError);

    ProblemInput undeclared = triangle({1, 2, 3});
    undeclared.edges.push_back({"1", "9"});
    EXPECT_THROW(validate_problem(undeclared), InputError);

    ProblemInput empty_list = triangle({1, 2, 3});
    empty_list.lists["2"] = {};
    EXPECT_THROW(validate_problem(empty_list), InputError);

    ProblemInput missing_list = triangle({1, 2, 3});
    missing_list.lists.erase("3");
    EXPECT_THROW(validate_problem(missing_list), InputError);

    EXPECT_THROW(validate_problem(ProblemInput{}), InputError);

    ProblemInput negative = triangle({-1, 2});
    EXPECT_THROW(validate_problem(negative), InputError);
}

TEST(validate_problem, sorts_lists) {
    Problem p = validate_problem(triangle({3, 1, 2, 3}));
    EXPECT_EQ(p.list(0), (ColorList{1, 2, 3}));
}

TEST(bit_width, examples) {
    EXPECT_EQ(bit_width(ColorList{1, 2, 3}), 2u);
    EXPECT_EQ(bit_width(ColorList{0}), 1u);
    EXPECT_EQ(bit_width(ColorList{0, 1, 2, 3, 4}), 3u);
    EXPECT_EQ(bit_width(ColorList{4}), 3u);
    EXPECT_EQ(bit_width(ColorList{7}), 3u);
    EXPECT_EQ(bit_width(ColorList{8}), 4u);
}

TEST(register_layout, counts_and_order) {
    Problem k3 = validate_problem(triangle({1, 2, 3}));
    RegisterLayout l = k3.layout();
    EXPECT_EQ(l.total, 10u);
    EXPECT_EQ(l.vertex_qubits, 6u);
    EXPECT_EQ(l.vertex_offset, (std::vector<std::size_t>{0, 2, 4}));
    EXPECT_EQ(l.edge_qubit, (std::vector<std::size_t>{6, 7, 8}));
    EXPECT_EQ(l.phase_ancilla, 9u);

    Problem k4 = validate_problem(complete4());
    EXPECT_EQ(k4.layout().total, 15u);
}

TEST(register_layout, total_matches_formula_on_random_problems) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; trial++) {
        Problem p = oracle::random_problem(rng, 6, 9, 0.5, 1u << 20);
        RegisterLayout l = p.layout();
        std::size_t widths = 0;
        for (const ColorList &list : p.lists()) widths += bit_width(list);
        EXPECT_EQ(l.total, widths + p.edge_count() + 1);
        // Disjoint contiguous registers.
        for (std::size_t v = 0; v + 1 < p.vertex_count(); v++) {
            EXPECT_EQ(l.vertex_offset[v] + l.vertex_width[v], l.vertex_offset[v + 1]);
        }
    }
}

TEST(is_proper_coloring, triangle) {
    Problem k3 = validate_problem(triangle({1, 2, 3}));
    EXPECT_TRUE(is_proper_coloring(k3, {{"1", 1}, {"2", 2}, {"3", 3}}));
    EXPECT_FALSE(is_proper_coloring(k3, {{"1", 1}, {"2", 1}, {"3", 2}}));
    EXPECT_FALSE(is_proper_coloring(k3, {{"1", 0}, {"2", 1}, {"3", 2}}));
    EXPECT_NE(first_violation(k3, {{"1", 1}, {"2", 1}, {"3", 2}})->find("edge 1-2"), std::string::npos);
    EXPECT_NE(first_violation(k3, {{"1", 0}, {"2", 1}, {"3", 2}})->find("not in its list"), std::string::npos);
}

TEST(is_proper_coloring, agrees_with_definition_exhaustively) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; trial++) {
        Problem p = oracle::random_problem(rng, 4, 3, 0.6, 256);
        std::set<Assignment> valid;
        for (const Assignment &a : enumerate_valid_colorings(p, true).colorings) valid.insert(a);
        // Every tuple over {0..3}^n, including colors outside the lists.
        std::size_t n = p.vertex_count();
        std::size_t total = std::size_t{1} << (2 * n);
        for (std::size_t code = 0; code < total; code++) {
            Assignment a(n);
            for (std::size_t v = 0; v < n; v++) a[v] = static_cast<Color>((code >> (2 * v)) & 3);
            EXPECT_EQ(is_proper_coloring(p, to_coloring(p, a)), valid.count(a) == 1);
        }
    }
}

TEST(enumerate_valid_colorings, examples) {
    EXPECT_EQ(enumerate_valid_colorings(validate_problem(triangle({1, 2, 3}))).count, 6u);
    EXPECT_EQ(enumerate_valid_colorings(validate_problem(complete4())).count, 24u);

    ProblemInput conflict;
    conflict.vertices = {"u", "v"};
    conflict.edges = {{"u", "v"}};
    conflict.lists = {{"u", {1}}, {"v", {1}}};
    EXPECT_EQ(enumerate_valid_colorings(validate_problem(conflict)).count, 0u);
}

TEST(enumerate_valid_colorings, cap) {
    Problem k4 = validate_problem(complete4());
    EXPECT_THROW(enumerate_valid_colorings(k4, false, 255), ResourceLimitError);
    EXPECT_NO_THROW(enumerate_valid_colorings(k4, false, 256));
}

TEST(enumerate_valid_colorings, matches_recursive_search) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; trial++) {
        Problem p = oracle::random_problem(rng, 5, 5, 0.5, 4096);
        auto fast = enumerate_valid_colorings(p, true);
        auto slow = oracle::brute_force_colorings(p);
        ASSERT_EQ(fast.count, slow.size());
        EXPECT_EQ(as_colorings(p, fast.colorings), as_colorings(p, slow));
    }
}

TEST(reduce_singletons, two_forced_steps) {
    ProblemInput in;
    in.vertices = {"u", "v"};
    in.edges = {{"u", "v"}};
    in.lists = {{"u", {2}}, {"v", {1, 2}}};
    SingletonReduction r = reduce_singletons(validate_problem(in));
    EXPECT_EQ(r.residual.vertex_count(), 0u);
    EXPECT_EQ(r.forced, (Coloring{{"u", 2}, {"v", 1}}));
}

TEST(reduce_singletons, fixed_point) {
    Problem k3 = validate_problem(triangle({1, 2, 3}));
    SingletonReduction r = reduce_singletons(k3);
    EXPECT_EQ(r.residual, k3);
    EXPECT_TRUE(r.forced.empty());
}

TEST(reduce_singletons, unsatisfiable) {
    ProblemInput in;
    in.vertices = {"u", "v"};
    in.edges = {{"u", "v"}};
    in.lists = {{"u", {1}}, {"v", {1}}};
    EXPECT_THROW(reduce_singletons(validate_problem(in)), UnsatisfiableError);
}

TEST(remap_colors, rank_map) {
    ProblemInput in;
    in.vertices = {"a", "b"};
    in.lists = {{"a", {5, 9}}, {"b", {9, 12}}};
    ColorRemap r = remap_colors(validate_problem(in));
    EXPECT_EQ(r.problem.list(0), (ColorList{0, 1}));
    EXPECT_EQ(r.problem.list(1), (ColorList{1, 2}));
    EXPECT_EQ(r.map.originals(), (std::vector<Color>{5, 9, 12}));
    EXPECT_EQ(r.map.to_compact(12), 2u);
    EXPECT_EQ(r.map.to_original(1), 9u);
}

TEST(remap_colors, identity_and_k3) {
    ProblemInput in;
    in.vertices = {"a", "b"};
    in.lists = {{"a", {0, 1}}, {"b", {1, 2}}};
    EXPECT_TRUE(remap_colors(validate_problem(in)).map.is_identity());

    ColorRemap k3 = remap_colors(validate_problem(triangle({1, 2, 3})));
    EXPECT_EQ(k3.problem.list(0), (ColorList{0, 1, 2}));
    EXPECT_EQ(bit_width(k3.problem.list(0)), 2u);
    EXPECT_EQ(enumerate_valid_colorings(k3.problem).count, 6u);
}

TEST(preprocessing, preserves_solution_sets) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; trial++) {
        Problem p = oracle::random_problem(rng, 5, 3, 0.5, 1024);
        std::set<Coloring> before = as_colorings(p, oracle::brute_force_colorings(p));
        std::set<Coloring> after;
        try {
            SingletonReduction red = reduce_singletons(p);
            ColorRemap remap = remap_colors(red.residual);
            for (const Assignment &a : oracle::brute_force_colorings(remap.problem)) {
                Coloring c = red.forced;
                for (std::size_t v = 0; v < a.size(); v++) {
                    c[remap.problem.vertices()[v]] = remap.map.to_original(a[v]);
                }
                after.insert(c);
            }
        } catch (const UnsatisfiableError &) {
        }
        EXPECT_EQ(before, after);
    }
}

TEST(problem_io, round_trip_and_errors) {
    Problem k4 = validate_problem(complete4());
    Problem again = validate_problem(parse_problem_json(problem_to_json(k4)));
    EXPECT_EQ(k4, again);

    EXPECT_THROW(parse_problem_json("{"), InputError);
    EXPECT_THROW(parse_problem_json(R"({"vertices": ["a"], "edges": []})"), InputError);
    EXPECT_THROW(parse_problem_json(R"({"vertices": ["a"], "edges": [["a"]], "lists": {"a": [0]}})"), InputError);
    EXPECT_THROW(parse_problem_json(R"({"vertices": ["a"], "edges": [], "lists": {"a": ["x"]}})"), InputError);

    EXPECT_EQ(parse_color_list("3, 1,2"), (ColorList{1, 2, 3}));
    EXPECT_THROW(parse_color_list("1,,2"), InputError);
    EXPECT_THROW(parse_color_list("a"), InputError);

    Coloring c = parse_coloring_json(R"({"1": 1, "2": 2})");
    EXPECT_EQ(c, (Coloring{{"1", 1}, {"2", 2}}));
    EXPECT_THROW(parse_coloring_json(R"({"1": -1})"), InputError);
}
