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

#ifndef LISTGROVER_PROBLEM_H
#define LISTGROVER_PROBLEM_H

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace listgrover {

using Color = std::uint32_t;

/// Sorted, duplicate-free list of admissible colors for one vertex.
using ColorList = std::vector<Color>;

/// Total or partial assignment of colors, keyed by vertex name.
using Coloring = std::map<std::string, Color>;

/// Colors in vertex declaration order. Cheaper than Coloring for enumeration.
using Assignment = std::vector<Color>;

/// Unvalidated instance as read from a file or built by hand.
struct ProblemInput {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    std::map<std::string, std::vector<std::int64_t>> lists;
};

struct Edge {
    std::size_t u;  // index into Problem::vertices(), u < v
    std::size_t v;
    bool operator==(const Edge &) const = default;
    auto operator<=>(const Edge &) const = default;
};

/// Qubit index assignment for a problem.
///
/// Vertex registers come first in vertex order, each occupying `width[v]`
/// qubits with the most significant color bit first. The edge register
/// follows (one qubit per edge, in edge order) and the phase ancilla is last.
/// Scratch ancillas introduced by gate decomposition are not counted here.
struct RegisterLayout {
    std::vector<std::size_t> vertex_offset;
    std::vector<std::size_t> vertex_width;
    std::vector<std::size_t> edge_qubit;
    std::size_t phase_ancilla = 0;
    std::size_t vertex_qubits = 0;
    std::size_t total = 0;

    /// Qubit indices of vertex `v`'s register, MSB first.
    std::vector<std::size_t> vertex_register(std::size_t v) const;
};

class Problem {
   public:
    Problem() = default;

    const std::vector<std::string> &vertices() const { return vertices_; }
    const std::vector<Edge> &edges() const { return edges_; }
    const std::vector<ColorList> &lists() const { return lists_; }
    const ColorList &list(std::size_t v) const { return lists_[v]; }

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    /// Index of the named vertex, or nullopt.
    std::optional<std::size_t> index_of(const std::string &name) const;

    /// Indices of the neighbours of `v`, ascending.
    std::vector<std::size_t> neighbors(std::size_t v) const;

    RegisterLayout layout() const;

    /// |S| = product of list sizes; saturates at UINT64_MAX.
    std::uint64_t restricted_space_size() const;

    ProblemInput to_input() const;

    bool operator==(const Problem &) const = default;

   private:
    friend Problem validate_problem(const ProblemInput &input);
    friend Problem make_problem_unchecked(std::vector<std::string>, std::vector<Edge>, std::vector<ColorList>);

    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::vector<ColorList> lists_;
};

/// Normalizes raw input: sorts and deduplicates lists and edges (edges keep
/// first-seen order), rejects self-loops, undeclared endpoints, empty lists
/// and an empty vertex set. Throws InputError.
Problem validate_problem(const ProblemInput &input);

/// Builds a Problem from already-normalized parts; allows an empty vertex
/// set, which is what preprocessing leaves behind when everything is forced.
Problem make_problem_unchecked(std::vector<std::string> vertices, std::vector<Edge> edges,
                               std::vector<ColorList> lists);

/// Number of qubits needed to hold every color of the list: the bit length
/// of its maximum, and at least 1.
std::size_t bit_width(std::span<const Color> list);

bool is_proper_coloring(const Problem &p, const Coloring &c);
bool is_proper_assignment(const Problem &p, std::span<const Color> a);

/// Human-readable description of the first violated constraint, or nullopt
/// if `c` is a proper list coloring. Missing vertices count as violations.
std::optional<std::string> first_violation(const Problem &p, const Coloring &c);

Coloring to_coloring(const Problem &p, std::span<const Color> a);
Assignment to_assignment(const Problem &p, const Coloring &c);

struct EnumerationResult {
    std::uint64_t count = 0;
    std::vector<Assignment> colorings;  // filled only when requested
};

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

/// Brute force over the restricted space (product of the lists).
/// Throws ResourceLimitError if the space is larger than `cap`.
EnumerationResult enumerate_valid_colorings(const Problem &p, bool collect = false,
                                            std::uint64_t cap = kDefaultEnumerationCap);

struct SingletonReduction {
    Problem residual;
    Coloring forced;
};

/// Repeatedly colors singleton-list vertices, strikes their color from the
/// neighbours' lists and deletes them. Throws UnsatisfiableError when a list
/// runs empty.
SingletonReduction reduce_singletons(const Problem &p);

/// Order-preserving bijection between the colors in use and {0, ..., k-1}.
class ColorMap {
   public:
    ColorMap() = default;
    explicit ColorMap(std::vector<Color> originals);

    std::size_t size() const { return originals_.size(); }
    Color to_compact(Color original) const;
    Color to_original(Color compact) const { return originals_.at(compact); }
    const std::vector<Color> &originals() const { return originals_; }
    bool is_identity() const;

   private:
    std::vector<Color> originals_;  // sorted
};

struct ColorRemap {
    Problem problem;
    ColorMap map;
};

ColorRemap remap_colors(const Problem &p);

}  // namespace listgrover

#endif
