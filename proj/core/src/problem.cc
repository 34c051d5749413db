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

#include <algorithm>
#include <bit>
#include <limits>
#include <set>

#include "listgrover/errors.h"

namespace listgrover {

std::vector<std::size_t> RegisterLayout::vertex_register(std::size_t v) const {
    std::vector<std::size_t> result(vertex_width[v]);
    for (std::size_t k = 0; k < result.size(); k++) {
        result[k] = vertex_offset[v] + k;
    }
    return result;
}

std::optional<std::size_t> Problem::index_of(const std::string &name) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), name);
    if (it == vertices_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::vector<std::size_t> Problem::neighbors(std::size_t v) const {
    std::vector<std::size_t> result;
    for (const Edge &e : edges_) {
        if (e.u == v) {
            result.push_back(e.v);
        } else if (e.v == v) {
            result.push_back(e.u);
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

RegisterLayout Problem::layout() const {
    RegisterLayout layout;
    std::size_t next = 0;
    for (const ColorList &list : lists_) {
        std::size_t w = bit_width(list);
        layout.vertex_offset.push_back(next);
        layout.vertex_width.push_back(w);
        next += w;
    }
    layout.vertex_qubits = next;
    for (std::size_t e = 0; e < edges_.size(); e++) {
        layout.edge_qubit.push_back(next++);
    }
    layout.phase_ancilla = next++;
    layout.total = next;
    return layout;
}

std::uint64_t Problem::restricted_space_size() const {
    std::uint64_t size = 1;
    for (const ColorList &list : lists_) {
        if (size > std::numeric_limits<std::uint64_t>::max() / list.size()) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        size *= list.size();
    }
    return size;
}

ProblemInput Problem::to_input() const {
    ProblemInput input;
    input.vertices = vertices_;
    for (const Edge &e : edges_) {
        input.edges.emplace_back(vertices_[e.u], vertices_[e.v]);
    }
    for (std::size_t v = 0; v < vertices_.size(); v++) {
        input.lists[vertices_[v]] = std::vector<std::int64_t>(lists_[v].begin(), lists_[v].end());
    }
    return input;
}

Problem make_problem_unchecked(std::vector<std::string> vertices, std::vector<Edge> edges,
                               std::vector<ColorList> lists) {
    Problem p;
    p.vertices_ = std::move(vertices);
    p.edges_ = std::move(edges);
    p.lists_ = std::move(lists);
    return p;
}

Problem validate_problem(const ProblemInput &input) {
    if (input.vertices.empty()) {
        throw InputError("problem has no vertices");
    }
    std::map<std::string, std::size_t> index;
    for (std::size_t v = 0; v < input.vertices.size(); v++) {
        if (!index.emplace(input.vertices[v], v).second) {
            throw InputError("duplicate vertex '" + input.vertices[v] + "'");
        }
    }

    std::vector<ColorList> lists(input.vertices.size());
    for (const auto &[name, colors] : input.lists) {
        auto it = index.find(name);
        if (it == index.end()) {
            throw InputError("list given for undeclared vertex '" + name + "'");
        }
        ColorList list;
        for (std::int64_t c : colors) {
            if (c < 0 || c > std::numeric_limits<std::int32_t>::max()) {
                throw InputError("color " + std::to_string(c) + " of vertex '" + name + "' is out of range");
            }
            list.push_back(static_cast<Color>(c));
        }
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        lists[it->second] = std::move(list);
    }
    for (std::size_t v = 0; v < lists.size(); v++) {
        if (lists[v].empty()) {
            throw InputError("vertex '" + input.vertices[v] + "' has an empty color list");
        }
    }

    std::vector<Edge> edges;
    std::set<Edge> seen;
    for (const auto &[a, b] : input.edges) {
        auto ia = index.find(a);
        auto ib = index.find(b);
        if (ia == index.end() || ib == index.end()) {
            throw InputError("edge " + a + "-" + b + " has an undeclared endpoint");
        }
        if (ia->second == ib->second) {
            throw InputError("self-loop on vertex '" + a + "'");
        }
        Edge e{std::min(ia->second, ib->second), std::max(ia->second, ib->second)};
        if (seen.insert(e).second) {
            edges.push_back(e);
        }
    }

    return make_problem_unchecked(input.vertices, std::move(edges), std::move(lists));
}

std::size_t bit_width(std::span<const Color> list) {
    Color max = 0;
    for (Color c : list) {
        max = std::max(max, c);
    }
    return std::max<std::size_t>(1, std::bit_width(max));
}

bool is_proper_assignment(const Problem &p, std::span<const Color> a) {
    if (a.size() != p.vertex_count()) {
        return false;
    }
    for (std::size_t v = 0; v < a.size(); v++) {
        if (!std::binary_search(p.list(v).begin(), p.list(v).end(), a[v])) {
            return false;
        }
    }
    for (const Edge &e : p.edges()) {
        if (a[e.u] == a[e.v]) {
            return false;
        }
    }
    return true;
}

std::optional<std::string> first_violation(const Problem &p, const Coloring &c) {
    for (std::size_t v = 0; v < p.vertex_count(); v++) {
        const std::string &name = p.vertices()[v];
        auto it = c.find(name);
        if (it == c.end()) {
            return "vertex " + name + " is not colored";
        }
        if (!std::binary_search(p.list(v).begin(), p.list(v).end(), it->second)) {
            return "vertex " + name + " has color " + std::to_string(it->second) + " which is not in its list";
        }
    }
    for (const Edge &e : p.edges()) {
        const std::string &a = p.vertices()[e.u];
        const std::string &b = p.vertices()[e.v];
        if (c.at(a) == c.at(b)) {
            return "edge " + a + "-" + b + " has both endpoints colored " + std::to_string(c.at(a));
        }
    }
    return std::nullopt;
}

bool is_proper_coloring(const Problem &p, const Coloring &c) { return !first_violation(p, c).has_value(); }

Coloring to_coloring(const Problem &p, std::span<const Color> a) {
    Coloring c;
    for (std::size_t v = 0; v < p.vertex_count() && v < a.size(); v++) {
        c[p.vertices()[v]] = a[v];
    }
    return c;
}

Assignment to_assignment(const Problem &p, const Coloring &c) {
    Assignment a(p.vertex_count());
    for (std::size_t v = 0; v < a.size(); v++) {
        a[v] = c.at(p.vertices()[v]);
    }
    return a;
}

EnumerationResult enumerate_valid_colorings(const Problem &p, bool collect, std::uint64_t cap) {
    std::uint64_t space = p.restricted_space_size();
    if (space > cap) {
        throw ResourceLimitError("restricted space of size " + std::to_string(space) +
                                 " exceeds the enumeration cap of " + std::to_string(cap));
    }
    EnumerationResult result;
    const std::size_t n = p.vertex_count();
    if (n == 0) {
        result.count = 1;
        if (collect) {
            result.colorings.emplace_back();
        }
        return result;
    }

    // Odometer over list positions, last vertex fastest.
    std::vector<std::size_t> pos(n, 0);
    Assignment a(n);
    for (std::size_t v = 0; v < n; v++) {
        a[v] = p.list(v)[0];
    }
    while (true) {
        bool proper = true;
        for (const Edge &e : p.edges()) {
            if (a[e.u] == a[e.v]) {
                proper = false;
                break;
            }
        }
        if (proper) {
            result.count++;
            if (collect) {
                result.colorings.push_back(a);
            }
        }
        std::size_t v = n;
        while (v > 0) {
            v--;
            if (++pos[v] < p.list(v).size()) {
                a[v] = p.list(v)[pos[v]];
                break;
            }
            pos[v] = 0;
            a[v] = p.list(v)[0];
            if (v == 0) {
                return result;
            }
        }
    }
}

SingletonReduction reduce_singletons(const Problem &p) {
    const std::size_t n = p.vertex_count();
    std::vector<ColorList> lists = p.lists();
    std::vector<bool> removed(n, false);
    Coloring forced;

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t v = 0; v < n; v++) {
            if (removed[v] || lists[v].size() != 1) {
                continue;
            }
            Color c = lists[v][0];
            forced[p.vertices()[v]] = c;
            removed[v] = true;
            changed = true;
            for (std::size_t w : p.neighbors(v)) {
                if (removed[w]) {
                    continue;
                }
                auto it = std::lower_bound(lists[w].begin(), lists[w].end(), c);
                if (it != lists[w].end() && *it == c) {
                    lists[w].erase(it);
                }
                if (lists[w].empty()) {
                    throw UnsatisfiableError("unsatisfiable by propagation: vertex '" + p.vertices()[w] +
                                             "' has no color left");
                }
            }
        }
    }

    std::vector<std::size_t> new_index(n, 0);
    std::vector<std::string> vertices;
    std::vector<ColorList> residual_lists;
    for (std::size_t v = 0; v < n; v++) {
        if (!removed[v]) {
            new_index[v] = vertices.size();
            vertices.push_back(p.vertices()[v]);
            residual_lists.push_back(std::move(lists[v]));
        }
    }
    std::vector<Edge> edges;
    for (const Edge &e : p.edges()) {
        if (!removed[e.u] && !removed[e.v]) {
            edges.push_back({new_index[e.u], new_index[e.v]});
        }
    }
    return {make_problem_unchecked(std::move(vertices), std::move(edges), std::move(residual_lists)),
            std::move(forced)};
}

ColorMap::ColorMap(std::vector<Color> originals) : originals_(std::move(originals)) {
    std::sort(originals_.begin(), originals_.end());
    originals_.erase(std::unique(originals_.begin(), originals_.end()), originals_.end());
}

Color ColorMap::to_compact(Color original) const {
    auto it = std::lower_bound(originals_.begin(), originals_.end(), original);
    if (it == originals_.end() || *it != original) {
        throw InputError("color " + std::to_string(original) + " is not in the color map");
    }
    return static_cast<Color>(it - originals_.begin());
}

bool ColorMap::is_identity() const {
    for (std::size_t k = 0; k < originals_.size(); k++) {
        if (originals_[k] != k) {
            return false;
        }
    }
    return true;
}

ColorRemap remap_colors(const Problem &p) {
    std::vector<Color> used;
    for (const ColorList &list : p.lists()) {
        used.insert(used.end(), list.begin(), list.end());
    }
    ColorMap map(std::move(used));
    std::vector<ColorList> lists;
    for (const ColorList &list : p.lists()) {
        ColorList compact;
        for (Color c : list) {
            compact.push_back(map.to_compact(c));
        }
        lists.push_back(std::move(compact));
    }
    return {make_problem_unchecked(p.vertices(), p.edges(), std::move(lists)), std::move(map)};
}

}  // namespace listgrover
