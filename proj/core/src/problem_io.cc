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

#include "listgrover/problem_io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "listgrover/errors.h"

namespace listgrover {

namespace {

using nlohmann::json;

std::string slurp(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open '" + path.string() + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

json parse(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

std::string vertex_name(const json &j) {
    if (j.is_string()) {
        return j.get<std::string>();
    }
    if (j.is_number_integer()) {
        return std::to_string(j.get<std::int64_t>());
    }
    throw InputError("vertex identifiers must be strings");
}

}  // namespace

ProblemInput parse_problem_json(std::string_view text) {
    json doc = parse(text);
    if (!doc.is_object()) {
        throw InputError("problem must be a JSON object");
    }
    for (const char *key : {"vertices", "edges", "lists"}) {
        if (!doc.contains(key)) {
            throw InputError(std::string("problem is missing \"") + key + "\"");
        }
    }
    if (!doc["vertices"].is_array() || !doc["edges"].is_array() || !doc["lists"].is_object()) {
        throw InputError("\"vertices\" and \"edges\" must be arrays and \"lists\" an object");
    }

    ProblemInput input;
    for (const json &v : doc["vertices"]) {
        input.vertices.push_back(vertex_name(v));
    }
    for (const json &e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2) {
            throw InputError("each edge must be a 2-element array");
        }
        input.edges.emplace_back(vertex_name(e[0]), vertex_name(e[1]));
    }
    for (const auto &[name, colors] : doc["lists"].items()) {
        if (!colors.is_array()) {
            throw InputError("list of vertex '" + name + "' must be an array");
        }
        std::vector<std::int64_t> list;
        for (const json &c : colors) {
            if (!c.is_number_integer()) {
                throw InputError("colors of vertex '" + name + "' must be integers");
            }
            list.push_back(c.get<std::int64_t>());
        }
        input.lists[name] = std::move(list);
    }
    return input;
}

ProblemInput read_problem_file(const std::filesystem::path &path) { return parse_problem_json(slurp(path)); }

std::string problem_to_json(const Problem &p) {
    json doc;
    doc["vertices"] = p.vertices();
    doc["edges"] = json::array();
    for (const Edge &e : p.edges()) {
        doc["edges"].push_back({p.vertices()[e.u], p.vertices()[e.v]});
    }
    doc["lists"] = json::object();
    for (std::size_t v = 0; v < p.vertex_count(); v++) {
        doc["lists"][p.vertices()[v]] = p.list(v);
    }
    return doc.dump(2);
}

Coloring parse_coloring_json(std::string_view text) {
    json doc = parse(text);
    if (!doc.is_object()) {
        throw InputError("coloring must be a JSON object mapping vertex to color");
    }
    Coloring c;
    for (const auto &[name, color] : doc.items()) {
        if (!color.is_number_integer() || color.get<std::int64_t>() < 0) {
            throw InputError("color of vertex '" + name + "' must be a non-negative integer");
        }
        c[name] = color.get<Color>();
    }
    return c;
}

Coloring read_coloring_file(const std::filesystem::path &path) { return parse_coloring_json(slurp(path)); }

std::string coloring_to_json(const Coloring &c) {
    json doc = json::object();
    for (const auto &[name, color] : c) {
        doc[name] = color;
    }
    return doc.dump();
}

ColorList parse_color_list(std::string_view text) {
    ColorList list;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view token = text.substr(start, end - start);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        Color value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
            throw InputError("cannot parse color list '" + std::string(text) + "'");
        }
        list.push_back(value);
        start = end + 1;
    }
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    return list;
}

}  // namespace listgrover
