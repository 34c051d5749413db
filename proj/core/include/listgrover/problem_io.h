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

#ifndef LISTGROVER_PROBLEM_IO_H
#define LISTGROVER_PROBLEM_IO_H

#include <filesystem>
#include <string>
#include <string_view>

#include "listgrover/problem.h"

namespace listgrover {

// Problem files are JSON objects:
//
//   {
//     "vertices": ["1", "2", "3"],
//     "edges":    [["1", "2"], ["2", "3"], ["1", "3"]],
//     "lists":    {"1": [1, 2, 3], "2": [1, 2, 3], "3": [1, 2, 3]}
//   }
//
// Vertex order fixes register order. Coloring files are a single object
// mapping vertex name to color, e.g. {"1": 1, "2": 2, "3": 3}.
// All parse failures are reported as InputError.

ProblemInput parse_problem_json(std::string_view text);
ProblemInput read_problem_file(const std::filesystem::path &path);
std::string problem_to_json(const Problem &p);

Coloring parse_coloring_json(std::string_view text);
Coloring read_coloring_file(const std::filesystem::path &path);
std::string coloring_to_json(const Coloring &c);

/// Parses "1,2,3" into a color list (sorted, deduplicated).
ColorList parse_color_list(std::string_view text);

}  // namespace listgrover

#endif
