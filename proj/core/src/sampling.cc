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
#include <random>
#include <stdexcept>

#include "listgrover/sim.h"

namespace listgrover {

std::map<std::string, std::uint64_t> sample(const Distribution &d, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("shots must be at least 1");
    }
    std::vector<const std::string *> labels;
    std::vector<double> cumulative;
    double running = 0;
    for (const auto &[label, p] : d.probabilities) {
        if (p <= 0) {
            continue;
        }
        running += p;
        labels.push_back(&label);
        cumulative.push_back(running);
    }
    if (labels.empty()) {
        throw std::invalid_argument("cannot sample from an empty distribution");
    }

    std::mt19937_64 rng(seed);
    std::map<std::string, std::uint64_t> counts;
    for (std::uint64_t shot = 0; shot < shots; shot++) {
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * running;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(it - cumulative.begin()), labels.size() - 1);
        counts[*labels[k]]++;
    }
    return counts;
}

}  // namespace listgrover
