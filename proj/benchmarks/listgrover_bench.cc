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

#include <benchmark/benchmark.h>

#include "listgrover/circuit.h"
#include "listgrover/problem.h"
#include "listgrover/sim.h"
#include "listgrover/synth.h"

using namespace listgrover;

namespace {

Problem complete(std::size_t n, std::vector<std::int64_t> list) {
    ProblemInput in;
    for (std::size_t i = 1; i <= n; i++) in.vertices.push_back(std::to_string(i));
    for (std::size_t a = 0; a < n; a++) {
        for (std::size_t b = a + 1; b < n; b++) in.edges.push_back({in.vertices[a], in.vertices[b]});
    }
    for (const auto &v : in.vertices) in.lists[v] = list;
    return validate_problem(in);
}

void BM_HadamardLayer(benchmark::State &state) {
    const auto q = static_cast<std::size_t>(state.range(0));
    StateVector s(q);
    for (auto _ : state) {
        for (std::size_t i = 0; i < q; i++) s.apply(Gate::h(i));
        benchmark::DoNotOptimize(s.amplitudes().data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(q));
}
BENCHMARK(BM_HadamardLayer)->Arg(10)->Arg(15)->Arg(20);

void BM_Toffoli(benchmark::State &state) {
    StateVector s(static_cast<std::size_t>(state.range(0)));
    Gate g = Gate::mcx({{0, true}, {1, false}}, 2);
    for (auto _ : state) {
        s.apply(g);
        benchmark::DoNotOptimize(s.amplitudes().data());
    }
}
BENCHMARK(BM_Toffoli)->Arg(15)->Arg(20);

void BM_OracleReduction(benchmark::State &state) {
    ColorList l;
    for (Color c = 0; c < static_cast<Color>(state.range(0)); c++) l.push_back(c);
    for (auto _ : state) benchmark::DoNotOptimize(oracle_reduction(l, l));
}
BENCHMARK(BM_OracleReduction)->Arg(3)->Arg(4)->Arg(6);

void BM_GroverRun(benchmark::State &state) {
    Problem p = state.range(0) == 3 ? complete(3, {1, 2, 3}) : complete(4, {0, 1, 2, 3});
    Circuit c = build_grover_circuit(grover_plan(p, IterationMode::kExactCount));
    for (auto _ : state) benchmark::DoNotOptimize(vertex_marginal(run(c), p.layout()));
}
BENCHMARK(BM_GroverRun)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
