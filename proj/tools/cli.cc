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

#include "cli.h"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <nlohmann/json.hpp>

#include "listgrover/errors.h"
#include "listgrover/problem_io.h"

namespace listgrover::cli {

namespace {

using nlohmann::json;

int guarded(std::ostream &err, const std::function<int()> &body) {
    try {
        return body();
    } catch (const InputError &e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const ResourceLimitError &e) {
        err << "error: " << e.what() << '\n';
        return kResourceLimit;
    } catch (const UnsatisfiableError &e) {
        err << "unsatisfiable: " << e.what() << '\n';
        return kUnsatisfied;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
}

Problem load_problem(const std::filesystem::path &path) { return validate_problem(read_problem_file(path)); }

std::uint64_t edge_oracle_cost(const Problem &p) {
    std::map<std::pair<ColorList, ColorList>, std::uint64_t> cache;
    std::uint64_t total = 0;
    for (const Edge &e : p.edges()) {
        auto key = std::make_pair(p.list(e.u), p.list(e.v));
        auto it = cache.find(key);
        if (it == cache.end()) {
            it = cache.emplace(key, oracle_reduction(key.first, key.second).cost).first;
        }
        total += it->second;
    }
    return total;
}

struct Simulated {
    Circuit circuit;
    Distribution distribution;
};

Simulated simulate(const GroverPlan &plan, const SolveOptions &options) {
    Circuit circuit = lower(build_grover_circuit(plan), options.lowering);
    StateVector state = run(circuit, SimOptions{options.max_qubits});
    return {circuit, vertex_marginal(state, plan.problem.layout())};
}

}  // namespace

const char *verdict_name(Verdict v) {
    switch (v) {
        case Verdict::kSolved:
            return "solved";
        case Verdict::kUnsatisfiable:
            return "unsatisfiable";
        case Verdict::kNotFound:
            return "not-found";
        case Verdict::kLikelyUnsatisfiable:
            return "likely-unsatisfiable";
    }
    return "?";
}

std::string modal_state(const std::map<std::string, std::uint64_t> &counts) {
    std::string best;
    std::uint64_t best_count = 0;
    for (const auto &[label, n] : counts) {
        if (n > best_count) {
            best = label;
            best_count = n;
        }
    }
    return best;
}

RunReport solve(const Problem &problem, const SolveOptions &options) {
    const auto start = std::chrono::steady_clock::now();
    RunReport report;
    report.vertices = problem.vertex_count();
    report.edges = problem.edge_count();
    report.seed = options.seed;
    report.shots = options.shots;
    report.lowering = lowering_name(options.lowering);
    const bool unknown = options.mode == IterationMode::kUnknownCount && !options.iterations;
    report.mode = iteration_mode_name(options.iterations ? IterationMode::kFixed : options.mode);

    auto finish = [&](Verdict v, std::string reason) {
        report.verdict = v;
        report.reason = std::move(reason);
        report.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return report;
    };

    Problem work = problem;
    std::optional<ColorMap> map;
    if (options.reduce) {
        try {
            SingletonReduction reduced = reduce_singletons(problem);
            report.forced = reduced.forced;
            ColorRemap remapped = remap_colors(reduced.residual);
            work = std::move(remapped.problem);
            map = std::move(remapped.map);
            report.color_map = map->originals();
        } catch (const UnsatisfiableError &e) {
            return finish(Verdict::kUnsatisfiable, e.what());
        }
    }
    report.residual_vertices = work.vertex_count();
    report.residual_edges = work.edge_count();
    report.space_size = work.restricted_space_size();

    if (work.vertex_count() == 0) {
        if (auto violation = first_violation(problem, report.forced)) {
            return finish(Verdict::kNotFound, *violation);
        }
        report.coloring = report.forced;
        report.solution_count = 1;
        return finish(Verdict::kSolved, "every vertex forced by propagation");
    }

    const RegisterLayout layout = work.layout();
    report.layout_qubits = layout.total;
    if (work.edge_count() > 0) {
        report.edge_oracle_cost = edge_oracle_cost(work);
        report.full_oracle_cost = 2 * report.edge_oracle_cost + work.edge_count();
    }

    // Decodes a vertex-register label into a coloring of the original problem.
    auto decode = [&](const std::string &label) -> std::optional<Coloring> {
        Coloring c = report.forced;
        for (std::size_t v = 0; v < work.vertex_count(); v++) {
            Color value = 0;
            for (std::size_t k = 0; k < layout.vertex_width[v]; k++) {
                value = (value << 1) | (label[layout.vertex_offset[v] + k] == '1' ? 1 : 0);
            }
            if (map) {
                if (value >= map->size()) {
                    return std::nullopt;
                }
                value = map->to_original(value);
            }
            c[work.vertices()[v]] = value;
        }
        return c;
    };
    auto check = [&](const Distribution &d, std::size_t iterations, std::uint64_t seed) {
        report.histogram = sample(d, options.shots, seed);
        Attempt attempt{iterations, seed, modal_state(report.histogram), false};
        std::optional<Coloring> c = decode(attempt.modal_state);
        attempt.verified = c && is_proper_coloring(problem, *c);
        report.attempts.push_back(attempt);
        if (attempt.verified) {
            report.coloring = *c;
        }
        return attempt.verified;
    };
    auto record_circuit = [&](const Circuit &c) {
        report.circuit_qubits = c.qubit_count();
        report.scratch_ancillas = c.scratch_ancillas();
        report.gate_counts = c.gate_counts();
    };

    if (unknown) {
        UnknownCountSchedule schedule(report.space_size, options.seed);
        for (std::size_t attempt = 0; attempt < options.retry_cap; attempt++) {
            GroverPlan plan = grover_plan(work, IterationMode::kFixed, schedule.next());
            report.iterations = plan.iterations;
            Simulated sim = simulate(plan, options);
            record_circuit(sim.circuit);
            if (check(sim.distribution, plan.iterations, options.seed + attempt)) {
                return finish(Verdict::kSolved, "");
            }
        }
        return finish(Verdict::kLikelyUnsatisfiable,
                      "no verified coloring after " + std::to_string(options.retry_cap) + " circuit builds");
    }

    GroverPlan plan = grover_plan(work, options.iterations ? IterationMode::kFixed : IterationMode::kExactCount,
                                  options.iterations.value_or(0), options.enumeration_cap);
    report.iterations = plan.iterations;
    if (plan.solution_count_known) {
        report.solution_count = plan.solution_count;
    }
    if (plan.unsatisfiable) {
        return finish(Verdict::kUnsatisfiable, "exact count found no proper coloring");
    }
    Simulated sim = simulate(plan, options);
    record_circuit(sim.circuit);
    for (std::size_t attempt = 0; attempt < options.retry_cap; attempt++) {
        if (check(sim.distribution, plan.iterations, options.seed + attempt)) {
            return finish(Verdict::kSolved, "");
        }
    }
    return finish(Verdict::kNotFound,
                  "modal sample failed verification in " + std::to_string(options.retry_cap) + " sampling passes");
}

std::string report_to_json(const RunReport &r) {
    json doc;
    doc["problem"] = {{"vertices", r.vertices},
                      {"edges", r.edges},
                      {"residual_vertices", r.residual_vertices},
                      {"residual_edges", r.residual_edges},
                      {"forced", r.forced},
                      {"color_map", r.color_map}};
    doc["plan"] = {{"mode", r.mode},
                   {"space_size", r.space_size},
                   {"solution_count", r.solution_count ? json(*r.solution_count) : json(nullptr)},
                   {"iterations", r.iterations}};
    doc["circuit"] = {{"layout_qubits", r.layout_qubits},
                      {"scratch_ancillas", r.scratch_ancillas},
                      {"qubits", r.circuit_qubits},
                      {"lowering", r.lowering},
                      {"gate_counts", r.gate_counts},
                      {"edge_oracle_cost", r.edge_oracle_cost},
                      {"full_oracle_cost", r.full_oracle_cost}};
    json attempts = json::array();
    for (const Attempt &a : r.attempts) {
        attempts.push_back(
            {{"iterations", a.iterations}, {"seed", a.seed}, {"modal_state", a.modal_state}, {"verified", a.verified}});
    }
    doc["sampling"] = {{"shots", r.shots},
                       {"seed", r.seed},
                       {"algorithm", r.sampler},
                       {"histogram", r.histogram},
                       {"attempts", attempts}};
    doc["verdict"] = verdict_name(r.verdict);
    if (!r.reason.empty()) {
        doc["reason"] = r.reason;
    }
    doc["coloring"] = r.coloring ? json(*r.coloring) : json(nullptr);
    doc["elapsed_ms"] = r.elapsed_ms;
    return doc.dump(2);
}

SimulatedPlan simulate_plan(const Problem &problem, const SolveOptions &options) {
    GroverPlan plan;
    if (options.iterations) {
        plan = grover_plan(problem, IterationMode::kFixed, *options.iterations);
    } else if (options.mode == IterationMode::kUnknownCount) {
        UnknownCountSchedule schedule(problem.restricted_space_size(), options.seed);
        plan = grover_plan(problem, IterationMode::kFixed, schedule.next());
    } else {
        plan = grover_plan(problem, IterationMode::kExactCount, 0, options.enumeration_cap);
    }
    if (plan.unsatisfiable) {
        throw UnsatisfiableError("exact count found no proper coloring");
    }
    Simulated sim = simulate(plan, options);
    return {std::move(plan), std::move(sim.circuit), std::move(sim.distribution)};
}

std::string histogram_csv(const std::map<std::string, double> &rows) {
    std::string csv = "State;Probability\n";
    char buf[64];
    for (const auto &[label, p] : rows) {
        std::snprintf(buf, sizeof(buf), "%.12g", p);
        csv += label + ";" + buf + "\n";
    }
    return csv;
}

int cmd_solve(const std::filesystem::path &problem_file, const SolveOptions &options, std::ostream &out,
              std::ostream &err) {
    return guarded(err, [&] {
        RunReport report = solve(load_problem(problem_file), options);
        out << report_to_json(report) << '\n';
        return report.verdict == Verdict::kSolved ? kSuccess : kUnsatisfied;
    });
}

int cmd_oracle_reduce(const std::string &list_u, const std::string &list_v, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        ColorList lu = parse_color_list(list_u);
        ColorList lv = parse_color_list(list_v);
        TermSet terms = oracle_reduction(lu, lv);
        out << "widths " << terms.width_u << ' ' << terms.width_v << '\n';
        out << "system " << terms.equation_count << " equations, " << terms.variable_count << " variables\n";
        out << "feasible k " << terms.k << '\n';
        for (const Term &t : terms.terms) {
            out << "term " << format_term(t) << '\n';
        }
        out << "cost " << terms.cost << '\n';
        out << "certified " << (terms.certified ? "yes" : "no") << " (" << gf2::search_method_name(terms.method)
            << ")\n";
        return kSuccess;
    });
}

int cmd_synth(const std::filesystem::path &problem_file, SynthPart part, Lowering lowering, CircuitFormat format,
              const SolveOptions &options, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        Problem p = load_problem(problem_file);
        Circuit c;
        switch (part) {
            case SynthPart::kInit:
                c = build_full_initialization(p);
                break;
            case SynthPart::kOracle:
                c = build_full_oracle(p);
                break;
            case SynthPart::kDiffusion:
                c = build_diffusion(p);
                break;
            case SynthPart::kFull: {
                GroverPlan plan =
                    grover_plan(p, options.iterations ? IterationMode::kFixed : IterationMode::kExactCount,
                                options.iterations.value_or(0), options.enumeration_cap);
                if (plan.unsatisfiable) {
                    throw UnsatisfiableError("exact count found no proper coloring");
                }
                c = build_grover_circuit(plan);
                break;
            }
        }
        c = lower(c, lowering);
        out << (format == CircuitFormat::kQasm ? to_qasm(c) : to_netlist(c));
        return kSuccess;
    });
}

int cmd_histogram(const std::filesystem::path &problem_file, const SolveOptions &options, bool exact,
                  const std::filesystem::path &out_file, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        Problem p = load_problem(problem_file);
        if (options.reduce) {
            p = remap_colors(reduce_singletons(p).residual).problem;
            if (p.vertex_count() == 0) {
                throw InputError("every vertex was forced by propagation; nothing to simulate");
            }
        }
        SimulatedPlan sim = simulate_plan(p, options);
        std::map<std::string, double> rows;
        if (exact) {
            for (const auto &[label, prob] : sim.distribution.probabilities) {
                if (prob > 1e-12) {
                    rows[label] = prob;
                }
            }
        } else {
            for (const auto &[label, n] : sample(sim.distribution, options.shots, options.seed)) {
                rows[label] = static_cast<double>(n) / static_cast<double>(options.shots);
            }
        }
        std::ofstream file(out_file, std::ios::binary);
        if (!file) {
            throw InputError("cannot write '" + out_file.string() + "'");
        }
        file << histogram_csv(rows);
        file.close();
        if (!file) {
            throw InputError("failed writing '" + out_file.string() + "'");
        }
        out << "wrote " << rows.size() << " rows to " << out_file.string() << " (iterations "
            << sim.plan.iterations << ")\n";
        return kSuccess;
    });
}

int cmd_verify(const std::filesystem::path &problem_file, const std::filesystem::path &coloring_file,
               std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        Problem p = load_problem(problem_file);
        Coloring c = read_coloring_file(coloring_file);
        for (const auto &[name, color] : c) {
            if (!p.index_of(name)) {
                throw InputError("coloring names unknown vertex '" + name + "'");
            }
        }
        if (auto violation = first_violation(p, c)) {
            out << "invalid: " << *violation << '\n';
            return kUnsatisfied;
        }
        out << "valid\n";
        return kSuccess;
    });
}

}  // namespace listgrover::cli
