// Command-line front end: instance generation, full-front solves,
// representation runs, metric evaluation and benchmark batteries.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "epsfront/engine.hpp"
#include "epsfront/errors.hpp"
#include "epsfront/instance.hpp"
#include "epsfront/metrics.hpp"

using nlohmann::json;
using namespace epsfront;

namespace {

StrategyKind parse_strategy(const std::string& name) {
    if (name == "gpba-a") return StrategyKind::GpbaA;
    if (name == "gpba-b") return StrategyKind::GpbaB;
    if (name == "gpba-c") return StrategyKind::GpbaC;
    if (name == "naive") return StrategyKind::Naive;
    throw CLI::ValidationError("strategy", "unknown strategy '" + name + "'");
}

const char* strategy_name(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::GpbaA: return "gpba-a";
        case StrategyKind::GpbaB: return "gpba-b";
        case StrategyKind::GpbaC: return "gpba-c";
        case StrategyKind::Naive: return "naive";
    }
    return "?";
}

DistanceSpec parse_norm(const std::string& name) {
    if (name == "chebyshev" || name == "inf") return DistanceSpec::chebyshev();
    if (name == "manhattan") return DistanceSpec::manhattan();
    if (name == "euclidean") return DistanceSpec::euclidean();
    try {
        return DistanceSpec::minkowski(static_cast<unsigned>(std::stoul(name)));
    } catch (const std::exception&) {
        throw CLI::ValidationError("norm", "unknown norm '" + name + "'");
    }
}

json outcome_json(const OutcomeVector& z) { return json(z); }

json report_json(const QualityReport& report) {
    json j;
    j["cardinality"] = report.cardinality;
    if (report.coverage) j["coverage_error"] = *report.coverage;
    if (report.uniformity) j["uniformity_level"] = *report.uniformity;
    j["coordinate_gaps"] = report.coordinate_gaps;
    return j;
}

json stats_json(const RunStats& stats) {
    json j;
    j["iterations"] = stats.iterations;
    j["subproblems_solved"] = stats.subproblems_solved;
    j["cache_hits"] = stats.cache_hits;
    j["early_exits"] = stats.early_exits;
    j["bb_nodes"] = stats.bb_nodes;
    j["wall_seconds"] = stats.wall_seconds;
    j["rho_used"] = stats.rho_used;
    j["rho_retries"] = stats.rho_retries;
    return j;
}

const char* trace_kind_name(TraceEvent::Kind kind) {
    switch (kind) {
        case TraceEvent::Kind::Solve: return "solve";
        case TraceEvent::Kind::SolveInfeasible: return "solve_infeasible";
        case TraceEvent::Kind::CacheReuse: return "cache_reuse";
        case TraceEvent::Kind::CacheInfeasible: return "cache_infeasible";
        case TraceEvent::Kind::Advance: return "advance";
        case TraceEvent::Kind::LoopExit: return "loop_exit";
    }
    return "?";
}

void write_trace(const std::vector<TraceEvent>& trace, std::ostream& out) {
    for (const auto& ev : trace) {
        json j;
        j["event"] = trace_kind_name(ev.kind);
        j["level"] = ev.level;
        j["epsilon"] = ev.epsilon;
        if (!ev.outcome.empty()) j["outcome"] = outcome_json(ev.outcome);
        if (ev.kind == TraceEvent::Kind::Advance ||
            ev.kind == TraceEvent::Kind::LoopExit) {
            j["next_epsilon"] = ev.next_epsilon;
            if (ev.step != 0.0) j["step"] = ev.step;
            if (ev.max_discard_gap != 0) j["max_discard_gap"] = ev.max_discard_gap;
            if (ev.coverage_gap != 0) j["coverage_gap"] = ev.coverage_gap;
        }
        out << j.dump() << "\n";
    }
}

void write_front_json(const std::vector<OutcomeVector>& points,
                      const std::string& path, const std::string& label,
                      const json& extra) {
    json j;
    j["strategy"] = label;
    j["points"] = json::array();
    for (const auto& z : points) j["points"].push_back(outcome_json(z));
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << j.dump(2) << "\n";
}

struct GenFlags {
    GeneratorSpec spec;
    std::string kind = "binary";
    int count = 1;

    void attach(CLI::App* cmd) {
        cmd->add_option("-p,--objectives", spec.num_objectives, "Objective count")
            ->capture_default_str();
        cmd->add_option("-n,--vars", spec.num_vars, "Variable count")
            ->capture_default_str();
        cmd->add_option("-m,--constraints", spec.num_constraints, "Constraint count")
            ->capture_default_str();
        cmd->add_option("--kind", kind, "Variable kind: binary or integer")
            ->capture_default_str();
        cmd->add_option("--coeff-lo", spec.coeff_lo, "Coefficient range low end")
            ->capture_default_str();
        cmd->add_option("--coeff-hi", spec.coeff_hi, "Coefficient range high end")
            ->capture_default_str();
        cmd->add_option("--objective-seeds", spec.objective_seeds,
                        "One seed per objective (default 128, 888, 6, ...)");
        cmd->add_option("--constraint-seeds", spec.constraint_seeds,
                        "One seed per constraint (default 40, 45, ...)");
        cmd->add_option("--seed-increment", spec.seed_increment,
                        "Seed offset between consecutive instances")
            ->capture_default_str();
        cmd->add_option("--index", spec.instance_index, "First instance index")
            ->capture_default_str();
    }

    GeneratorSpec resolved(std::int64_t index) const {
        GeneratorSpec s = spec;
        s.var_kind = kind == "integer" ? VarKind::Integer : VarKind::Binary;
        if (kind != "binary" && kind != "integer")
            throw CLI::ValidationError("kind", "expected 'binary' or 'integer'");
        if (s.objective_seeds.empty()) {
            const std::vector<std::int64_t> defaults = {128, 888, 6};
            for (int k = 0; k < s.num_objectives; ++k)
                s.objective_seeds.push_back(
                    k < 3 ? defaults[k] : 1000 + 17 * (k - 2));
        }
        if (s.constraint_seeds.empty())
            for (int i = 0; i < s.num_constraints; ++i)
                s.constraint_seeds.push_back(40 + 5 * i);
        s.instance_index += index;
        return s;
    }
};

struct EngineFlags {
    std::string instance_path;
    bool fixture = false;
    std::string strategy = "gpba-b";
    int q = 0;
    double rho = 1e-3;
    double min_rho = 1e-6;
    std::int64_t eta = 1;
    bool no_cache = false;
    bool no_early_exit = false;
    std::string nadir = "individual";
    std::string trace_path;

    void attach(CLI::App* cmd, bool need_strategy) {
        auto* inst = cmd->add_option("-i,--instance", instance_path,
                                     "Instance file to load");
        cmd->add_flag("--fixture", fixture, "Use the bundled illustrative problem")
            ->excludes(inst);
        if (need_strategy)
            cmd->add_option("-s,--strategy", strategy,
                            "gpba-a | gpba-b | gpba-c | naive")
                ->capture_default_str();
        cmd->add_option("-q,--kept-objective", q,
                        "Objective kept in the subproblem objective (0-based)")
            ->capture_default_str();
        cmd->add_option("--rho", rho, "Slack reward weight")->capture_default_str();
        cmd->add_option("--min-rho", min_rho, "Floor of the rho halving retry")
            ->capture_default_str();
        cmd->add_option("--eta", eta, "Naive sweep step")->capture_default_str();
        cmd->add_flag("--no-cache", no_cache, "Disable the redundancy cache");
        cmd->add_flag("--no-early-exit", no_early_exit,
                      "Disable the accelerated loop exit");
        cmd->add_option("--nadir", nadir, "Nadir estimate: individual or lex")
            ->capture_default_str();
        cmd->add_option("--trace", trace_path,
                        "Write a JSON-lines run log ('-' for stderr)");
    }

    MoilpProblem load() const {
        if (fixture) return illustrative_fixture();
        if (instance_path.empty())
            throw CLI::ValidationError("instance",
                                       "need --instance or --fixture");
        return load_instance(instance_path);
    }

    RunParams params() const {
        RunParams p;
        p.strategy = parse_strategy(strategy);
        p.q = q;
        p.rho = rho;
        p.min_rho = min_rho;
        p.eta = eta;
        p.use_cache = !no_cache;
        p.use_early_exit = !no_early_exit;
        if (nadir == "lex") p.nadir_method = NadirMethod::LexPayoff;
        else if (nadir != "individual")
            throw CLI::ValidationError("nadir", "expected 'individual' or 'lex'");
        p.collect_trace = !trace_path.empty();
        return p;
    }

    void emit_trace(const RunResult& result) const {
        if (trace_path.empty()) return;
        if (trace_path == "-") {
            write_trace(result.trace, std::cerr);
            return;
        }
        std::ofstream out(trace_path);
        if (!out) throw std::runtime_error("cannot open for writing: " + trace_path);
        write_trace(result.trace, out);
    }
};

int cmd_gen(const GenFlags& flags, const std::string& output) {
    for (int i = 0; i < flags.count; ++i) {
        const MoilpProblem problem = generate(flags.resolved(i));
        std::string path = output;
        if (flags.count > 1) {
            const auto dot = path.rfind('.');
            const std::string stem = dot == std::string::npos ? path : path.substr(0, dot);
            const std::string ext = dot == std::string::npos ? "" : path.substr(dot);
            path = stem + "-" + std::to_string(i) + ext;
        }
        save_instance(problem, path);
        std::cout << "wrote " << path << " (" << problem.name << ")\n";
    }
    return 0;
}

int run_and_emit(const EngineFlags& flags, RunParams params,
                 const QualityTargets* targets, const std::string& csv_out,
                 const std::string& json_out, bool oracle) {
    const MoilpProblem problem = flags.load();
    SimplexBackend backend;
    if (targets) {
        params.targets = *targets;
    } else {
        const FrontBounds bounds = compute_bounds(problem, backend, params.nadir_method);
        if (!bounds.feasible) {
            std::cout << "infeasible problem, empty front\n";
            return 0;
        }
        params.targets = full_front_params(params.strategy, bounds, params.q);
    }
    const RunResult result = run(problem, params, backend);
    flags.emit_trace(result);

    const std::string label = strategy_name(params.strategy);
    if (!csv_out.empty()) write_front_csv(result.representation, csv_out, label);

    QualityReport report;
    json extra;
    extra["stats"] = stats_json(result.stats);
    if (oracle) {
        BruteForceOptions opts;
        opts.max_box_volume = 1e9;
        const auto front = brute_force_front(problem, opts);
        const bool equal = front == result.representation;
        extra["oracle_match"] = equal;
        report = quality_report(result.representation, &front);
        std::cout << "oracle match: " << (equal ? "yes" : "NO") << "\n";
    } else {
        report = quality_report(result.representation);
    }
    extra["quality"] = report_json(report);
    if (!json_out.empty())
        write_front_json(result.representation, json_out, label, extra);

    std::cout << label << ": " << result.representation.size() << " points, "
              << result.stats.subproblems_solved << " solves, "
              << result.stats.iterations << " iterations, "
              << result.stats.cache_hits << " cache hits, "
              << result.stats.early_exits << " early exits, "
              << result.stats.wall_seconds << " s\n";
    return 0;
}

int cmd_metrics(const std::string& rep_path, const std::string& front_path,
                const std::string& norm, const std::string& json_out) {
    const auto representation = read_front_csv(rep_path);
    const DistanceSpec spec = parse_norm(norm);
    std::vector<OutcomeVector> front;
    const std::vector<OutcomeVector>* ref = nullptr;
    if (!front_path.empty()) {
        front = read_front_csv(front_path);
        ref = &front;
    }
    const QualityReport report = quality_report(representation, ref, spec);
    const json j = report_json(report);
    if (!json_out.empty()) {
        std::ofstream out(json_out);
        if (!out) throw std::runtime_error("cannot open for writing: " + json_out);
        out << j.dump(2) << "\n";
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

struct BenchRow {
    int instance = 0;
    std::string strategy;
    bool failed = false;
    std::string error;
    std::int64_t points = 0;
    double coverage = 0.0;
    double uniformity = 0.0;
    std::int64_t solves = 0;
    double iter_per_point = 0.0;
    double wall_seconds = 0.0;
    bool oracle_checked = false;
    bool oracle_match = false;
};

int cmd_bench(const GenFlags& gen, const std::vector<std::string>& strategies,
              bool full_front, const std::vector<std::int64_t>& cardinality,
              bool oracle, double timeout, int jobs, const std::string& csv_out,
              const std::string& json_out) {
    std::vector<StrategyKind> kinds;
    for (const auto& name : strategies) kinds.push_back(parse_strategy(name));
    if (kinds.empty()) kinds = {StrategyKind::GpbaB};

    const int total = gen.count;
    std::vector<std::vector<BenchRow>> rows(total);
    std::atomic<int> next{0};

    auto worker = [&]() {
        SimplexBackend backend;
        for (int i = next.fetch_add(1); i < total; i = next.fetch_add(1)) {
            const MoilpProblem problem = generate(gen.resolved(i));
            std::vector<OutcomeVector> front;
            bool have_front = false;
            if (oracle) {
                BruteForceOptions opts;
                opts.max_box_volume = 1e9;
                front = brute_force_front(problem, opts);
                have_front = true;
            }
            for (StrategyKind kind : kinds) {
                BenchRow row;
                row.instance = i;
                row.strategy = strategy_name(kind);
                try {
                    RunParams params;
                    params.strategy = kind;
                    const FrontBounds bounds = compute_bounds(problem, backend);
                    if (full_front || cardinality.empty())
                        params.targets = full_front_params(kind, bounds, params.q);
                    else
                        params.targets =
                            targets_from_cardinality(bounds, params.q, cardinality);
                    const RunResult result = run(problem, params, backend);
                    row.points = static_cast<std::int64_t>(result.representation.size());
                    row.solves = result.stats.subproblems_solved;
                    row.wall_seconds = result.stats.wall_seconds;
                    if (row.points > 0)
                        row.iter_per_point =
                            static_cast<double>(row.solves) /
                            static_cast<double>(row.points);
                    const QualityReport report = quality_report(
                        result.representation, have_front ? &front : nullptr);
                    if (report.coverage) row.coverage = *report.coverage;
                    if (report.uniformity) row.uniformity = *report.uniformity;
                    if (have_front) {
                        // set equality is only expected for full-front runs;
                        // representations must still be subsets of the front
                        row.oracle_checked = true;
                        if (full_front || cardinality.empty()) {
                            row.oracle_match = front == result.representation;
                        } else {
                            row.oracle_match = std::all_of(
                                result.representation.begin(),
                                result.representation.end(), [&](const auto& z) {
                                    return std::find(front.begin(), front.end(), z) !=
                                           front.end();
                                });
                        }
                    }
                    if (timeout > 0.0 && row.wall_seconds > timeout) {
                        row.failed = true;
                        row.error = "timeout";
                    }
                } catch (const std::exception& e) {
                    row.failed = true;
                    row.error = e.what();
                }
                rows[i].push_back(std::move(row));
            }
        }
    };

    std::vector<std::thread> pool;
    const int workers = std::max(1, jobs);
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::ostringstream csv;
    csv << "instance,strategy,status,points,coverage_error,uniformity_level,"
           "subproblems_solved,iter_per_point,wall_seconds,oracle_match\n";
    struct Agg {
        std::vector<double> points, solves, ipp, wall;
    };
    std::map<std::string, Agg> agg;
    bool all_match = true;
    for (const auto& per_instance : rows)
        for (const auto& row : per_instance) {
            csv << row.instance << "," << row.strategy << ","
                << (row.failed ? "failed" : "ok") << "," << row.points << ","
                << row.coverage << "," << row.uniformity << "," << row.solves << ","
                << row.iter_per_point << "," << row.wall_seconds << ","
                << (row.oracle_checked ? (row.oracle_match ? "true" : "false") : "")
                << "\n";
            if (row.failed) {
                std::cerr << "instance " << row.instance << " " << row.strategy
                          << " failed: " << row.error << "\n";
                all_match = false;
                continue;
            }
            if (row.oracle_checked && !row.oracle_match) all_match = false;
            Agg& a = agg[row.strategy];
            a.points.push_back(static_cast<double>(row.points));
            a.solves.push_back(static_cast<double>(row.solves));
            a.ipp.push_back(row.iter_per_point);
            a.wall.push_back(row.wall_seconds);
        }

    auto mean = [](const std::vector<double>& v) {
        return v.empty() ? 0.0
                         : std::accumulate(v.begin(), v.end(), 0.0) /
                               static_cast<double>(v.size());
    };
    auto stddev = [&](const std::vector<double>& v) {
        if (v.size() < 2) return 0.0;
        const double m = mean(v);
        double acc = 0.0;
        for (double x : v) acc += (x - m) * (x - m);
        return std::sqrt(acc / static_cast<double>(v.size() - 1));
    };

    json summary = json::array();
    for (const auto& [name, a] : agg) {
        json j;
        j["strategy"] = name;
        j["instances"] = a.points.size();
        j["points_mean"] = mean(a.points);
        j["points_stddev"] = stddev(a.points);
        j["solves_mean"] = mean(a.solves);
        j["solves_stddev"] = stddev(a.solves);
        j["iter_per_point_mean"] = mean(a.ipp);
        j["wall_seconds_mean"] = mean(a.wall);
        summary.push_back(j);
        std::cout << name << ": points " << mean(a.points) << " +- "
                  << stddev(a.points) << ", iter/point " << mean(a.ipp)
                  << ", wall " << mean(a.wall) << " s\n";
    }
    if (oracle)
        std::cout << "oracle equivalence: " << (all_match ? "all true" : "MISMATCH")
                  << "\n";

    if (!csv_out.empty()) {
        std::ofstream out(csv_out);
        if (!out) throw std::runtime_error("cannot open for writing: " + csv_out);
        out << csv.str();
    }
    if (!json_out.empty()) {
        std::ofstream out(json_out);
        if (!out) throw std::runtime_error("cannot open for writing: " + json_out);
        json j;
        j["summary"] = summary;
        j["all_oracle_match"] = all_match;
        out << j.dump(2) << "\n";
    }
    return (oracle && !all_match) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pareto front representation toolkit for multi-objective "
                 "integer linear programs"};
    app.require_subcommand(1);

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "Generate seeded random instances");
    GenFlags gen_flags;
    gen_flags.attach(gen_cmd);
    gen_cmd->add_option("--count", gen_flags.count, "Number of instances")
        ->capture_default_str();
    std::string gen_out = "instance.txt";
    gen_cmd->add_option("-o,--output", gen_out, "Output path (suffix -<i> when count > 1)")
        ->capture_default_str();

    // solve (full front)
    auto* solve_cmd = app.add_subcommand("solve", "Compute the complete Pareto front");
    EngineFlags solve_flags;
    solve_flags.attach(solve_cmd, true);
    std::string solve_csv, solve_json;
    bool solve_oracle = false;
    solve_cmd->add_option("-o,--output", solve_csv, "Front CSV path");
    solve_cmd->add_option("--json", solve_json, "Front JSON path");
    solve_cmd->add_flag("--oracle", solve_oracle,
                        "Cross-check against exhaustive enumeration");

    // represent
    auto* rep_cmd = app.add_subcommand("represent",
                                       "Compute a quality-controlled representation");
    EngineFlags rep_flags;
    rep_flags.attach(rep_cmd, true);
    std::vector<double> gamma, delta;
    std::vector<std::int64_t> cardinality;
    std::string rep_csv, rep_json;
    bool rep_oracle = false;
    rep_cmd->add_option("--gamma", gamma, "Coverage error targets (gpba-a)");
    rep_cmd->add_option("--delta", delta, "Uniformity level targets (gpba-b)");
    rep_cmd->add_option("--cardinality", cardinality,
                        "Per-objective grid cardinality (gpba-c), or a shared "
                        "target turned into gamma/delta");
    rep_cmd->add_option("-o,--output", rep_csv, "Representation CSV path");
    rep_cmd->add_option("--json", rep_json, "Representation JSON path");
    rep_cmd->add_flag("--oracle", rep_oracle, "Compute quality against the exact front");

    // metrics
    auto* met_cmd = app.add_subcommand("metrics", "Quality report for a CSV front");
    std::string met_rep, met_front, met_norm = "chebyshev", met_json;
    met_cmd->add_option("-r,--representation", met_rep, "Representation CSV")
        ->required();
    met_cmd->add_option("-f,--front", met_front, "Reference front CSV");
    met_cmd->add_option("--norm", met_norm, "chebyshev | manhattan | euclidean | <t>")
        ->capture_default_str();
    met_cmd->add_option("--json", met_json, "Report JSON path");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark battery");
    GenFlags bench_gen;
    bench_gen.attach(bench_cmd);
    bench_gen.count = 30;
    bench_cmd->add_option("--count", bench_gen.count, "Instances in the battery")
        ->capture_default_str();
    std::vector<std::string> bench_strategies;
    std::vector<std::int64_t> bench_cardinality;
    bool bench_full = false, bench_oracle = false;
    double bench_timeout = 0.0;
    int bench_jobs = 1;
    std::string bench_csv, bench_json;
    bench_cmd->add_option("-s,--strategies", bench_strategies,
                          "Strategies to run (default gpba-b)");
    bench_cmd->add_flag("--full-front", bench_full, "Use full-front presets");
    bench_cmd->add_option("--cardinality", bench_cardinality,
                          "Target cardinality per constrained objective");
    bench_cmd->add_flag("--oracle", bench_oracle,
                        "Compare each front with exhaustive enumeration");
    bench_cmd->add_option("--timeout", bench_timeout,
                          "Per-instance wall-time limit in seconds (0 = none)");
    bench_cmd->add_option("-j,--jobs", bench_jobs, "Parallel workers")
        ->capture_default_str();
    bench_cmd->add_option("-o,--output", bench_csv, "Report CSV path");
    bench_cmd->add_option("--json", bench_json, "Summary JSON path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen_cmd) return cmd_gen(gen_flags, gen_out);
        if (*solve_cmd)
            return run_and_emit(solve_flags, solve_flags.params(), nullptr,
                                solve_csv, solve_json, solve_oracle);
        if (*rep_cmd) {
            RunParams params = rep_flags.params();
            const MoilpProblem problem = rep_flags.load();
            SimplexBackend backend;
            const FrontBounds bounds =
                compute_bounds(problem, backend, params.nadir_method);
            if (!bounds.feasible) {
                std::cout << "infeasible problem, empty representation\n";
                return 0;
            }
            QualityTargets targets;
            if (!cardinality.empty() && params.strategy != StrategyKind::GpbaC) {
                targets = targets_from_cardinality(bounds, params.q, cardinality);
            } else {
                targets.gamma = gamma;
                targets.delta = delta;
                targets.cardinality = cardinality;
            }
            return run_and_emit(rep_flags, params, &targets, rep_csv, rep_json,
                                rep_oracle);
        }
        if (*met_cmd) return cmd_metrics(met_rep, met_front, met_norm, met_json);
        if (*bench_cmd)
            return cmd_bench(bench_gen, bench_strategies, bench_full,
                             bench_cardinality, bench_oracle, bench_timeout,
                             bench_jobs, bench_csv, bench_json);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
