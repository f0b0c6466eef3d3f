// Python bindings for the representation toolkit: model construction,
// instance generation, engine runs, oracles and quality metrics.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "epsfront/engine.hpp"
#include "epsfront/instance.hpp"
#include "epsfront/metrics.hpp"

namespace py = pybind11;
using namespace epsfront;

namespace {

StrategyKind strategy_from_name(const std::string& name) {
    if (name == "gpba-a") return StrategyKind::GpbaA;
    if (name == "gpba-b") return StrategyKind::GpbaB;
    if (name == "gpba-c") return StrategyKind::GpbaC;
    if (name == "naive") return StrategyKind::Naive;
    throw py::value_error("unknown strategy '" + name + "'");
}

py::dict stats_dict(const RunStats& stats) {
    py::dict d;
    d["iterations"] = stats.iterations;
    d["subproblems_solved"] = stats.subproblems_solved;
    d["cache_hits"] = stats.cache_hits;
    d["early_exits"] = stats.early_exits;
    d["bb_nodes"] = stats.bb_nodes;
    d["wall_seconds"] = stats.wall_seconds;
    d["rho_used"] = stats.rho_used;
    d["rho_retries"] = stats.rho_retries;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Pareto front representation toolkit for multi-objective "
              "integer linear programs";

    py::class_<MoilpProblem>(m, "Problem")
        .def(py::init<>())
        .def_readwrite("num_vars", &MoilpProblem::num_vars)
        .def_readwrite("num_objectives", &MoilpProblem::num_objectives)
        .def_readwrite("num_constraints", &MoilpProblem::num_constraints)
        .def_readwrite("objective_coeffs", &MoilpProblem::objective_coeffs)
        .def_readwrite("constraint_coeffs", &MoilpProblem::constraint_coeffs)
        .def_readwrite("rhs", &MoilpProblem::rhs)
        .def_readwrite("var_lower", &MoilpProblem::var_lower)
        .def_readwrite("var_upper", &MoilpProblem::var_upper)
        .def_readwrite("name", &MoilpProblem::name)
        .def("validate", &MoilpProblem::validate)
        .def("__repr__", [](const MoilpProblem& p) {
            return "<Problem '" + p.name + "' p=" + std::to_string(p.num_objectives) +
                   " n=" + std::to_string(p.num_vars) +
                   " m=" + std::to_string(p.num_constraints) + ">";
        });

    py::class_<FrontBounds>(m, "FrontBounds")
        .def_readonly("ideal", &FrontBounds::ideal)
        .def_readonly("nadir", &FrontBounds::nadir)
        .def_readonly("range", &FrontBounds::range)
        .def_readonly("feasible", &FrontBounds::feasible);

    m.def("illustrative_fixture", &illustrative_fixture,
          "The bundled 3-objective worked example");

    m.def(
        "generate",
        [](int num_objectives, int num_vars, int num_constraints,
           const std::string& kind, std::int64_t coeff_lo, std::int64_t coeff_hi,
           std::vector<std::int64_t> objective_seeds,
           std::vector<std::int64_t> constraint_seeds, std::int64_t seed_increment,
           std::int64_t instance_index) {
            GeneratorSpec spec;
            spec.num_objectives = num_objectives;
            spec.num_vars = num_vars;
            spec.num_constraints = num_constraints;
            spec.var_kind = kind == "integer" ? VarKind::Integer : VarKind::Binary;
            spec.coeff_lo = coeff_lo;
            spec.coeff_hi = coeff_hi;
            spec.objective_seeds = std::move(objective_seeds);
            spec.constraint_seeds = std::move(constraint_seeds);
            spec.seed_increment = seed_increment;
            spec.instance_index = instance_index;
            return generate(spec);
        },
        py::arg("num_objectives"), py::arg("num_vars"), py::arg("num_constraints"),
        py::arg("kind"), py::arg("coeff_lo"), py::arg("coeff_hi"),
        py::arg("objective_seeds"), py::arg("constraint_seeds"),
        py::arg("seed_increment") = 5, py::arg("instance_index") = 0,
        "Deterministic seeded random instance");

    m.def("load_instance", &load_instance, py::arg("path"));
    m.def("save_instance", &save_instance, py::arg("problem"), py::arg("path"));

    m.def(
        "compute_bounds",
        [](const MoilpProblem& problem, const std::string& nadir) {
            SimplexBackend backend;
            return compute_bounds(problem, backend,
                                  nadir == "lex" ? NadirMethod::LexPayoff
                                                 : NadirMethod::IndividualMin);
        },
        py::arg("problem"), py::arg("nadir") = "individual",
        "Ideal point, nadir approximation and ranges");

    m.def(
        "solve_front",
        [](const MoilpProblem& problem, const std::string& strategy, int q,
           double rho, bool use_cache, bool use_early_exit) {
            SimplexBackend backend;
            RunParams params;
            params.strategy = strategy_from_name(strategy);
            params.q = q;
            params.rho = rho;
            params.use_cache = use_cache;
            params.use_early_exit = use_early_exit;
            const FrontBounds bounds = compute_bounds(problem, backend);
            if (bounds.feasible)
                params.targets = full_front_params(params.strategy, bounds, q);
            const RunResult result = run(problem, params, backend);
            return py::make_tuple(result.representation, stats_dict(result.stats));
        },
        py::arg("problem"), py::arg("strategy") = "gpba-b", py::arg("q") = 0,
        py::arg("rho") = 1e-3, py::arg("use_cache") = true,
        py::arg("use_early_exit") = true,
        "Complete Pareto front via full-front presets; returns (points, stats)");

    m.def(
        "represent",
        [](const MoilpProblem& problem, const std::string& strategy, int q,
           std::vector<double> gamma, std::vector<double> delta,
           std::vector<std::int64_t> cardinality, double rho, bool use_cache,
           bool use_early_exit) {
            SimplexBackend backend;
            RunParams params;
            params.strategy = strategy_from_name(strategy);
            params.q = q;
            params.rho = rho;
            params.use_cache = use_cache;
            params.use_early_exit = use_early_exit;
            params.targets.gamma = std::move(gamma);
            params.targets.delta = std::move(delta);
            params.targets.cardinality = std::move(cardinality);
            const RunResult result = run(problem, params, backend);
            return py::make_tuple(result.representation, stats_dict(result.stats));
        },
        py::arg("problem"), py::arg("strategy"), py::arg("q") = 0,
        py::arg("gamma") = std::vector<double>{},
        py::arg("delta") = std::vector<double>{},
        py::arg("cardinality") = std::vector<std::int64_t>{},
        py::arg("rho") = 1e-3, py::arg("use_cache") = true,
        py::arg("use_early_exit") = true,
        "Quality-controlled representation; returns (points, stats)");

    m.def(
        "brute_force_front",
        [](const MoilpProblem& problem, double max_box_volume) {
            BruteForceOptions opts;
            opts.max_box_volume = max_box_volume;
            return brute_force_front(problem, opts);
        },
        py::arg("problem"), py::arg("max_box_volume") = 1e8,
        "Exact nondominated set by exhaustive enumeration (testing oracle)");

    m.def("pareto_filter", &pareto_filter, py::arg("points"),
          "Nondominated subset, sorted lexicographically descending");

    m.def(
        "quality_report",
        [](const std::vector<OutcomeVector>& representation,
           const std::optional<std::vector<OutcomeVector>>& reference,
           unsigned norm_order) {
            const DistanceSpec spec{norm_order};
            const QualityReport report = quality_report(
                representation, reference ? &*reference : nullptr, spec);
            py::dict d;
            d["cardinality"] = report.cardinality;
            d["coverage_error"] =
                report.coverage ? py::cast(*report.coverage) : py::none();
            d["uniformity_level"] =
                report.uniformity ? py::cast(*report.uniformity) : py::none();
            d["coordinate_gaps"] = report.coordinate_gaps;
            return d;
        },
        py::arg("representation"), py::arg("reference") = py::none(),
        py::arg("norm_order") = 0,
        "Cardinality, coverage error and uniformity level (norm 0 = Chebyshev)");
}
