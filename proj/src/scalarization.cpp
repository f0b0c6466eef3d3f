#include "epsfront/scalarization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "epsfront/errors.hpp"

namespace epsfront {

namespace {

/// LP/IP skeleton over the decision variables only.
LinearSubproblem base_linear(const MoilpProblem& problem) {
    const auto ub = derive_upper_bounds(problem);
    LinearSubproblem sub;
    sub.num_vars = problem.num_vars;
    sub.objective.assign(problem.num_vars, 0.0);
    sub.lower.resize(problem.num_vars);
    sub.upper.resize(problem.num_vars);
    sub.is_integer.assign(problem.num_vars, true);
    for (int j = 0; j < problem.num_vars; ++j) {
        sub.lower[j] = static_cast<double>(problem.var_lower[j]);
        sub.upper[j] = static_cast<double>(ub[j]);
    }
    sub.rows.reserve(problem.num_constraints);
    for (int i = 0; i < problem.num_constraints; ++i) {
        LinearSubproblem::Row row;
        row.coeffs.assign(problem.constraint_coeffs[i].begin(),
                          problem.constraint_coeffs[i].end());
        row.sense = RowSense::LessEqual;
        row.rhs = static_cast<double>(problem.rhs[i]);
        sub.rows.push_back(std::move(row));
    }
    return sub;
}

void set_objective(LinearSubproblem& sub, const MoilpProblem& problem, int k,
                   double sign) {
    for (int j = 0; j < problem.num_vars; ++j)
        sub.objective[j] = sign * static_cast<double>(problem.objective_coeffs[k][j]);
}

std::vector<std::int64_t> rounded_x(const MoilpProblem& problem,
                                    const SolveOutcome& result) {
    std::vector<std::int64_t> x(problem.num_vars);
    for (int j = 0; j < problem.num_vars; ++j)
        x[j] = static_cast<std::int64_t>(std::llround(result.x[j]));
    return x;
}

}  // namespace

OutcomeVector ideal_point(const MoilpProblem& problem, SolverBackend& backend) {
    problem.validate();
    LinearSubproblem sub = base_linear(problem);
    OutcomeVector ideal(problem.num_objectives);
    for (int k = 0; k < problem.num_objectives; ++k) {
        set_objective(sub, problem, k, 1.0);
        const SolveOutcome res = backend.solve_ip(sub);
        if (res.status != SolveStatus::Optimal)
            throw std::runtime_error("ideal_point: objective " + std::to_string(k + 1) +
                                     " has no optimum (infeasible problem?)");
        ideal[k] = evaluate(problem, rounded_x(problem, res))[k];
    }
    return ideal;
}

OutcomeVector nadir_approx(const MoilpProblem& problem, SolverBackend& backend,
                           NadirMethod method) {
    problem.validate();
    const int p = problem.num_objectives;
    if (method == NadirMethod::IndividualMin) {
        LinearSubproblem sub = base_linear(problem);
        OutcomeVector nadir(p);
        for (int k = 0; k < p; ++k) {
            set_objective(sub, problem, k, -1.0);
            const SolveOutcome res = backend.solve_ip(sub);
            if (res.status != SolveStatus::Optimal)
                throw std::runtime_error("nadir_approx: minimization of objective " +
                                         std::to_string(k + 1) + " failed");
            nadir[k] = evaluate(problem, rounded_x(problem, res))[k];
        }
        return nadir;
    }

    // Lexicographic payoff table: one row per objective placed last in the
    // permutation, remaining objectives optimized first in index order.
    std::vector<OutcomeVector> table;
    for (int last = 0; last < p; ++last) {
        LinearSubproblem sub = base_linear(problem);
        std::vector<int> order;
        for (int k = 0; k < p; ++k)
            if (k != last) order.push_back(k);
        order.push_back(last);
        SolveOutcome res;
        for (int k : order) {
            set_objective(sub, problem, k, 1.0);
            res = backend.solve_ip(sub);
            if (res.status != SolveStatus::Optimal)
                throw std::runtime_error("nadir_approx: lexicographic stage failed");
            const std::int64_t opt = evaluate(problem, rounded_x(problem, res))[k];
            LinearSubproblem::Row fix;
            fix.coeffs.assign(problem.objective_coeffs[k].begin(),
                              problem.objective_coeffs[k].end());
            fix.sense = RowSense::GreaterEqual;
            fix.rhs = static_cast<double>(opt);
            sub.rows.push_back(std::move(fix));
        }
        table.push_back(evaluate(problem, rounded_x(problem, res)));
    }
    OutcomeVector nadir(p, std::numeric_limits<std::int64_t>::max());
    for (const auto& row : table)
        for (int k = 0; k < p; ++k) nadir[k] = std::min(nadir[k], row[k]);
    return nadir;
}

FrontBounds compute_bounds(const MoilpProblem& problem, SolverBackend& backend,
                           NadirMethod method) {
    problem.validate();
    FrontBounds bounds;
    // single feasibility probe before the 2p bound solves
    LinearSubproblem probe = base_linear(problem);
    if (backend.solve_ip(probe).status != SolveStatus::Optimal) {
        bounds.feasible = false;
        return bounds;
    }
    bounds.ideal = ideal_point(problem, backend);
    bounds.nadir = nadir_approx(problem, backend, method);
    bounds.range.resize(problem.num_objectives);
    for (int k = 0; k < problem.num_objectives; ++k)
        bounds.range[k] = bounds.ideal[k] - bounds.nadir[k];
    return bounds;
}

AugmentedSubproblem build_subproblem(const MoilpProblem& problem, int q,
                                     const std::vector<double>& epsilon,
                                     double rho, const FrontBounds& bounds) {
    problem.validate();
    if (q < 0 || q >= problem.num_objectives)
        throw std::invalid_argument("build_subproblem: q out of range");
    if (rho <= 0.0) throw std::invalid_argument("build_subproblem: rho must be positive");

    AugmentedSubproblem sub;
    sub.problem = &problem;
    sub.q = q;
    sub.rho = rho;
    sub.bounds = bounds;
    for (int k = 0; k < problem.num_objectives; ++k)
        if (k != q) sub.constrained.push_back(k);
    if (epsilon.size() != sub.constrained.size())
        throw std::invalid_argument("build_subproblem: epsilon size mismatch");
    sub.epsilon = epsilon;

    const int n = problem.num_vars;
    const int kcount = static_cast<int>(sub.constrained.size());

    LinearSubproblem lin = base_linear(problem);
    lin.num_vars = n + kcount;
    lin.objective.resize(n + kcount);
    lin.lower.resize(n + kcount, 0.0);
    lin.upper.resize(n + kcount, LinearSubproblem::kInfinity);
    lin.is_integer.resize(n + kcount, false);
    for (auto& row : lin.rows) row.coeffs.resize(n + kcount, 0.0);

    set_objective(lin, problem, q, 1.0);
    for (int ord = 0; ord < kcount; ++ord) {
        const int k = sub.constrained[ord];
        const std::int64_t r = bounds.range[k];
        if (r == 0)
            throw ZeroRangeError("build_subproblem: objective " + std::to_string(k + 1) +
                                 " has zero range; drop or perturb it");
        // outer loops carry the larger slack reward: weight 10^(p-2) for the
        // outermost constrained objective down to 10^0 for the innermost
        lin.objective[n + ord] =
            rho * std::pow(10.0, kcount - 1 - ord) / static_cast<double>(r);

        LinearSubproblem::Row row;
        row.coeffs.assign(n + kcount, 0.0);
        for (int j = 0; j < n; ++j)
            row.coeffs[j] = static_cast<double>(problem.objective_coeffs[k][j]);
        row.coeffs[n + ord] = -1.0;
        row.sense = RowSense::Equal;
        row.rhs = epsilon[ord];
        lin.rows.push_back(std::move(row));
    }
    sub.linear = std::move(lin);
    return sub;
}

ExtractedOutcome extract_outcome(const AugmentedSubproblem& sub,
                                 const SolveOutcome& result) {
    if (result.status != SolveStatus::Optimal)
        throw std::invalid_argument("extract_outcome: result is not optimal");
    ExtractedOutcome out;
    out.x.resize(sub.problem->num_vars);
    for (int j = 0; j < sub.problem->num_vars; ++j)
        out.x[j] = static_cast<std::int64_t>(std::llround(result.x[j]));
    out.outcome = evaluate(*sub.problem, out.x);
    out.slacks.resize(sub.constrained.size());
    for (std::size_t i = 0; i < sub.constrained.size(); ++i) {
        out.slacks[i] =
            static_cast<double>(out.outcome[sub.constrained[i]]) - sub.epsilon[i];
        if (out.slacks[i] < -1e-6)
            throw std::runtime_error("extract_outcome: negative slack, solver "
                                     "returned an epsilon-infeasible point");
    }
    return out;
}

double augmented_value(const AugmentedSubproblem& sub, const OutcomeVector& z) {
    double value = static_cast<double>(z[sub.q]);
    for (std::size_t i = 0; i < sub.constrained.size(); ++i) {
        const int k = sub.constrained[i];
        value += sub.rho *
                 std::pow(10.0, static_cast<double>(sub.constrained.size() - 1 - i)) *
                 (static_cast<double>(z[k]) - sub.epsilon[i]) /
                 static_cast<double>(sub.bounds.range[k]);
    }
    return value;
}

std::vector<OutcomeVector> naive_sweep(const MoilpProblem& problem, int q,
                                       std::int64_t eta, SolverBackend& backend,
                                       double rho) {
    if (eta < 1) throw std::invalid_argument("naive_sweep: eta must be >= 1");
    const FrontBounds bounds = compute_bounds(problem, backend);
    if (!bounds.feasible) return {};

    std::vector<int> constrained;
    for (int k = 0; k < problem.num_objectives; ++k)
        if (k != q) constrained.push_back(k);
    const int levels = static_cast<int>(constrained.size());

    constexpr std::int64_t kNoSolution = std::numeric_limits<std::int64_t>::max();
    std::vector<double> eps(levels, 0.0);
    std::vector<std::int64_t> slice_min(levels, kNoSolution);
    std::vector<OutcomeVector> collected;

    auto solve_once = [&]() {
        const AugmentedSubproblem sub = build_subproblem(problem, q, eps, rho, bounds);
        const SolveOutcome res = backend.solve_ip(sub.linear);
        if (res.status != SolveStatus::Optimal) return false;
        const ExtractedOutcome ext = extract_outcome(sub, res);
        collected.push_back(ext.outcome);
        for (int l = 0; l < levels; ++l)
            slice_min[l] = std::min(slice_min[l], ext.outcome[constrained[l]]);
        return true;
    };

    auto loop = [&](auto&& self, int level) -> void {
        const int k = constrained[level];
        // start inclusive at the nadir so points attaining it are not skipped
        eps[level] = static_cast<double>(bounds.nadir[k]);
        while (eps[level] <= static_cast<double>(bounds.ideal[k])) {
            slice_min[level] = kNoSolution;
            if (level == levels - 1) {
                if (!solve_once()) break;
            } else {
                self(self, level + 1);
            }
            if (slice_min[level] == kNoSolution) break;
            eps[level] = static_cast<double>(slice_min[level] + eta);
        }
    };
    loop(loop, 0);
    return pareto_filter(std::move(collected));
}

}  // namespace epsfront
