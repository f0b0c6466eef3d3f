#include "epsfront/model.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "epsfront/errors.hpp"

namespace epsfront {

void MoilpProblem::validate() const {
    if (num_objectives < 2)
        throw std::invalid_argument("MoilpProblem: need at least 2 objectives");
    if (num_vars < 1) throw std::invalid_argument("MoilpProblem: need variables");
    auto check_matrix = [&](const std::vector<std::vector<std::int64_t>>& mat,
                            std::size_t rows, const char* what) {
        if (mat.size() != rows)
            throw std::invalid_argument(std::string("MoilpProblem: bad row count in ") + what);
        for (const auto& row : mat)
            if (row.size() != static_cast<std::size_t>(num_vars))
                throw std::invalid_argument(std::string("MoilpProblem: bad column count in ") + what);
    };
    check_matrix(objective_coeffs, static_cast<std::size_t>(num_objectives), "objective_coeffs");
    check_matrix(constraint_coeffs, static_cast<std::size_t>(num_constraints), "constraint_coeffs");
    if (rhs.size() != static_cast<std::size_t>(num_constraints))
        throw std::invalid_argument("MoilpProblem: rhs size mismatch");
    if (var_lower.size() != static_cast<std::size_t>(num_vars) ||
        var_upper.size() != static_cast<std::size_t>(num_vars))
        throw std::invalid_argument("MoilpProblem: bound vector size mismatch");
    for (int j = 0; j < num_vars; ++j)
        if (var_upper[j] && *var_upper[j] < var_lower[j])
            throw std::invalid_argument("MoilpProblem: var_upper < var_lower");
}

OutcomeVector evaluate(const MoilpProblem& problem,
                       const std::vector<std::int64_t>& x) {
    if (x.size() != static_cast<std::size_t>(problem.num_vars))
        throw std::invalid_argument("evaluate: x has wrong length");
    OutcomeVector z(problem.num_objectives, 0);
    for (int k = 0; k < problem.num_objectives; ++k) {
        std::int64_t acc = 0;
        const auto& row = problem.objective_coeffs[k];
        for (int j = 0; j < problem.num_vars; ++j) acc += row[j] * x[j];
        z[k] = acc;
    }
    return z;
}

bool is_feasible(const MoilpProblem& problem,
                 const std::vector<std::int64_t>& x) {
    if (x.size() != static_cast<std::size_t>(problem.num_vars))
        throw std::invalid_argument("is_feasible: x has wrong length");
    for (int j = 0; j < problem.num_vars; ++j) {
        if (x[j] < problem.var_lower[j]) return false;
        if (problem.var_upper[j] && x[j] > *problem.var_upper[j]) return false;
    }
    for (int i = 0; i < problem.num_constraints; ++i) {
        std::int64_t acc = 0;
        for (int j = 0; j < problem.num_vars; ++j)
            acc += problem.constraint_coeffs[i][j] * x[j];
        if (acc > problem.rhs[i]) return false;
    }
    return true;
}

Dominance dominates(const OutcomeVector& a, const OutcomeVector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dominates: dimension mismatch");
    bool all_ge = true, all_gt = true, any_gt = false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] < b[k]) all_ge = false;
        if (a[k] <= b[k]) all_gt = false;
        if (a[k] > b[k]) any_gt = true;
    }
    if (all_gt) return Dominance::Strict;
    if (all_ge && any_gt) return Dominance::Weak;
    return Dominance::None;
}

namespace {

/// Incremental nondominated archive. Small fronts make linear scans cheap.
class Archive {
  public:
    void insert(const OutcomeVector& z) {
        for (const auto& member : points_) {
            if (member == z) return;
            if (dominates(member, z) != Dominance::None) return;
        }
        std::erase_if(points_, [&](const OutcomeVector& member) {
            return dominates(z, member) != Dominance::None;
        });
        points_.push_back(z);
    }

    std::vector<OutcomeVector> take() {
        std::sort(points_.begin(), points_.end(),
                  [](const OutcomeVector& a, const OutcomeVector& b) { return a > b; });
        return std::move(points_);
    }

  private:
    std::vector<OutcomeVector> points_;
};

}  // namespace

std::vector<OutcomeVector> pareto_filter(std::vector<OutcomeVector> points) {
    Archive archive;
    for (const auto& z : points) archive.insert(z);
    return archive.take();
}

std::vector<std::int64_t> derive_upper_bounds(const MoilpProblem& problem) {
    std::vector<std::int64_t> ub(problem.num_vars);
    for (int j = 0; j < problem.num_vars; ++j) {
        if (problem.var_upper[j]) {
            ub[j] = *problem.var_upper[j];
            continue;
        }
        std::int64_t best = std::numeric_limits<std::int64_t>::max();
        bool found = false;
        for (int i = 0; i < problem.num_constraints; ++i) {
            const std::int64_t a = problem.constraint_coeffs[i][j];
            if (a > 0 && problem.rhs[i] >= 0) {
                best = std::min(best, problem.rhs[i] / a);
                found = true;
            }
        }
        if (!found)
            throw UnboundedBoxError("variable x" + std::to_string(j + 1) +
                                    " has no explicit or implied upper bound");
        ub[j] = std::max<std::int64_t>(best, problem.var_lower[j]);
    }
    return ub;
}

std::vector<OutcomeVector> brute_force_front(const MoilpProblem& problem,
                                             const BruteForceOptions& opts) {
    problem.validate();
    const auto ub = derive_upper_bounds(problem);
    const auto& lb = problem.var_lower;

    double volume = 1.0;
    for (int j = 0; j < problem.num_vars; ++j)
        volume *= static_cast<double>(ub[j] - lb[j] + 1);
    if (volume > opts.max_box_volume)
        throw BudgetExceededError("brute_force_front: search box volume " +
                                  std::to_string(volume) + " exceeds cap");

    const int n = problem.num_vars;
    const int m = problem.num_constraints;

    // min_tail[i][j]: least possible contribution of variables j..n-1 to row i.
    std::vector<std::vector<std::int64_t>> min_tail(
        m, std::vector<std::int64_t>(n + 1, 0));
    for (int i = 0; i < m; ++i)
        for (int j = n - 1; j >= 0; --j) {
            const std::int64_t a = problem.constraint_coeffs[i][j];
            const std::int64_t lo = a >= 0 ? a * lb[j] : a * ub[j];
            min_tail[i][j] = min_tail[i][j + 1] + lo;
        }

    Archive archive;
    std::vector<std::int64_t> x(n, 0);
    std::vector<std::int64_t> partial(m, 0);

    // DFS over the box, pruning prefixes that already force infeasibility.
    auto recurse = [&](auto&& self, int j) -> void {
        if (j == n) {
            archive.insert(evaluate(problem, x));
            return;
        }
        for (std::int64_t v = lb[j]; v <= ub[j]; ++v) {
            x[j] = v;
            bool ok = true;
            for (int i = 0; i < m; ++i) {
                partial[i] += problem.constraint_coeffs[i][j] * v;
                if (partial[i] + min_tail[i][j + 1] > problem.rhs[i]) ok = false;
            }
            if (ok) self(self, j + 1);
            for (int i = 0; i < m; ++i)
                partial[i] -= problem.constraint_coeffs[i][j] * v;
        }
        x[j] = lb[j];
    };
    recurse(recurse, 0);
    return archive.take();
}

}  // namespace epsfront
