/**
 * @file model.hpp
 * @brief Multi-objective integer linear program model, dominance tests and
 *        Pareto filtering.
 *
 * Canonical form: all objectives maximized, all constraints "<=", integer
 * coefficients everywhere. Loaders must convert (negate rows) before
 * constructing a Problem.
 */

#ifndef EPSFRONT_MODEL_HPP
#define EPSFRONT_MODEL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace epsfront {

/// A point in objective space (length p, integer entries).
using OutcomeVector = std::vector<std::int64_t>;

/// Integer-coefficient maximization MOILP in canonical form.
struct MoilpProblem {
    int num_vars = 0;         ///< n
    int num_objectives = 0;   ///< p >= 2
    int num_constraints = 0;  ///< m

    /// p x n objective coefficient matrix (row k = objective k).
    std::vector<std::vector<std::int64_t>> objective_coeffs;
    /// m x n constraint coefficient matrix, rows are "<= rhs".
    std::vector<std::vector<std::int64_t>> constraint_coeffs;
    std::vector<std::int64_t> rhs;

    std::vector<std::int64_t> var_lower;
    /// Explicit upper bounds; nullopt means "implied" (derived on demand).
    std::vector<std::optional<std::int64_t>> var_upper;

    std::string name;

    /// Validates dimensions and invariants, throws std::invalid_argument.
    void validate() const;
};

/// Decision vector paired with its outcome.
struct Solution {
    std::vector<std::int64_t> x;
    OutcomeVector outcome;
};

enum class Dominance { None, Weak, Strict };

/// Computes C*x. Does not check feasibility.
OutcomeVector evaluate(const MoilpProblem& problem,
                       const std::vector<std::int64_t>& x);

/// True iff x satisfies A*x <= b and the variable bounds.
bool is_feasible(const MoilpProblem& problem,
                 const std::vector<std::int64_t>& x);

/// Dominance of a over b (maximization). Equal vectors yield None.
Dominance dominates(const OutcomeVector& a, const OutcomeVector& b);

/// Keeps exactly the points not weakly dominated by any other; duplicates
/// collapsed; output sorted lexicographically descending.
std::vector<OutcomeVector> pareto_filter(std::vector<OutcomeVector> points);

/// Upper bound for each variable: the explicit bound when present, else
/// min over constraints i with A[i][j] > 0 of floor(b_i / A[i][j]).
/// Throws UnboundedBoxError if some variable has neither.
std::vector<std::int64_t> derive_upper_bounds(const MoilpProblem& problem);

struct BruteForceOptions {
    /// Maximum admissible search-box volume (number of lattice points).
    double max_box_volume = 1e8;
};

/// Exact nondominated set by exhaustive enumeration of the bound box.
/// Testing oracle; throws on unbounded box or budget excess.
std::vector<OutcomeVector> brute_force_front(
    const MoilpProblem& problem, const BruteForceOptions& opts = {});

}  // namespace epsfront

#endif  // EPSFRONT_MODEL_HPP
