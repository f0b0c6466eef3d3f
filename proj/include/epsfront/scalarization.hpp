/**
 * @file scalarization.hpp
 * @brief Slack-augmented epsilon-constraint subproblems, front bounds
 *        (ideal / approximate nadir), and the baseline sweep used as a
 *        testing oracle.
 */

#ifndef EPSFRONT_SCALARIZATION_HPP
#define EPSFRONT_SCALARIZATION_HPP

#include <cstdint>
#include <vector>

#include "epsfront/model.hpp"
#include "epsfront/simplex.hpp"

namespace epsfront {

/// Ideal point, nadir approximation and per-objective ranges.
struct FrontBounds {
    OutcomeVector ideal;
    OutcomeVector nadir;
    std::vector<std::int64_t> range;  ///< ideal[k] - nadir[k], >= 0

    bool feasible = true;  ///< false when the problem itself is infeasible
};

enum class NadirMethod { IndividualMin, LexPayoff };

/// One augmented subproblem instance: objective q kept, the rest bounded
/// below by epsilon with rewarded slack variables.
struct AugmentedSubproblem {
    const MoilpProblem* problem = nullptr;
    int q = 0;                               ///< kept objective (0-based)
    std::vector<int> constrained;            ///< objective indices, loop order
    std::vector<double> epsilon;             ///< one per constrained objective
    double rho = 1e-3;
    FrontBounds bounds;
    LinearSubproblem linear;                 ///< vars: x then one slack per constrained k
};

/// Componentwise maxima over X, each objective solved independently.
OutcomeVector ideal_point(const MoilpProblem& problem, SolverBackend& backend);

/// Componentwise minima (IndividualMin) or lexicographic payoff-table
/// column minima (LexPayoff).
OutcomeVector nadir_approx(const MoilpProblem& problem, SolverBackend& backend,
                           NadirMethod method = NadirMethod::IndividualMin);

/// Bundles ideal + nadir + ranges. bounds.feasible is false for an
/// infeasible problem (all other fields empty in that case).
FrontBounds compute_bounds(const MoilpProblem& problem, SolverBackend& backend,
                           NadirMethod method = NadirMethod::IndividualMin);

/// Builds the augmented subproblem for objective q with the given epsilon
/// vector (ordered like `constrained`: ascending objective index, q skipped).
/// Slack weights are rho * 10^d / r_k where d counts loops from the
/// innermost (d = 0) outwards, so outer loops dominate slack tie-breaks.
AugmentedSubproblem build_subproblem(const MoilpProblem& problem, int q,
                                     const std::vector<double>& epsilon,
                                     double rho, const FrontBounds& bounds);

struct ExtractedOutcome {
    OutcomeVector outcome;        ///< recomputed from x, never from the LP value
    std::vector<double> slacks;   ///< z_k - epsilon_k per constrained objective
    std::vector<std::int64_t> x;
};

/// Recovers the outcome vector and slacks from an optimal solve result.
ExtractedOutcome extract_outcome(const AugmentedSubproblem& sub,
                                 const SolveOutcome& result);

/// Augmented objective value of an outcome under the subproblem weights.
/// Used to cross-check cache reuse against a fresh solve.
double augmented_value(const AugmentedSubproblem& sub, const OutcomeVector& z);

/// Basic epsilon-constraint sweep with step eta over every constrained
/// objective, followed by a Pareto filter. Second oracle next to
/// brute_force_front; no accelerations.
std::vector<OutcomeVector> naive_sweep(const MoilpProblem& problem, int q,
                                       std::int64_t eta, SolverBackend& backend,
                                       double rho = 1e-3);

}  // namespace epsfront

#endif  // EPSFRONT_SCALARIZATION_HPP
