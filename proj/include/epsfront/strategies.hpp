/**
 * @file strategies.hpp
 * @brief The three epsilon-adjustment rules driving the representation
 *        engine: coverage (GPBA-A), uniformity (GPBA-B) and cardinality
 *        (GPBA-C), plus parameter derivation from target cardinalities.
 *
 * All adjusters are pure: identical inputs give identical outputs. A loop
 * signals its exit by returning an epsilon above the ideal value
 * (the uniform sentinel is ideal + 1).
 */

#ifndef EPSFRONT_STRATEGIES_HPP
#define EPSFRONT_STRATEGIES_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "epsfront/scalarization.hpp"

namespace epsfront {

enum class StrategyKind { GpbaA, GpbaB, GpbaC, Naive };

/// Ordered set of discarded integer values for one GPBA-A loop.
struct DiscardSet {
    std::set<std::int64_t> values;
};

/// Grid state for one GPBA-C loop.
struct GridState {
    std::int64_t z_start = 0;  ///< grid start (nadir initially)
    std::int64_t remaining = 0;  ///< c' : points left to compute on this grid
    std::int64_t position = 0;   ///< i : index within the grid
    std::int64_t base_cardinality = 0;  ///< c : the loop's target cardinality
};

/// Per-constrained-objective quality targets (gamma, delta or c).
struct QualityTargets {
    std::vector<double> gamma;              ///< coverage error per loop
    std::vector<double> delta;              ///< uniformity level per loop
    std::vector<std::int64_t> cardinality;  ///< grid cardinality per loop
};

/// gamma_k = delta_k = (ideal_k - nadir_k) / c_k for every constrained
/// objective, in loop order (ascending objective index, q skipped).
QualityTargets targets_from_cardinality(const FrontBounds& bounds, int q,
                                        const std::vector<std::int64_t>& c);

/// Full-front presets: gamma = 1, delta = 1, c_k = range_k.
QualityTargets full_front_params(StrategyKind kind, const FrontBounds& bounds,
                                 int q);

struct GpbaAResult {
    double epsilon = 0.0;
    DiscardSet discard;
    /// Valid only when the gamma branch exited the loop.
    std::int64_t final_max_gap = 0;
    /// Longest run of integers in [nadir, ideal] not discarded, measured
    /// just before clearing; the realized coverage gap of the loop pass.
    std::int64_t coverage_gap = 0;
    bool exited = false;
};

/// Alg. "coverage": discard [ceil(eps), z] (or up to ideal when infeasible),
/// then bisect the widest remaining gap until it closes below gamma.
/// z_k is ignored when `feasible` is false.
GpbaAResult gpba_a_adjust(double gamma_k, double epsilon_k, bool feasible,
                          std::int64_t z_k, std::int64_t ideal_k,
                          std::int64_t nadir_k, DiscardSet discard);

/// Alg. "uniformity": step delta above the last outcome.
double gpba_b_adjust(double delta_k, std::int64_t z_k);

struct GpbaCResult {
    double epsilon = 0.0;
    GridState state;
    double step = 0.0;  ///< step size used for the produced epsilon
    bool exited = false;
};

/// Alg. "cardinality": uniform grid between start and ideal, refined from
/// the last outcome whenever the slack skips at least one grid step.
GpbaCResult gpba_c_adjust(GridState state, std::int64_t ideal_k,
                          std::int64_t nadir_k, std::int64_t z_k, double s_k);

/// Initial grid for a loop with target cardinality c (first pass uses c-1
/// grid points; resets after a pass use c).
GridState initial_grid(std::int64_t nadir_k, std::int64_t c);

}  // namespace epsfront

#endif  // EPSFRONT_STRATEGIES_HPP
