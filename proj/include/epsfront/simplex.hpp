/**
 * @file simplex.hpp
 * @brief Exact solver layer: primal simplex for LP relaxations and
 *        branch-and-bound for integer programs, behind a pluggable backend
 *        interface.
 *
 * The bundled backend is deterministic: re-solving an identical subproblem
 * yields an identical outcome. It targets the small, dense subproblems built
 * by the scalarization layer, not performance parity with commercial solvers.
 */

#ifndef EPSFRONT_SIMPLEX_HPP
#define EPSFRONT_SIMPLEX_HPP

#include <cstdint>
#include <limits>
#include <vector>

namespace epsfront {

enum class RowSense { LessEqual, Equal, GreaterEqual };

/// A single-objective LP/IP in "maximize" form with bounded variables.
struct LinearSubproblem {
    struct Row {
        std::vector<double> coeffs;
        RowSense sense = RowSense::LessEqual;
        double rhs = 0.0;
    };

    int num_vars = 0;
    std::vector<double> objective;  ///< maximized
    std::vector<Row> rows;
    std::vector<double> lower;  ///< finite
    std::vector<double> upper;  ///< may be +infinity for continuous vars
    std::vector<bool> is_integer;

    static constexpr double kInfinity = std::numeric_limits<double>::infinity();

    void validate() const;  ///< throws std::invalid_argument
};

enum class SolveStatus { Optimal, Infeasible, Unbounded };

struct SolveStats {
    std::int64_t pivots = 0;
    std::int64_t nodes = 0;
};

struct SolveOutcome {
    SolveStatus status = SolveStatus::Infeasible;
    std::vector<double> x;  ///< present iff status == Optimal
    double objective_value = 0.0;
    SolveStats stats;
};

struct SolverOptions {
    double feasibility_tol = 1e-9;
    double integrality_tol = 1e-6;
    std::int64_t node_budget = 1'000'000;
    /// Degenerate pivots tolerated before switching to Bland's rule.
    int degenerate_pivot_limit = 1000;
};

/// Backend contract; any implementation with these semantics may substitute.
class SolverBackend {
  public:
    virtual ~SolverBackend() = default;
    /// Optimal basic solution of the LP relaxation (integrality ignored).
    virtual SolveOutcome solve_lp(const LinearSubproblem& sub) = 0;
    /// Provably optimal integer solution via branch-and-bound.
    virtual SolveOutcome solve_ip(const LinearSubproblem& sub) = 0;
};

/// Bundled dense two-phase simplex + best-bound branch-and-bound.
class SimplexBackend final : public SolverBackend {
  public:
    explicit SimplexBackend(SolverOptions options = {}) : options_(options) {}

    SolveOutcome solve_lp(const LinearSubproblem& sub) override;
    SolveOutcome solve_ip(const LinearSubproblem& sub) override;

    const SolverOptions& options() const { return options_; }

  private:
    SolverOptions options_;
};

}  // namespace epsfront

#endif  // EPSFRONT_SIMPLEX_HPP
