/**
 * @file engine.hpp
 * @brief Generic nested-loop generation driver: iterates epsilon vectors
 *        over the constrained objectives, delegating epsilon adjustment to
 *        a strategy, with a redundancy cache and accelerated loop exit.
 *
 * Loop nesting follows ascending objective index with q skipped: the first
 * constrained objective is the outermost loop, the last the innermost.
 */

#ifndef EPSFRONT_ENGINE_HPP
#define EPSFRONT_ENGINE_HPP

#include <cstdint>
#include <vector>

#include "epsfront/model.hpp"
#include "epsfront/scalarization.hpp"
#include "epsfront/simplex.hpp"
#include "epsfront/strategies.hpp"

namespace epsfront {

/// One cached subproblem: epsilon vector (loop order) and its outcome.
struct SolveRecord {
    std::vector<double> epsilon;
    bool feasible = false;
    Solution solution;  ///< valid iff feasible
    /// Outcome restricted to the constrained objectives, aligned with epsilon.
    std::vector<std::int64_t> constrained_values;
};

enum class CacheDecision { MustSolve, Reuse, Infeasible };

struct CacheLookup {
    CacheDecision decision = CacheDecision::MustSolve;
    const SolveRecord* record = nullptr;  ///< set for Reuse / Infeasible
};

/// Scans records newest-first, first epsilon'-below-epsilon match wins:
/// an infeasible match proves infeasibility, a feasible match whose
/// solution still satisfies every bound is reused as-is.
CacheLookup check_cache(const std::vector<SolveRecord>& cache,
                        const std::vector<double>& epsilon);

enum class LoopAction { Continue, ExitLoop };

/// Reaction to an infeasible subproblem: every strategy except the
/// coverage one abandons the loop (tighter epsilon stays infeasible); the
/// coverage strategy records the infeasible interval instead.
LoopAction early_exit(StrategyKind kind);

struct RunParams {
    StrategyKind strategy = StrategyKind::GpbaB;
    int q = 0;  ///< objective kept in the subproblem objective (0-based)
    QualityTargets targets;
    double rho = 1e-3;
    double min_rho = 1e-6;  ///< floor of the halving retry
    std::int64_t eta = 1;
    bool use_cache = true;
    bool use_early_exit = true;
    NadirMethod nadir_method = NadirMethod::IndividualMin;
    bool collect_trace = false;
    bool verify_cache = false;  ///< shadow-solve every reuse (test mode)
};

struct TraceEvent {
    enum class Kind {
        Solve,            ///< subproblem solved, feasible
        SolveInfeasible,  ///< subproblem solved, infeasible
        CacheReuse,
        CacheInfeasible,
        Advance,   ///< a loop's epsilon moved to next_epsilon
        LoopExit,  ///< a loop finished (next_epsilon was out of range)
    };
    Kind kind;
    int level = -1;               ///< loop level, 0 = outermost
    std::vector<double> epsilon;  ///< epsilon vector at the event
    OutcomeVector outcome;        ///< for feasible solve/reuse events
    double next_epsilon = 0.0;    ///< for Advance / LoopExit
    double step = 0.0;            ///< grid step (cardinality strategy)
    std::int64_t max_discard_gap = 0;  ///< coverage strategy, on loop exit
    std::int64_t coverage_gap = 0;     ///< coverage strategy, on loop exit
};

struct RunStats {
    std::int64_t iterations = 0;          ///< epsilon vectors considered
    std::int64_t subproblems_solved = 0;  ///< actual solver invocations
    std::int64_t cache_hits = 0;
    std::int64_t early_exits = 0;
    std::int64_t bb_nodes = 0;
    double wall_seconds = 0.0;
    double rho_used = 0.0;
    int rho_retries = 0;
};

struct RunResult {
    std::vector<OutcomeVector> representation;  ///< nondominated, sorted
    RunStats stats;
    FrontBounds bounds;
    std::vector<TraceEvent> trace;  ///< filled when params.collect_trace
};

/// Executes a full representation run. An infeasible problem yields an
/// empty representation with stats recorded.
RunResult run(const MoilpProblem& problem, const RunParams& params,
              SolverBackend& backend);

}  // namespace epsfront

#endif  // EPSFRONT_ENGINE_HPP
