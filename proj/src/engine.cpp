#include "epsfront/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace epsfront {

CacheLookup check_cache(const std::vector<SolveRecord>& cache,
                        const std::vector<double>& epsilon) {
    constexpr double kTol = 1e-9;
    for (auto it = cache.rbegin(); it != cache.rend(); ++it) {
        const SolveRecord& rec = *it;
        bool below = true;
        for (std::size_t i = 0; i < epsilon.size(); ++i)
            if (rec.epsilon[i] > epsilon[i] + kTol) {
                below = false;
                break;
            }
        if (!below) continue;
        if (!rec.feasible) return {CacheDecision::Infeasible, &rec};
        bool in_bounds = true;
        for (std::size_t i = 0; i < epsilon.size(); ++i)
            if (static_cast<double>(rec.constrained_values[i]) < epsilon[i] - kTol) {
                in_bounds = false;
                break;
            }
        if (in_bounds) return {CacheDecision::Reuse, &rec};
        return {CacheDecision::MustSolve, nullptr};  // first match decides
    }
    return {CacheDecision::MustSolve, nullptr};
}

LoopAction early_exit(StrategyKind kind) {
    return kind == StrategyKind::GpbaA ? LoopAction::Continue
                                       : LoopAction::ExitLoop;
}

namespace {

constexpr double kEpsTol = 1e-6;

/// Aggregate seed for trace events; remaining fields keep their defaults.
TraceEvent make_event(TraceEvent::Kind kind, int level, std::vector<double> eps) {
    TraceEvent ev;
    ev.kind = kind;
    ev.level = level;
    ev.epsilon = std::move(eps);
    return ev;
}

/// Snap a computed epsilon to the integer grid when it is within tolerance;
/// protects equality comparisons against accumulated float error.
double snap(double eps) {
    const double r = std::round(eps);
    return std::abs(eps - r) < kEpsTol ? r : eps;
}

class Driver {
  public:
    Driver(const MoilpProblem& problem, const RunParams& params,
           SolverBackend& backend, const FrontBounds& bounds, double rho)
        : problem_(problem),
          params_(params),
          backend_(backend),
          bounds_(bounds),
          rho_(rho) {}

    struct Attempt {
        std::vector<OutcomeVector> collected;
        RunStats stats;
        std::vector<TraceEvent> trace;
    };

    Attempt execute() {
        init_levels();
        while (!finished_) iterate();
        Attempt attempt;
        attempt.collected = std::move(collected_);
        attempt.stats = stats_;
        attempt.trace = std::move(trace_);
        return attempt;
    }

  private:
    struct Level {
        int obj = 0;
        double eps = 0.0;
        std::int64_t worst = 0;   ///< z^wv over the current slice
        bool slice_found = false;
        DiscardSet discard;       ///< coverage strategy
        GridState grid;           ///< cardinality strategy
    };

    const MoilpProblem& problem_;
    const RunParams& params_;
    SolverBackend& backend_;
    const FrontBounds& bounds_;
    const double rho_;

    std::vector<Level> levels_;
    std::vector<SolveRecord> cache_;
    std::vector<OutcomeVector> collected_;
    std::vector<TraceEvent> trace_;
    RunStats stats_;
    bool finished_ = false;

    int innermost() const { return static_cast<int>(levels_.size()) - 1; }
    std::int64_t ideal(const Level& lv) const { return bounds_.ideal[lv.obj]; }
    std::int64_t nadir(const Level& lv) const { return bounds_.nadir[lv.obj]; }

    std::vector<double> eps_vector() const {
        std::vector<double> eps;
        eps.reserve(levels_.size());
        for (const auto& lv : levels_) eps.push_back(lv.eps);
        return eps;
    }

    void trace_event(TraceEvent ev) {
        if (params_.collect_trace) trace_.push_back(std::move(ev));
    }

    void reset_level(int i) {
        Level& lv = levels_[i];
        lv.eps = static_cast<double>(nadir(lv));  // most relaxed form
        lv.worst = ideal(lv);
        lv.slice_found = false;
        lv.discard = DiscardSet{};
        // grid state keeps what the adjuster reset it to; a fresh level
        // (or an early-exited one) restarts at (nadir, c, 0)
    }

    void init_levels() {
        for (int k = 0; k < problem_.num_objectives; ++k) {
            if (k == params_.q) continue;
            Level lv;
            lv.obj = k;
            levels_.push_back(lv);
        }
        if (levels_.empty())
            throw std::invalid_argument("run: need at least one constrained objective");
        validate_targets();
        for (int i = 0; i < static_cast<int>(levels_.size()); ++i) {
            reset_level(i);
            if (params_.strategy == StrategyKind::GpbaC)
                levels_[i].grid = initial_grid(nadir(levels_[i]),
                                               params_.targets.cardinality[i]);
        }
    }

    void validate_targets() {
        const std::size_t want = levels_.size();
        switch (params_.strategy) {
            case StrategyKind::GpbaA:
                if (params_.targets.gamma.size() != want)
                    throw std::invalid_argument("run: gamma targets incomplete");
                break;
            case StrategyKind::GpbaB:
                if (params_.targets.delta.size() != want)
                    throw std::invalid_argument("run: delta targets incomplete");
                break;
            case StrategyKind::GpbaC:
                if (params_.targets.cardinality.size() != want)
                    throw std::invalid_argument("run: cardinality targets incomplete");
                break;
            case StrategyKind::Naive:
                break;
        }
    }

    /// One innermost iteration: obtain a result for the current epsilon
    /// vector (cache or solver) and react to it.
    void iterate() {
        ++stats_.iterations;
        const std::vector<double> eps = eps_vector();

        bool feasible = false;
        OutcomeVector outcome;
        std::vector<double> slacks;

        CacheLookup lookup;
        if (params_.use_cache) lookup = check_cache(cache_, eps);

        if (lookup.decision == CacheDecision::Infeasible) {
            ++stats_.cache_hits;
            trace_event(make_event(TraceEvent::Kind::CacheInfeasible, innermost(), eps));
        } else if (lookup.decision == CacheDecision::Reuse) {
            ++stats_.cache_hits;
            feasible = true;
            outcome = lookup.record->solution.outcome;
            slacks.resize(levels_.size());
            for (std::size_t i = 0; i < levels_.size(); ++i)
                slacks[i] = static_cast<double>(outcome[levels_[i].obj]) - eps[i];
            if (params_.verify_cache) shadow_verify(eps, outcome);
            TraceEvent ev = make_event(TraceEvent::Kind::CacheReuse, innermost(), eps);
            ev.outcome = outcome;
            trace_event(std::move(ev));
        } else {
            const AugmentedSubproblem sub =
                build_subproblem(problem_, params_.q, eps, rho_, bounds_);
            const SolveOutcome res = backend_.solve_ip(sub.linear);
            ++stats_.subproblems_solved;
            stats_.bb_nodes += res.stats.nodes;
            SolveRecord rec;
            rec.epsilon = eps;
            if (res.status == SolveStatus::Optimal) {
                const ExtractedOutcome ext = extract_outcome(sub, res);
                feasible = true;
                outcome = ext.outcome;
                slacks = ext.slacks;
                rec.feasible = true;
                rec.solution = Solution{ext.x, ext.outcome};
                for (const auto& lv : levels_)
                    rec.constrained_values.push_back(ext.outcome[lv.obj]);
                TraceEvent ev = make_event(TraceEvent::Kind::Solve, innermost(), eps);
                ev.outcome = outcome;
                trace_event(std::move(ev));
            } else {
                trace_event(make_event(TraceEvent::Kind::SolveInfeasible, innermost(), eps));
            }
            cache_.push_back(std::move(rec));
        }

        if (feasible) {
            collected_.push_back(outcome);
            for (auto& lv : levels_) lv.slice_found = true;
            // worst values are kept for every loop except the innermost
            for (int i = 0; i < innermost(); ++i)
                levels_[i].worst = std::min(levels_[i].worst, outcome[levels_[i].obj]);
            advance(innermost(), true, outcome[levels_[innermost()].obj],
                    slacks[innermost()]);
        } else {
            handle_infeasible(innermost());
        }
    }

    void shadow_verify(const std::vector<double>& eps, const OutcomeVector& reused) {
        const AugmentedSubproblem sub =
            build_subproblem(problem_, params_.q, eps, rho_, bounds_);
        const SolveOutcome res = backend_.solve_ip(sub.linear);
        if (res.status != SolveStatus::Optimal)
            throw std::logic_error("cache reuse for an infeasible subproblem");
        const ExtractedOutcome ext = extract_outcome(sub, res);
        const double got = augmented_value(sub, ext.outcome);
        const double cached = augmented_value(sub, reused);
        if (std::abs(got - cached) > 1e-6)
            throw std::logic_error("cache reuse disagrees with a fresh solve");
    }

    void handle_infeasible(int level) {
        if (params_.strategy == StrategyKind::GpbaA) {
            advance(level, false, 0, 0.0);
            return;
        }
        if (params_.use_early_exit &&
            early_exit(params_.strategy) == LoopAction::ExitLoop) {
            ++stats_.early_exits;
            exit_level(level, levels_[level].eps);
            return;
        }
        // accelerations disabled: march through the infeasible region
        fallback_advance(level);
    }

    /// Infeasible step with early exit disabled; sound but wasteful.
    void fallback_advance(int level) {
        Level& lv = levels_[level];
        double next = 0.0;
        double step = 0.0;
        switch (params_.strategy) {
            case StrategyKind::GpbaB:
                next = lv.eps + params_.targets.delta[level];
                break;
            case StrategyKind::Naive:
                next = lv.eps + static_cast<double>(params_.eta);
                break;
            case StrategyKind::GpbaC: {
                // slack 0 keeps the grid and moves one position forward
                GpbaCResult res = gpba_c_adjust(lv.grid, ideal(lv), nadir(lv), 0, 0.0);
                lv.grid = res.state;
                next = res.epsilon;
                step = res.step;
                break;
            }
            case StrategyKind::GpbaA:
                throw std::logic_error("fallback_advance: not used for coverage");
        }
        commit_epsilon(level, snap(next), step);
    }

    /// Ask the strategy for the next epsilon of `level` after a feasible
    /// result (or an infeasible one under the coverage strategy).
    void advance(int level, bool feasible, std::int64_t z, double slack) {
        Level& lv = levels_[level];
        double next = 0.0;
        double step = 0.0;
        switch (params_.strategy) {
            case StrategyKind::GpbaA: {
                GpbaAResult res =
                    gpba_a_adjust(params_.targets.gamma[level], lv.eps, feasible, z,
                                  ideal(lv), nadir(lv), std::move(lv.discard));
                lv.discard = std::move(res.discard);
                if (res.exited) {
                    TraceEvent ev = make_event(TraceEvent::Kind::LoopExit, level, eps_vector());
                    ev.next_epsilon = res.epsilon;
                    ev.max_discard_gap = res.final_max_gap;
                    ev.coverage_gap = res.coverage_gap;
                    trace_event(std::move(ev));
                    pop_level(level);
                    return;
                }
                next = res.epsilon;
                break;
            }
            case StrategyKind::GpbaB:
                next = gpba_b_adjust(params_.targets.delta[level], z);
                break;
            case StrategyKind::Naive:
                next = static_cast<double>(z + params_.eta);
                break;
            case StrategyKind::GpbaC: {
                GpbaCResult res = gpba_c_adjust(lv.grid, ideal(lv), nadir(lv), z, slack);
                lv.grid = res.state;
                step = res.step;
                if (res.exited) {
                    exit_level(level, res.epsilon);
                    return;
                }
                next = res.epsilon;
                break;
            }
        }
        commit_epsilon(level, snap(next), step);
    }

    void commit_epsilon(int level, double next, double step) {
        Level& lv = levels_[level];
        if (next > static_cast<double>(ideal(lv)) + 1e-9) {
            exit_level(level, next);
            return;
        }
        TraceEvent ev = make_event(TraceEvent::Kind::Advance, level, eps_vector());
        ev.next_epsilon = next;
        ev.step = step;
        trace_event(std::move(ev));
        lv.eps = next;
        // a new slice starts for this loop and everything nested inside it
        lv.worst = ideal(lv);
        lv.slice_found = false;
        for (int j = level + 1; j < static_cast<int>(levels_.size()); ++j) {
            reset_level(j);
            if (params_.strategy == StrategyKind::GpbaC) {
                // keep the adjuster's reset; restore a clean grid if the
                // loop left through an early exit instead
                if (levels_[j].grid.position != 0)
                    levels_[j].grid = GridState{nadir(levels_[j]),
                                                params_.targets.cardinality[j], 0,
                                                params_.targets.cardinality[j]};
            }
        }
    }

    void exit_level(int level, double attempted_eps) {
        TraceEvent ev = make_event(TraceEvent::Kind::LoopExit, level, eps_vector());
        ev.next_epsilon = attempted_eps;
        trace_event(std::move(ev));
        pop_level(level);
    }

    /// A loop at `level` is done; advance its parent (or finish the run).
    void pop_level(int level) {
        if (level == 0) {
            finished_ = true;
            return;
        }
        const int parent = level - 1;
        Level& plv = levels_[parent];
        if (plv.slice_found) {
            // the slice's worst value stands in for z_k of the parent loop
            advance(parent, true, plv.worst,
                    static_cast<double>(plv.worst) - plv.eps);
            return;
        }
        // empty slice: the parent epsilon is infeasible throughout
        handle_infeasible(parent);
    }
};

}  // namespace

RunResult run(const MoilpProblem& problem, const RunParams& params,
              SolverBackend& backend) {
    problem.validate();
    const auto t0 = std::chrono::steady_clock::now();

    RunResult result;
    result.bounds = compute_bounds(problem, backend, params.nadir_method);
    if (!result.bounds.feasible) {
        result.stats.rho_used = params.rho;
        result.stats.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return result;
    }

    double rho = params.rho;
    int retries = 0;
    while (true) {
        Driver driver(problem, params, backend, result.bounds, rho);
        Driver::Attempt attempt = driver.execute();
        result.representation = pareto_filter(attempt.collected);

        // with a proper rho every collected outcome is efficient; a
        // dominated one signals that rho needs shrinking
        std::vector<OutcomeVector> unique = attempt.collected;
        std::sort(unique.begin(), unique.end());
        unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
        const bool clean = unique.size() == result.representation.size();

        result.stats = attempt.stats;
        result.stats.rho_used = rho;
        result.stats.rho_retries = retries;
        result.trace = std::move(attempt.trace);
        if (clean || rho / 2.0 < params.min_rho) break;
        rho /= 2.0;
        ++retries;
    }

    result.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

}  // namespace epsfront
