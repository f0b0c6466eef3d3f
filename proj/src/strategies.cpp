#include "epsfront/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "epsfront/errors.hpp"

namespace epsfront {

QualityTargets targets_from_cardinality(const FrontBounds& bounds, int q,
                                        const std::vector<std::int64_t>& c) {
    QualityTargets targets;
    std::size_t i = 0;
    for (int k = 0; k < static_cast<int>(bounds.ideal.size()); ++k) {
        if (k == q) continue;
        if (i >= c.size())
            throw std::invalid_argument("targets_from_cardinality: c too short");
        if (c[i] < 1)
            throw std::invalid_argument("targets_from_cardinality: c_k must be >= 1");
        const std::int64_t range = bounds.range[k];
        if (range == 0)
            throw ZeroRangeError("targets_from_cardinality: objective " +
                                 std::to_string(k + 1) + " has zero range");
        const double ratio = static_cast<double>(range) / static_cast<double>(c[i]);
        targets.gamma.push_back(ratio);
        targets.delta.push_back(ratio);
        targets.cardinality.push_back(c[i]);
        ++i;
    }
    return targets;
}

QualityTargets full_front_params(StrategyKind kind, const FrontBounds& bounds,
                                 int q) {
    QualityTargets targets;
    for (int k = 0; k < static_cast<int>(bounds.ideal.size()); ++k) {
        if (k == q) continue;
        switch (kind) {
            case StrategyKind::GpbaA:
                targets.gamma.push_back(1.0);
                break;
            case StrategyKind::GpbaB:
            case StrategyKind::Naive:
                targets.delta.push_back(1.0);
                break;
            case StrategyKind::GpbaC:
                targets.cardinality.push_back(std::max<std::int64_t>(bounds.range[k], 1));
                break;
        }
    }
    return targets;
}

namespace {

/// Longest run of integers in [nadir, ideal] absent from D.
std::int64_t longest_hole(const std::set<std::int64_t>& d, std::int64_t nadir,
                          std::int64_t ideal) {
    std::int64_t best = 0, run = 0;
    for (std::int64_t v = nadir; v <= ideal; ++v) {
        if (d.count(v)) run = 0;
        else best = std::max(best, ++run);
    }
    return best;
}

}  // namespace

GpbaAResult gpba_a_adjust(double gamma_k, double epsilon_k, bool feasible,
                          std::int64_t z_k, std::int64_t ideal_k,
                          std::int64_t nadir_k, DiscardSet discard) {
    const auto ceil_eps = static_cast<std::int64_t>(std::ceil(epsilon_k - 1e-9));
    const std::int64_t to = feasible ? z_k : ideal_k;
    for (std::int64_t v = ceil_eps; v <= to; ++v) discard.values.insert(v);

    GpbaAResult result;
    if (epsilon_k == static_cast<double>(nadir_k)) {
        // first extreme solved; probe the other extreme next
        result.epsilon = static_cast<double>(ideal_k);
        result.discard = std::move(discard);
        return result;
    }
    if (discard.values.size() < 2)
        throw std::logic_error("gpba_a_adjust: discard set unexpectedly small");

    // widest gap between consecutive discarded values; ties pick the lowest pair
    std::int64_t best_lo = 0, best_hi = 0, best_gap = -1;
    auto it = discard.values.begin();
    std::int64_t prev = *it;
    for (++it; it != discard.values.end(); ++it) {
        const std::int64_t gap = *it - prev;
        if (gap > best_gap) {
            best_gap = gap;
            best_lo = prev;
            best_hi = *it;
        }
        prev = *it;
    }
    // a unit gap means the integer grid is fully covered, so gamma below 1
    // behaves like 1
    if (static_cast<double>(best_gap) <= std::max(gamma_k, 1.0)) {
        result.epsilon = static_cast<double>(ideal_k + 1);
        result.final_max_gap = best_gap;
        result.coverage_gap = longest_hole(discard.values, nadir_k, ideal_k);
        result.discard = DiscardSet{};
        result.exited = true;
    } else {
        result.epsilon = static_cast<double>(best_lo + best_hi) / 2.0;
        result.discard = std::move(discard);
    }
    return result;
}

double gpba_b_adjust(double delta_k, std::int64_t z_k) {
    if (delta_k <= 0.0)
        throw std::invalid_argument("gpba_b_adjust: delta must be positive");
    return static_cast<double>(z_k) + delta_k;
}

GridState initial_grid(std::int64_t nadir_k, std::int64_t c) {
    GridState state;
    state.z_start = nadir_k;
    state.remaining = std::max<std::int64_t>(c - 1, 1);
    state.position = 0;
    state.base_cardinality = c;
    return state;
}

GpbaCResult gpba_c_adjust(GridState state, std::int64_t ideal_k,
                          std::int64_t nadir_k, std::int64_t z_k, double s_k) {
    auto step_for = [&](const GridState& s) {
        const std::int64_t cells = std::max<std::int64_t>(s.remaining, 1);
        return std::max(
            static_cast<double>(ideal_k - s.z_start) / static_cast<double>(cells),
            1.0);
    };
    double step = step_for(state);
    const auto skipped = static_cast<std::int64_t>(std::floor(std::abs(s_k / step)));
    if (skipped > 0) {
        state.z_start = z_k;
        state.remaining = std::max<std::int64_t>(state.remaining - state.position, 1);
        state.position = 1;
        step = step_for(state);
    } else {
        state.position += 1;
    }

    GpbaCResult result;
    result.epsilon =
        static_cast<double>(state.z_start) + static_cast<double>(state.position) * step;
    result.step = step;
    if (result.epsilon > static_cast<double>(ideal_k) + 1e-9) {
        state.z_start = nadir_k;
        state.remaining = state.base_cardinality;
        state.position = 0;
        result.exited = true;
    }
    result.state = state;
    return result;
}

}  // namespace epsfront
