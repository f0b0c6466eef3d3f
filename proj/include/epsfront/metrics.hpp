/**
 * @file metrics.hpp
 * @brief Representation-quality measures: distance family, coverage error,
 *        uniformity level and cardinality.
 */

#ifndef EPSFRONT_METRICS_HPP
#define EPSFRONT_METRICS_HPP

#include <optional>
#include <vector>

#include "epsfront/model.hpp"

namespace epsfront {

/// Norm selector; order 0 stands for the Chebyshev (infinity) norm.
struct DistanceSpec {
    unsigned order = 0;

    static DistanceSpec chebyshev() { return {0}; }
    static DistanceSpec manhattan() { return {1}; }
    static DistanceSpec euclidean() { return {2}; }
    static DistanceSpec minkowski(unsigned t) { return {t}; }
};

double distance(const OutcomeVector& a, const OutcomeVector& b,
                DistanceSpec spec = {});

/// Max over reference points of the distance to the closest representation
/// point. Throws on an empty representation.
double coverage_error(const std::vector<OutcomeVector>& representation,
                      const std::vector<OutcomeVector>& reference,
                      DistanceSpec spec = {});

/// Min pairwise distance; undefined (throws) for fewer than two points.
double uniformity_level(const std::vector<OutcomeVector>& representation,
                        DistanceSpec spec = {});

struct QualityReport {
    std::int64_t cardinality = 0;
    std::optional<double> coverage;    ///< present when a reference front is given
    std::optional<double> uniformity;  ///< present when cardinality >= 2
    /// Per-objective maximum coordinate gap between consecutive sorted values.
    std::vector<std::int64_t> coordinate_gaps;
};

QualityReport quality_report(
    const std::vector<OutcomeVector>& representation,
    const std::vector<OutcomeVector>* reference = nullptr,
    DistanceSpec spec = {});

}  // namespace epsfront

#endif  // EPSFRONT_METRICS_HPP
