#include "epsfront/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace epsfront {

double distance(const OutcomeVector& a, const OutcomeVector& b,
                DistanceSpec spec) {
    if (a.size() != b.size())
        throw std::invalid_argument("distance: dimension mismatch");
    if (spec.order == 0) {
        std::int64_t best = 0;
        for (std::size_t k = 0; k < a.size(); ++k)
            best = std::max(best, std::abs(a[k] - b[k]));
        return static_cast<double>(best);
    }
    if (spec.order == 1) {
        std::int64_t sum = 0;
        for (std::size_t k = 0; k < a.size(); ++k) sum += std::abs(a[k] - b[k]);
        return static_cast<double>(sum);
    }
    double sum = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k)
        sum += std::pow(static_cast<double>(std::abs(a[k] - b[k])),
                        static_cast<double>(spec.order));
    return std::pow(sum, 1.0 / static_cast<double>(spec.order));
}

double coverage_error(const std::vector<OutcomeVector>& representation,
                      const std::vector<OutcomeVector>& reference,
                      DistanceSpec spec) {
    if (representation.empty())
        throw std::invalid_argument("coverage_error: empty representation");
    double worst = 0.0;
    for (const auto& z : reference) {
        double closest = std::numeric_limits<double>::infinity();
        for (const auto& r : representation)
            closest = std::min(closest, distance(z, r, spec));
        worst = std::max(worst, closest);
    }
    return worst;
}

double uniformity_level(const std::vector<OutcomeVector>& representation,
                        DistanceSpec spec) {
    if (representation.size() < 2)
        throw std::invalid_argument("uniformity_level: need at least two points");
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < representation.size(); ++i)
        for (std::size_t j = i + 1; j < representation.size(); ++j)
            best = std::min(best, distance(representation[i], representation[j], spec));
    return best;
}

QualityReport quality_report(const std::vector<OutcomeVector>& representation,
                             const std::vector<OutcomeVector>* reference,
                             DistanceSpec spec) {
    if (representation.empty())
        throw std::invalid_argument("quality_report: empty representation");
    QualityReport report;
    report.cardinality = static_cast<std::int64_t>(representation.size());
    if (reference) report.coverage = coverage_error(representation, *reference, spec);
    if (representation.size() >= 2)
        report.uniformity = uniformity_level(representation, spec);

    const std::size_t p = representation.front().size();
    report.coordinate_gaps.assign(p, 0);
    std::vector<std::int64_t> column;
    for (std::size_t k = 0; k < p; ++k) {
        column.clear();
        for (const auto& z : representation) column.push_back(z[k]);
        std::sort(column.begin(), column.end());
        for (std::size_t i = 1; i < column.size(); ++i)
            report.coordinate_gaps[k] =
                std::max(report.coordinate_gaps[k], column[i] - column[i - 1]);
    }
    return report;
}

}  // namespace epsfront
