#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "epsfront/metrics.hpp"

using namespace epsfront;

namespace {

std::vector<OutcomeVector> random_points(std::mt19937& rng, int count, int dim) {
    std::uniform_int_distribution<std::int64_t> coord(-50, 50);
    std::vector<OutcomeVector> points(count);
    for (auto& z : points) {
        z.resize(dim);
        for (auto& v : z) v = coord(rng);
    }
    return points;
}

}  // namespace

TEST_CASE("distance hand values") {
    const OutcomeVector a = {1, 2, 3}, b = {4, 0, 3};
    CHECK(distance(a, b, DistanceSpec::chebyshev()) == doctest::Approx(3.0));
    CHECK(distance(a, b, DistanceSpec::manhattan()) == doctest::Approx(5.0));
    CHECK(distance(a, b, DistanceSpec::euclidean()) ==
          doctest::Approx(std::sqrt(13.0)));
    CHECK(distance(a, a) == 0.0);
}

TEST_CASE("distance rejects dimension mismatch") {
    CHECK_THROWS_AS(distance({1, 2}, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("randomized metric axioms hold") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<std::int64_t> coord(-100, 100);
    const DistanceSpec specs[] = {DistanceSpec::chebyshev(),
                                  DistanceSpec::manhattan(),
                                  DistanceSpec::euclidean(),
                                  DistanceSpec::minkowski(3)};
    int violations = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        OutcomeVector a(3), b(3), c(3);
        for (int k = 0; k < 3; ++k) {
            a[k] = coord(rng);
            b[k] = coord(rng);
            c[k] = coord(rng);
        }
        for (const DistanceSpec& spec : specs) {
            const double ab = distance(a, b, spec);
            const double ba = distance(b, a, spec);
            const double ac = distance(a, c, spec);
            const double cb = distance(c, b, spec);
            if (ab < 0.0) ++violations;                          // nonnegativity
            if (ab != ba) ++violations;                          // symmetry
            if ((ab == 0.0) != (a == b)) ++violations;           // identity
            if (ab > ac + cb + 1e-9) ++violations;               // triangle
        }
    }
    CHECK(violations == 0);
}

TEST_CASE("chebyshev distance decouples coordinates") {
    // max of per-coordinate distances, each coordinate independent
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::int64_t> coord(-100, 100);
    for (int trial = 0; trial < 1000; ++trial) {
        OutcomeVector a(4), b(4);
        for (int k = 0; k < 4; ++k) {
            a[k] = coord(rng);
            b[k] = coord(rng);
        }
        double expected = 0.0;
        for (int k = 0; k < 4; ++k)
            expected = std::max(
                expected, distance({a[k]}, {b[k]}, DistanceSpec::chebyshev()));
        CHECK(distance(a, b, DistanceSpec::chebyshev()) == expected);
    }
}

TEST_CASE("coverage error of a front against itself is zero") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const auto points = random_points(rng, 12, 3);
        CHECK(coverage_error(points, points) == 0.0);
    }
}

TEST_CASE("coverage error never increases when the representation grows") {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 200; ++trial) {
        const auto reference = random_points(rng, 10, 3);
        auto representation = random_points(rng, 3, 3);
        const double before = coverage_error(representation, reference);
        representation.push_back(random_points(rng, 1, 3).front());
        const double after = coverage_error(representation, reference);
        CHECK(after <= before);
    }
}

TEST_CASE("coverage error hand value") {
    const std::vector<OutcomeVector> rep = {{0, 0}};
    const std::vector<OutcomeVector> ref = {{0, 0}, {3, 1}, {1, 5}};
    CHECK(coverage_error(rep, ref) == doctest::Approx(5.0));  // Chebyshev
    CHECK(coverage_error(rep, ref, DistanceSpec::manhattan()) ==
          doctest::Approx(6.0));
}

TEST_CASE("coverage error requires a nonempty representation") {
    CHECK_THROWS_AS(coverage_error({}, {{1, 2}}), std::invalid_argument);
}

TEST_CASE("uniformity level is the minimum pairwise distance") {
    const std::vector<OutcomeVector> rep = {{0, 0}, {10, 0}, {13, 2}};
    CHECK(uniformity_level(rep) == doctest::Approx(3.0));
    CHECK_THROWS_AS(uniformity_level({{1, 2}}), std::invalid_argument);
}

TEST_CASE("uniformity never decreases when a point is removed") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        auto rep = random_points(rng, 6, 3);
        const double before = uniformity_level(rep);
        rep.pop_back();
        CHECK(uniformity_level(rep) >= before);
    }
}

TEST_CASE("quality report bundles everything") {
    const std::vector<OutcomeVector> rep = {{0, 0}, {5, -3}};
    const std::vector<OutcomeVector> ref = {{0, 0}, {5, -3}, {2, -1}};
    const QualityReport report = quality_report(rep, &ref);
    CHECK(report.cardinality == 2);
    REQUIRE(report.coverage);
    CHECK(*report.coverage == doctest::Approx(2.0));
    REQUIRE(report.uniformity);
    CHECK(*report.uniformity == doctest::Approx(5.0));
    CHECK(report.coordinate_gaps == std::vector<std::int64_t>{5, 3});
}

TEST_CASE("quality report without a reference skips coverage") {
    const QualityReport report = quality_report({{1, 1}});
    CHECK(report.cardinality == 1);
    CHECK_FALSE(report.coverage);
    CHECK_FALSE(report.uniformity);
}
