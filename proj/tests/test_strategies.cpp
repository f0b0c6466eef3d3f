#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "epsfront/errors.hpp"
#include "epsfront/instance.hpp"
#include "epsfront/strategies.hpp"

using namespace epsfront;

namespace {

FrontBounds fixture_bounds() {
    FrontBounds b;
    b.ideal = {24, 49, 42};
    b.nadir = {-28, -28, -48};
    b.range = {52, 77, 90};
    return b;
}

}  // namespace

TEST_CASE("coverage adjuster replays the documented fixture loop") {
    const double gamma = 15.0;
    const std::int64_t ideal = 42, nadir = -48;
    DiscardSet d;

    // nadir solved first: probe the ideal next
    GpbaAResult r = gpba_a_adjust(gamma, -48.0, true, -14, ideal, nadir, d);
    CHECK(r.epsilon == 42.0);  // the ideal value
    CHECK(r.discard.values.count(-48) == 1);
    CHECK(r.discard.values.count(-14) == 1);
    CHECK(r.discard.values.count(-13) == 0);
    CHECK_FALSE(r.exited);

    // widest gap -14..42 bisected
    r = gpba_a_adjust(gamma, 42.0, true, 42, ideal, nadir, r.discard);
    CHECK(r.epsilon == 14.0);
    CHECK_FALSE(r.exited);

    // tie between [-14, 14] and [14, 42]: lowest pair wins
    r = gpba_a_adjust(gamma, 14.0, true, 14, ideal, nadir, r.discard);
    CHECK(r.epsilon == 0.0);
    CHECK_FALSE(r.exited);

    r = gpba_a_adjust(gamma, 0.0, true, 1, ideal, nadir, r.discard);
    CHECK(r.epsilon == 28.0);
    CHECK_FALSE(r.exited);

    // widest remaining gap is 14 <= gamma: the loop closes
    r = gpba_a_adjust(gamma, 28.0, true, 29, ideal, nadir, r.discard);
    CHECK(r.exited);
    CHECK(r.final_max_gap == 14);
    CHECK(r.coverage_gap == 13);
    CHECK(r.discard.values.empty());
}

TEST_CASE("coverage adjuster discards up to the ideal on infeasibility") {
    DiscardSet d;
    d.values = {-10, 0};
    const GpbaAResult r = gpba_a_adjust(3.0, 5.0, false, 0, 10, -10, d);
    CHECK(r.discard.values.count(5) == 1);
    CHECK(r.discard.values.count(10) == 1);
    CHECK(r.discard.values.count(4) == 0);
}

TEST_CASE("coverage adjuster treats gamma below one as one") {
    // integer grid fully covered: unit gaps must close the loop even if
    // gamma is 0.5
    DiscardSet d;
    d.values = {0, 1, 2};
    const GpbaAResult r = gpba_a_adjust(0.5, 1.0, true, 2, 2, 0, d);
    CHECK(r.exited);
    CHECK(r.final_max_gap == 1);
}

TEST_CASE("uniformity adjuster steps delta above the outcome") {
    CHECK(gpba_b_adjust(10.0, -14) == -4.0);
    CHECK(gpba_b_adjust(10.0, 33) == 43.0);
    CHECK(gpba_b_adjust(1.0, 5) == 6.0);
    CHECK_THROWS_AS(gpba_b_adjust(0.0, 5), std::invalid_argument);
}

TEST_CASE("cardinality adjuster replays the documented fixture loop") {
    // inner loop of the fixture with c = 5
    GridState g = initial_grid(-48, 5);
    CHECK(g.z_start == -48);
    CHECK(g.remaining == 4);
    CHECK(g.position == 0);

    // slack 34 skips one 22.5-step: grid refined from the outcome onwards
    GpbaCResult r = gpba_c_adjust(g, 42, -48, -14, 34.0);
    CHECK(r.step == doctest::Approx(14.0));
    CHECK(r.epsilon == doctest::Approx(0.0));
    CHECK(r.state.z_start == -14);
    CHECK(r.state.position == 1);
    CHECK_FALSE(r.exited);

    r = gpba_c_adjust(r.state, 42, -48, 1, 1.0);
    CHECK(r.epsilon == doctest::Approx(14.0));
    r = gpba_c_adjust(r.state, 42, -48, 14, 0.0);
    CHECK(r.epsilon == doctest::Approx(28.0));
    r = gpba_c_adjust(r.state, 42, -48, 29, 1.0);
    CHECK(r.epsilon == doctest::Approx(42.0));

    // epsilon 56 exceeds the ideal: loop exits, grid restored for the next pass
    r = gpba_c_adjust(r.state, 42, -48, 42, 0.0);
    CHECK(r.exited);
    CHECK(r.state.z_start == -48);
    CHECK(r.state.remaining == 5);
    CHECK(r.state.position == 0);
}

TEST_CASE("cardinality adjuster outer-loop refinement of the fixture") {
    // outer loop advanced with the slice worst value 6 standing in for z
    GridState g = initial_grid(-28, 5);
    const GpbaCResult r = gpba_c_adjust(g, 49, -28, 6, 34.0);
    CHECK(r.step == doctest::Approx(10.75));
    CHECK(r.epsilon == doctest::Approx(16.75));
}

TEST_CASE("cardinality step never drops below one") {
    GridState g = initial_grid(0, 50);  // range 3 but 49 grid cells
    const GpbaCResult r = gpba_c_adjust(g, 3, 0, 0, 0.0);
    CHECK(r.step == doctest::Approx(1.0));
}

TEST_CASE("targets from cardinality split the range evenly") {
    const QualityTargets t = targets_from_cardinality(fixture_bounds(), 0, {5, 5});
    REQUIRE(t.gamma.size() == 2);
    CHECK(t.gamma[0] == doctest::Approx(77.0 / 5.0));
    CHECK(t.gamma[1] == doctest::Approx(90.0 / 5.0));
    CHECK(t.delta[0] == doctest::Approx(77.0 / 5.0));
    CHECK(t.cardinality == std::vector<std::int64_t>{5, 5});
}

TEST_CASE("targets from cardinality validate inputs") {
    CHECK_THROWS_AS(targets_from_cardinality(fixture_bounds(), 0, {5}),
                    std::invalid_argument);
    CHECK_THROWS_AS(targets_from_cardinality(fixture_bounds(), 0, {0, 5}),
                    std::invalid_argument);
}

TEST_CASE("full-front presets") {
    const FrontBounds b = fixture_bounds();
    const QualityTargets a = full_front_params(StrategyKind::GpbaA, b, 0);
    CHECK(a.gamma == std::vector<double>{1.0, 1.0});
    const QualityTargets u = full_front_params(StrategyKind::GpbaB, b, 0);
    CHECK(u.delta == std::vector<double>{1.0, 1.0});
    const QualityTargets c = full_front_params(StrategyKind::GpbaC, b, 0);
    CHECK(c.cardinality == std::vector<std::int64_t>{77, 90});
}

TEST_CASE("adjusters are pure") {
    DiscardSet d;
    d.values = {-48, -14};
    const GpbaAResult r1 = gpba_a_adjust(15.0, 42.0, true, 42, 42, -48, d);
    const GpbaAResult r2 = gpba_a_adjust(15.0, 42.0, true, 42, 42, -48, d);
    CHECK(r1.epsilon == r2.epsilon);
    CHECK(r1.discard.values == r2.discard.values);

    const GridState g = initial_grid(-48, 5);
    const GpbaCResult c1 = gpba_c_adjust(g, 42, -48, -14, 34.0);
    const GpbaCResult c2 = gpba_c_adjust(g, 42, -48, -14, 34.0);
    CHECK(c1.epsilon == c2.epsilon);
    CHECK(c1.state.z_start == c2.state.z_start);
}
