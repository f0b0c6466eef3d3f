#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "epsfront/errors.hpp"
#include "epsfront/instance.hpp"
#include "epsfront/scalarization.hpp"

using namespace epsfront;

namespace {

// Independent oracle: 16807^n mod (2^31 - 1) by modular exponentiation.
std::int64_t lehmer_nth(std::int64_t seed, std::int64_t n) {
    constexpr std::int64_t mod = 2147483647;
    __int128 result = seed % mod;
    __int128 base = 16807;
    while (n > 0) {
        if (n & 1) result = result * base % mod;
        base = base * base % mod;
        n >>= 1;
    }
    return static_cast<std::int64_t>(result);
}

GeneratorSpec knapsack_spec() {
    GeneratorSpec spec;
    spec.num_objectives = 3;
    spec.num_vars = 10;
    spec.num_constraints = 1;
    spec.var_kind = VarKind::Binary;
    spec.coeff_lo = 1;
    spec.coeff_hi = 100;
    spec.objective_seeds = {128, 888, 6};
    spec.constraint_seeds = {40};
    return spec;
}

}  // namespace

TEST_CASE("first raw value from seed 1") {
    LehmerStream stream(1);
    CHECK(stream.next_raw() == 16807);
}

TEST_CASE("ten-thousandth raw value matches the modular-exponentiation oracle") {
    LehmerStream stream(1);
    std::int64_t value = 0;
    for (int i = 0; i < 10000; ++i) value = stream.next_raw();
    CHECK(lehmer_nth(1, 10000) == 1043618065);
    CHECK(value == 1043618065);
}

TEST_CASE("stream matches the oracle at every checkpoint") {
    LehmerStream stream(12345);
    for (int i = 1; i <= 500; ++i) {
        const std::int64_t value = stream.next_raw();
        if (i % 100 == 0) CHECK(value == lehmer_nth(12345, i));
    }
}

TEST_CASE("seed validation") {
    CHECK_THROWS_AS(LehmerStream(0), std::invalid_argument);
    CHECK_THROWS_AS(LehmerStream(-5), std::invalid_argument);
    CHECK_THROWS_AS(LehmerStream(2147483647), std::invalid_argument);
    CHECK_NOTHROW(LehmerStream(2147483646));
}

TEST_CASE("mapped draws stay inside the range and fill it uniformly") {
    LehmerStream stream(777);
    std::vector<int> counts(100, 0);
    const int samples = 100000;
    for (int i = 0; i < samples; ++i) {
        const std::int64_t v = stream.next_in(1, 100);
        REQUIRE(v >= 1);
        REQUIRE(v <= 100);
        ++counts[v - 1];
    }
    // each bin expects 1000 draws; 5 sigma of a binomial is about 157
    const double expected = samples / 100.0;
    const double tolerance = 5.0 * std::sqrt(expected * (1.0 - 0.01));
    for (int c : counts) CHECK(std::abs(c - expected) <= tolerance);
}

TEST_CASE("distinct seeds diverge within a few draws") {
    LehmerStream a(128), b(888);
    bool diverged = false;
    for (int i = 0; i < 3; ++i)
        if (a.next_in(1, 100) != b.next_in(1, 100)) diverged = true;
    CHECK(diverged);
}

TEST_CASE("generation is deterministic") {
    const MoilpProblem a = generate(knapsack_spec());
    const MoilpProblem b = generate(knapsack_spec());
    CHECK(a.objective_coeffs == b.objective_coeffs);
    CHECK(a.constraint_coeffs == b.constraint_coeffs);
    CHECK(a.rhs == b.rhs);
}

TEST_CASE("rhs is half the coefficient sum") {
    const MoilpProblem p = generate(knapsack_spec());
    for (int i = 0; i < p.num_constraints; ++i) {
        const std::int64_t sum = std::accumulate(p.constraint_coeffs[i].begin(),
                                                 p.constraint_coeffs[i].end(),
                                                 std::int64_t{0});
        CHECK(2 * p.rhs[i] <= sum);
        CHECK(sum < 2 * (p.rhs[i] + 1));
    }
}

TEST_CASE("degenerate range forces the rhs") {
    GeneratorSpec spec = knapsack_spec();
    spec.num_vars = 1;
    spec.coeff_lo = 5;
    spec.coeff_hi = 5;
    const MoilpProblem p = generate(spec);
    CHECK(p.constraint_coeffs[0] == std::vector<std::int64_t>{5});
    CHECK(p.rhs[0] == 2);
}

TEST_CASE("instance index shifts every seed") {
    GeneratorSpec spec = knapsack_spec();
    spec.instance_index = 1;
    const MoilpProblem shifted = generate(spec);
    const MoilpProblem base = generate(knapsack_spec());
    CHECK(shifted.objective_coeffs != base.objective_coeffs);

    // index 1 with increment 5 equals base seeds + 5
    GeneratorSpec manual = knapsack_spec();
    for (auto& s : manual.objective_seeds) s += 5;
    for (auto& s : manual.constraint_seeds) s += 5;
    CHECK(generate(manual).objective_coeffs == shifted.objective_coeffs);
}

TEST_CASE("binary and integer kinds differ only in bounds") {
    GeneratorSpec spec = knapsack_spec();
    const MoilpProblem bin = generate(spec);
    spec.var_kind = VarKind::Integer;
    const MoilpProblem gen = generate(spec);
    CHECK(bin.objective_coeffs == gen.objective_coeffs);
    for (const auto& ub : bin.var_upper) CHECK(ub == 1);
    for (const auto& ub : gen.var_upper) CHECK_FALSE(ub.has_value());
}

TEST_CASE("spec validation") {
    GeneratorSpec spec = knapsack_spec();
    spec.objective_seeds.pop_back();
    CHECK_THROWS_AS(generate(spec), std::invalid_argument);
    spec = knapsack_spec();
    spec.coeff_lo = 10;
    spec.coeff_hi = 1;
    CHECK_THROWS_AS(generate(spec), std::invalid_argument);
}

TEST_CASE("fixture matches its documented shape") {
    const MoilpProblem p = illustrative_fixture();
    CHECK(p.num_vars == 7);
    CHECK(p.num_objectives == 3);
    CHECK(p.num_constraints == 7);
    CHECK(p.rhs == std::vector<std::int64_t>{61, 72, 76, 51, 66, 59, 77});
    SimplexBackend backend;
    CHECK(ideal_point(p, backend) == OutcomeVector{24, 49, 42});
    CHECK(nadir_approx(p, backend) == OutcomeVector{-28, -28, -48});
}

TEST_CASE("fixture front contains all traced outcomes") {
    BruteForceOptions opts;
    opts.max_box_volume = 1e9;  // fixture box holds about 2.1e8 points
    const auto front = brute_force_front(illustrative_fixture(), opts);
    const std::vector<OutcomeVector> traced = {
        {24, 9, -14}, {0, 20, 42}, {14, 13, 14}, {22, 6, 1}, {8, 13, 29},
        {24, 5, -3},  {18, 8, 9},  {12, 11, 21}, {6, 14, 33}};
    for (const auto& z : traced)
        CHECK(std::find(front.begin(), front.end(), z) != front.end());
}

TEST_CASE("instance file round-trip") {
    const MoilpProblem p = illustrative_fixture();
    std::stringstream buffer;
    write_instance(p, buffer);
    const MoilpProblem q = read_instance(buffer);
    CHECK(q.objective_coeffs == p.objective_coeffs);
    CHECK(q.constraint_coeffs == p.constraint_coeffs);
    CHECK(q.rhs == p.rhs);
    CHECK(q.var_lower == p.var_lower);
    CHECK(q.var_upper == p.var_upper);
    CHECK(q.name == p.name);
}

TEST_CASE("round-trip preserves explicit upper bounds") {
    MoilpProblem p = generate(knapsack_spec());
    std::stringstream buffer;
    write_instance(p, buffer);
    const MoilpProblem q = read_instance(buffer);
    CHECK(q.var_upper == p.var_upper);
}

TEST_CASE("truncated file names the missing section") {
    std::stringstream buffer;
    write_instance(illustrative_fixture(), buffer);
    std::string text = buffer.str();
    text = text.substr(0, text.find("rhs"));
    std::stringstream cut(text);
    try {
        read_instance(cut);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("rhs") != std::string::npos);
    }
}

TEST_CASE("bad magic is rejected") {
    std::stringstream bad("something-else v1\n");
    CHECK_THROWS_AS(read_instance(bad), ParseError);
}

TEST_CASE("wrong value count reports the line") {
    std::stringstream bad(
        "epsfront-instance v1\nvars 2\nobjectives 2\nconstraints 1\n"
        "objective_matrix\n1 2\n3\n");
    try {
        read_instance(bad);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 7") != std::string::npos);
    }
}

TEST_CASE("front CSV round-trip") {
    const std::vector<OutcomeVector> points = {{24, 9, -14}, {0, 20, 42}};
    const std::string path = "test_front_round_trip.csv";
    write_front_csv(points, path, "gpba-b");
    CHECK(read_front_csv(path) == points);
    std::remove(path.c_str());
}
