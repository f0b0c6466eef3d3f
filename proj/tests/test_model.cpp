#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "epsfront/errors.hpp"
#include "epsfront/model.hpp"

using namespace epsfront;

namespace {

MoilpProblem tiny_knapsack() {
    // 3 binary items, capacity for two of them
    MoilpProblem p;
    p.num_vars = 3;
    p.num_objectives = 2;
    p.num_constraints = 1;
    p.objective_coeffs = {{3, 1, 2}, {1, 3, 2}};
    p.constraint_coeffs = {{2, 2, 2}};
    p.rhs = {4};
    p.var_lower = {0, 0, 0};
    p.var_upper = {1, 1, 1};
    p.validate();
    return p;
}

MoilpProblem conflict_chain() {
    // single variable x in [0, 3], objectives x and -x
    MoilpProblem p;
    p.num_vars = 1;
    p.num_objectives = 2;
    p.num_constraints = 1;
    p.objective_coeffs = {{1}, {-1}};
    p.constraint_coeffs = {{1}};
    p.rhs = {3};
    p.var_lower = {0};
    p.var_upper = {3};
    p.validate();
    return p;
}

}  // namespace

TEST_CASE("evaluate computes C*x") {
    const MoilpProblem p = tiny_knapsack();
    CHECK(evaluate(p, {1, 0, 1}) == OutcomeVector{5, 3});
    CHECK(evaluate(p, {0, 0, 0}) == OutcomeVector{0, 0});
}

TEST_CASE("is_feasible honors constraints and bounds") {
    const MoilpProblem p = tiny_knapsack();
    CHECK(is_feasible(p, {1, 1, 0}));
    CHECK_FALSE(is_feasible(p, {1, 1, 1}));  // weight 6 > 4
    CHECK_FALSE(is_feasible(p, {2, 0, 0}));  // above upper bound
    CHECK_FALSE(is_feasible(p, {-1, 0, 0}));
}

TEST_CASE("dominance cases") {
    CHECK(dominates({2, 2}, {1, 1}) == Dominance::Strict);
    CHECK(dominates({2, 1}, {1, 1}) == Dominance::Weak);
    CHECK(dominates({1, 1}, {1, 1}) == Dominance::None);
    CHECK(dominates({2, 0}, {1, 1}) == Dominance::None);
    CHECK(dominates({1, 1}, {2, 2}) == Dominance::None);
}

TEST_CASE("pareto_filter removes dominated points and duplicates") {
    const auto front = pareto_filter({{1, 2}, {2, 1}, {0, 0}, {2, 1}, {1, 1}});
    CHECK(front == std::vector<OutcomeVector>{{2, 1}, {1, 2}});
}

TEST_CASE("pareto_filter keeps incomparable points sorted descending") {
    const auto front = pareto_filter({{0, 3}, {3, 0}, {1, 2}, {2, 1}});
    CHECK(front == std::vector<OutcomeVector>{{3, 0}, {2, 1}, {1, 2}, {0, 3}});
}

TEST_CASE("pareto_filter drops weakly dominated points") {
    const auto front = pareto_filter({{2, 1}, {2, 2}});
    CHECK(front == std::vector<OutcomeVector>{{2, 2}});
}

TEST_CASE("derive_upper_bounds uses explicit bounds first") {
    const MoilpProblem p = tiny_knapsack();
    CHECK(derive_upper_bounds(p) == std::vector<std::int64_t>{1, 1, 1});
}

TEST_CASE("derive_upper_bounds infers from positive constraint coefficients") {
    MoilpProblem p;
    p.num_vars = 2;
    p.num_objectives = 2;
    p.num_constraints = 2;
    p.objective_coeffs = {{1, 0}, {0, 1}};
    p.constraint_coeffs = {{3, 1}, {1, 4}};
    p.rhs = {10, 9};
    p.var_lower = {0, 0};
    p.var_upper = {std::nullopt, std::nullopt};
    // x1: min(10/3, 9/1) = 3; x2: min(10/1, 9/4) = 2
    CHECK(derive_upper_bounds(p) == std::vector<std::int64_t>{3, 2});
}

TEST_CASE("derive_upper_bounds rejects an unbounded box") {
    MoilpProblem p;
    p.num_vars = 1;
    p.num_objectives = 2;
    p.num_constraints = 1;
    p.objective_coeffs = {{1}, {-1}};
    p.constraint_coeffs = {{-1}};  // no positive coefficient anywhere
    p.rhs = {0};
    p.var_lower = {0};
    p.var_upper = {std::nullopt};
    CHECK_THROWS_AS(derive_upper_bounds(p), UnboundedBoxError);
}

TEST_CASE("brute_force_front on a hand-enumerable knapsack") {
    // feasible subsets have at most two items; front by enumeration of all 8
    const auto front = brute_force_front(tiny_knapsack());
    CHECK(front == std::vector<OutcomeVector>{{5, 3}, {4, 4}, {3, 5}});
}

TEST_CASE("brute_force_front keeps the whole chain of incomparable points") {
    const auto front = brute_force_front(conflict_chain());
    CHECK(front ==
          std::vector<OutcomeVector>{{3, -3}, {2, -2}, {1, -1}, {0, 0}});
}

TEST_CASE("brute_force_front enforces the volume budget") {
    MoilpProblem p;
    p.num_vars = 2;
    p.num_objectives = 2;
    p.num_constraints = 1;
    p.objective_coeffs = {{1, 0}, {0, 1}};
    p.constraint_coeffs = {{1, 1}};
    p.rhs = {2000};
    p.var_lower = {0, 0};
    p.var_upper = {2000, 2000};
    BruteForceOptions opts;
    opts.max_box_volume = 1e3;  // box holds 2001^2 points
    CHECK_THROWS_AS(brute_force_front(p, opts), BudgetExceededError);
}

TEST_CASE("validate rejects inconsistent dimensions") {
    MoilpProblem p = tiny_knapsack();
    p.rhs.push_back(7);
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}
