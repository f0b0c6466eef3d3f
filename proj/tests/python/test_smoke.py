import os
import sys

module_dir = os.environ.get("EPSFRONT_MODULE_DIR")
if module_dir:
    sys.path.insert(0, module_dir)

try:
    import _core as ep
except ImportError:
    import epsfront as ep


def test_fixture_bounds():
    problem = ep.illustrative_fixture()
    bounds = ep.compute_bounds(problem)
    assert bounds.feasible
    assert bounds.ideal == [24, 49, 42]
    assert bounds.nadir == [-28, -28, -48]
    assert bounds.range == [52, 77, 90]


def test_generate_deterministic():
    kwargs = dict(
        num_objectives=3,
        num_vars=10,
        num_constraints=1,
        kind="binary",
        coeff_lo=1,
        coeff_hi=100,
        objective_seeds=[128, 888, 6],
        constraint_seeds=[40],
    )
    a = ep.generate(**kwargs)
    b = ep.generate(**kwargs)
    assert a.objective_coeffs == b.objective_coeffs
    assert a.constraint_coeffs == b.constraint_coeffs
    assert a.rhs == b.rhs


def test_solve_front_matches_oracle():
    problem = ep.generate(
        num_objectives=3,
        num_vars=8,
        num_constraints=1,
        kind="binary",
        coeff_lo=1,
        coeff_hi=100,
        objective_seeds=[128, 888, 6],
        constraint_seeds=[40],
    )
    points, stats = ep.solve_front(problem, "gpba-b")
    oracle = ep.brute_force_front(problem)
    assert points == oracle
    assert stats["subproblems_solved"] > 0


def test_represent_and_quality():
    problem = ep.illustrative_fixture()
    points, _ = ep.represent(problem, "gpba-b", delta=[10.0, 10.0])
    assert [24, 9, -14] in points
    report = ep.quality_report(points)
    assert report["cardinality"] == len(points)
    assert report["uniformity_level"] is not None


def test_instance_round_trip(tmp_path):
    problem = ep.illustrative_fixture()
    path = str(tmp_path / "fixture.txt")
    ep.save_instance(problem, path)
    loaded = ep.load_instance(path)
    assert loaded.objective_coeffs == problem.objective_coeffs
    assert loaded.rhs == problem.rhs


def test_pareto_filter():
    points = [[1, 2], [2, 1], [0, 0], [2, 1]]
    assert ep.pareto_filter(points) == [[2, 1], [1, 2]]
