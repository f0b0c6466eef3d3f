"""Pareto front representation toolkit for multi-objective integer linear programs."""

from ._core import (
    FrontBounds,
    Problem,
    brute_force_front,
    compute_bounds,
    generate,
    illustrative_fixture,
    load_instance,
    pareto_filter,
    quality_report,
    represent,
    save_instance,
    solve_front,
)

__all__ = [
    "FrontBounds",
    "Problem",
    "brute_force_front",
    "compute_bounds",
    "generate",
    "illustrative_fixture",
    "load_instance",
    "pareto_filter",
    "quality_report",
    "represent",
    "save_instance",
    "solve_front",
]
