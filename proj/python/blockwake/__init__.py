"""Overlapping block coordinate descent with search-structure indicators."""

from ._core import (
    BlockwakeError,
    brute_force,
    expand_cycle,
    expand_plan,
    indicators,
    parse_structure_name,
    pearson,
    random_orderings,
    recombination_schedule,
    reference_structure_names,
    render_structure_name,
    run_search,
    sign_test,
)

__all__ = [
    "BlockwakeError",
    "brute_force",
    "expand_cycle",
    "expand_plan",
    "indicators",
    "parse_structure_name",
    "pearson",
    "random_orderings",
    "recombination_schedule",
    "reference_structure_names",
    "render_structure_name",
    "run_search",
    "sign_test",
]
