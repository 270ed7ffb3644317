"""Shared spaces and seeded corpus builders for the test suite."""

from __future__ import annotations

import numpy as np

from fuzzymetrics import MetricSpace, StepFuzzySet, crisp, finite_set, make_fuzzy
from fuzzymetrics.generators import random_fuzzy

SP1 = MetricSpace.euclidean(1)
SP2 = MetricSpace.euclidean(2)


def singleton(x: float, space: MetricSpace = SP1) -> StepFuzzySet:
    """Crisp singleton at x on the first axis."""
    return crisp(space, [(float(x),) + (0.0,) * (space.dim - 1)])


def two_level() -> StepFuzzySet:
    """The running two-level example: membership 1 at 0 and 0.5 at 1."""
    return make_fuzzy(
        [(1.0, finite_set(SP1, [0.0])), (0.5, finite_set(SP1, [0.0, 1.0]))]
    )


def fuzzy_corpus(
    count: int,
    seed: int,
    space: MetricSpace = SP1,
    box: tuple[float, float] = (0.0, 2.0),
    max_levels: int = 4,
    max_points: int = 5,
) -> list[StepFuzzySet]:
    rng = np.random.default_rng(seed)
    return [
        random_fuzzy(space, rng, box=box, max_levels=max_levels, max_points=max_points)
        for _ in range(count)
    ]
