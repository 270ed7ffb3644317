"""Deterministic generators for parametrized families and sequences.

Every generator is seeded (where randomness is involved) and tags the family
it produces, so trend-based certificates can reason about the member order.
All generators target Euclidean spaces.
"""

from __future__ import annotations

import numpy as np

from .common import InputError
from .families import FuzzyFamily, GeneratorTag, fuzzy_family
from .fuzzy import StepFuzzySet, crisp, make_fuzzy, support
from .sets import finite_set
from .space import EUCLIDEAN, MetricSpace

GENERATOR_KINDS = ("translates", "collapse", "crisp_intervals", "random")


def _require_euclidean(space: MetricSpace) -> None:
    if space.mode != EUCLIDEAN:
        raise InputError("generators support euclidean spaces only")


def _axis_point(space: MetricSpace, x: float) -> tuple[float, ...]:
    return (x,) + (0.0,) * (space.dim - 1)


def translates_family(
    space: MetricSpace, count: int, start: float = 1.0, step: float = 1.0
) -> FuzzyFamily:
    """Crisp singletons marching along the first axis: start, start+step, ..."""
    _require_euclidean(space)
    if count < 1:
        raise InputError("count must be >= 1")
    offsets = [start + k * step for k in range(count)]
    members = [crisp(space, [_axis_point(space, x)]) for x in offsets]
    names = [f"t[{k + 1}]" for k in range(count)]
    return fuzzy_family(members, names, GeneratorTag("translates", tuple(offsets)))


def collapse_family(
    space: MetricSpace, count: int, base: float = 0.0, far: float = 1.0
) -> FuzzyFamily:
    """Members whose far point survives only up to level 1/n.

    Member n holds the base point at membership 1 and the far point at
    membership 1/n (for n = 1 the two levels coincide and the member is the
    crisp pair). Cuts at every positive level stay inside {base, far}, but
    the supports refuse to settle: the 0-cut distance to the crisp base
    singleton is constantly |far - base|.
    """
    _require_euclidean(space)
    if count < 1:
        raise InputError("count must be >= 1")
    p_base = _axis_point(space, base)
    p_far = _axis_point(space, far)
    members = []
    for n in range(1, count + 1):
        if n == 1:
            members.append(crisp(space, [p_base, p_far]))
        else:
            members.append(
                make_fuzzy(
                    [
                        (1.0, finite_set(space, [p_base])),
                        (1.0 / n, finite_set(space, [p_base, p_far])),
                    ]
                )
            )
    names = [f"c[{n}]" for n in range(1, count + 1)]
    params = tuple(1.0 / n for n in range(1, count + 1))
    return fuzzy_family(members, names, GeneratorTag("collapse", params))


def crisp_interval(space: MetricSpace, low: float, high: float, step: float = 0.01) -> StepFuzzySet:
    """Crisp set sampling the interval [low, high] on the first axis at the
    given step (endpoint included)."""
    _require_euclidean(space)
    if high < low or step <= 0:
        raise InputError("need low <= high and step > 0")
    n = int(round((high - low) / step))
    xs = [low + k * step for k in range(n + 1)]
    if xs[-1] < high - 1e-12:
        xs.append(high)
    return crisp(space, [_axis_point(space, x) for x in xs])


def crisp_interval_family(
    space: MetricSpace, low: float = 0.3, high: float = 1.0, step: float = 0.01
) -> FuzzyFamily:
    """Discretized intervals [0, x] for x on the grid (low, high] at `step`."""
    _require_euclidean(space)
    if not (0.0 <= low < high) or step <= 0:
        raise InputError("need 0 <= low < high and step > 0")
    count = int(round((high - low) / step))
    xs = [low + k * step for k in range(1, count + 1)]
    members = [crisp_interval(space, 0.0, x, step) for x in xs]
    names = [f"iv[{x:.4g}]" for x in xs]
    return fuzzy_family(members, names, GeneratorTag("crisp_intervals", tuple(xs)))


def random_fuzzy(
    space: MetricSpace,
    rng: np.random.Generator,
    box: tuple[float, float] = (0.0, 1.0),
    max_levels: int = 4,
    max_points: int = 6,
) -> StepFuzzySet:
    """One random step fuzzy set with cuts inside the box.

    Levels below 1.0 are drawn in (0.05, 0.95) with pairwise gaps of at least
    0.02; a level may add no new points, which keeps non-platform stored
    levels in the mix.
    """
    _require_euclidean(space)
    lo, hi = box
    n_levels = int(rng.integers(1, max_levels + 1))
    alphas = [1.0]
    for _ in range(1000):
        if len(alphas) == n_levels:
            break
        a = float(rng.uniform(0.05, 0.95))
        if all(abs(a - b) >= 0.02 for b in alphas):
            alphas.append(a)
    alphas = [1.0] + sorted(alphas[1:], reverse=True)
    levels = []
    pts: list[tuple[float, ...]] = []
    for i, a in enumerate(alphas):
        cap = min(2, max_points - len(pts))
        n_new = int(rng.integers(1 if i == 0 else 0, cap + 1)) if cap > 0 else 0
        for _ in range(n_new):
            pts.append(tuple(float(rng.uniform(lo, hi)) for _ in range(space.dim)))
        levels.append((a, finite_set(space, list(pts))))
    return make_fuzzy(levels)


def random_family(
    space: MetricSpace,
    count: int,
    seed: int = 0,
    box: tuple[float, float] = (0.0, 1.0),
    max_levels: int = 4,
    max_points: int = 6,
) -> FuzzyFamily:
    """Seeded family of random step fuzzy sets inside the box."""
    _require_euclidean(space)
    if count < 1:
        raise InputError("count must be >= 1")
    rng = np.random.default_rng(seed)
    members = [random_fuzzy(space, rng, box, max_levels, max_points) for _ in range(count)]
    names = [f"r[{k + 1}]" for k in range(count)]
    params = tuple(float(k + 1) for k in range(count))
    return fuzzy_family(members, names, GeneratorTag("random", params))


def contracting_sequence(limit: StepFuzzySet, count: int, scale: float = 0.02) -> list[StepFuzzySet]:
    """Sequence converging to `limit`: member n contracts every cut point
    toward the support centroid by a factor scale/n, keeping the level
    structure. Every point moves by at most (scale/n) * diameter, so all
    levelwise, endograph and sendograph distances to the limit are bounded
    by that amount."""
    _require_euclidean(limit.space)
    if count < 1:
        raise InputError("count must be >= 1")
    space = limit.space
    supp = support(limit)
    center = np.asarray([p.coords for p in supp.points], dtype=float).mean(axis=0)
    out = []
    for n in range(1, count + 1):
        t = scale / n
        levels = []
        for a, cut in limit.levels:
            moved = [
                tuple(float(c + t * (m - c)) for c, m in zip(p.coords, center))
                for p in cut.points
            ]
            levels.append((a, finite_set(space, moved)))
        out.append(make_fuzzy(levels))
    return out
