"""Finite compact-set surrogates and the Hausdorff machinery on them.

FiniteSet is a nonempty deduplicated point list standing in for a nonempty
compact subset of the space. On such sets the Hausdorff metric, greedy
eps-nets, set-sequence tail diagnostics and the constructive Cauchy limit are
all exactly computable.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .certificates import Verdict, check_window, tail_verdict
from .common import TOL, InputError
from .space import EUCLIDEAN, MetricSpace, Point, dist_matrix

# Below this many distance evaluations plain Python beats array dispatch.
_SMALL = 64


@dataclass(frozen=True)
class FiniteSet:
    """Nonempty finite point set over one space, duplicates removed."""

    space: MetricSpace
    points: tuple[Point, ...]

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    @cached_property
    def coords_list(self) -> tuple[tuple[float, ...], ...]:
        return tuple(p.coords for p in self.points)

    @cached_property
    def array(self) -> np.ndarray:
        if self.space.mode == EUCLIDEAN:
            return np.asarray(self.coords_list, dtype=float)
        return np.asarray([p.index for p in self.points], dtype=int)

    def contains(self, x: Point, tol: float = TOL) -> bool:
        """Whether x coincides with a member point within tol."""
        return any(self.space.distance(x, p) <= tol for p in self.points)


def _as_point(space: MetricSpace, raw) -> Point:
    if isinstance(raw, Point):
        return raw
    if space.mode == EUCLIDEAN:
        if isinstance(raw, (int, float)):
            raw = (raw,)
        return Point(coords=tuple(float(c) for c in raw))
    try:
        return Point(index=operator.index(raw))
    except TypeError:
        raise InputError(f"finite-space points are integer indices, got {raw!r}") from None


def finite_set(space: MetricSpace, points: Iterable) -> FiniteSet:
    """Build a FiniteSet, validating points and deduplicating at tolerance.

    Points may be Point values, coordinate tuples (or bare numbers in
    dimension 1) for Euclidean spaces, or integer indices for finite spaces.
    Input order is preserved for the points that survive deduplication.
    """
    kept: list[Point] = []
    for raw in points:
        p = _as_point(space, raw)
        space.check_point(p)
        if not any(space.distance(p, q) <= TOL for q in kept):
            kept.append(p)
    if not kept:
        raise InputError("finite set must be nonempty")
    return FiniteSet(space=space, points=tuple(kept))


def _check_pair(a: FiniteSet, b: FiniteSet) -> None:
    if a.space != b.space:
        raise InputError("sets live in different spaces")
    if not a.points or not b.points:
        raise InputError("sets must be nonempty")


def _directed_small(a: FiniteSet, b: FiniteSet) -> float:
    space = a.space
    best = 0.0
    if space.mode == EUCLIDEAN:
        for pa in a.coords_list:
            d = min(math.dist(pa, pb) for pb in b.coords_list)
            if d > best:
                best = d
    else:
        m = space.matrix
        for pa in a.points:
            d = min(m[pa.index][pb.index] for pb in b.points)
            if d > best:
                best = d
    return best


def directed_hausdorff(a: FiniteSet, b: FiniteSet) -> float:
    """One-sided Hausdorff distance: max over a of the distance to b."""
    _check_pair(a, b)
    if len(a) * len(b) <= _SMALL:
        return _directed_small(a, b)
    d = dist_matrix(a.space, a.points, b.points)
    return float(d.min(axis=1).max())


def hausdorff(a: FiniteSet, b: FiniteSet) -> float:
    """Hausdorff distance: max of the two directed distances."""
    _check_pair(a, b)
    if len(a) * len(b) <= _SMALL:
        return max(_directed_small(a, b), _directed_small(b, a))
    d = dist_matrix(a.space, a.points, b.points)
    return float(max(d.min(axis=1).max(), d.min(axis=0).max()))


def eps_net(a: FiniteSet, eps: float) -> FiniteSet:
    """Greedy eps-net: scan in input order, keep each first uncovered point.

    The result is a subset of `a` and every point of `a` lies within eps of
    it. Greedy order is fixed by the input order, never by scheduling, so the
    net is deterministic.
    """
    if eps <= 0:
        raise InputError(f"eps must be positive, got {eps}")
    space = a.space
    centers: list[Point] = []
    for p in a.points:
        if all(space.distance(p, c) > eps for c in centers):
            centers.append(p)
    return FiniteSet(space=space, points=tuple(centers))


def covering_number(a: FiniteSet, eps: float) -> int:
    """Size of the greedy eps-net of `a`."""
    return len(eps_net(a, eps))


def union_family(family: Sequence[FiniteSet]) -> FiniteSet:
    """Deduplicated union of a nonempty family, first-occurrence order."""
    if not family:
        raise InputError("union of an empty family")
    space = family[0].space
    kept: list[Point] = []
    for s in family:
        if s.space != space:
            raise InputError("family members live in different spaces")
        for p in s.points:
            if not any(space.distance(p, q) <= TOL for q in kept):
                kept.append(p)
    return FiniteSet(space=space, points=tuple(kept))


@dataclass(frozen=True)
class KuratowskiDiagnostic:
    """Tail evidence for set convergence of a sequence prefix toward C.

    liminf_deficit[n] is the directed distance from C into C_n (how far C is
    from being reached by the sequence); limsup_excess[n] is the directed
    distance from C_n into C (how far the sequence sticks out of C). Both
    tails small certifies the two-sided sandwich on any common compact
    superset; the verdict is the windowed tail decision on their maximum.
    """

    liminf_deficit: tuple[float, ...]
    limsup_excess: tuple[float, ...]
    window: int
    tol: float
    verdict: Verdict


def kuratowski_tail_diagnostic(
    prefix: Sequence[FiniteSet],
    target: FiniteSet,
    window: int | None = None,
    tol: float = 1e-3,
) -> KuratowskiDiagnostic:
    if not prefix:
        raise InputError("empty sequence prefix")
    window = check_window(len(prefix), window)
    deficit = tuple(directed_hausdorff(target, c) for c in prefix)
    excess = tuple(directed_hausdorff(c, target) for c in prefix)
    _, m1 = tail_verdict(deficit, window, tol)
    _, m2 = tail_verdict(excess, window, tol)
    # one decision on the worst of the two tails
    verdict, _ = tail_verdict((max(m1, m2),), 1, tol)
    return KuratowskiDiagnostic(
        liminf_deficit=deficit,
        limsup_excess=excess,
        window=window,
        tol=tol,
        verdict=verdict,
    )


def cauchy_limit_construct(
    prefix: Sequence[FiniteSet],
) -> tuple[list[FiniteSet], FiniteSet, list[float]]:
    """Constructive limit of a set sequence via growing partial unions.

    Returns (partial_unions, limit, residuals) where partial_unions[n] is the
    union of the first n+1 sets, limit is the union of the whole prefix, and
    residuals[n] = H(partial_unions[n], limit). Residuals are nonincreasing
    and the last one is exactly zero.
    """
    if not prefix:
        raise InputError("empty sequence prefix")
    partial: list[FiniteSet] = []
    acc = prefix[0]
    partial.append(acc)
    for c in prefix[1:]:
        acc = union_family([acc, c])
        partial.append(acc)
    limit = partial[-1]
    residuals = [hausdorff(p, limit) for p in partial]
    return partial, limit, residuals
