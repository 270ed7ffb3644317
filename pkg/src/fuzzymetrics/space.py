"""Ambient metric spaces, points in them, and the lifted metric on space x [0,1].

Two desk-scale models are provided: Euclidean coordinates of any dimension and
a finite space given by an explicit distance matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .certificates import Certificate, Verdict
from .common import TOL, InputError

EUCLIDEAN = "euclidean"
FINITE = "finite"


@dataclass(frozen=True)
class Point:
    """An element of a metric space: coordinates (Euclidean mode) or an index
    into the distance matrix (finite mode)."""

    coords: tuple[float, ...] | None = None
    index: int | None = None

    def __post_init__(self) -> None:
        if (self.coords is None) == (self.index is None):
            raise InputError("point needs exactly one of coords or index")
        if self.coords is not None:
            coords = tuple(float(c) for c in self.coords)
            if any(not math.isfinite(c) for c in coords):
                raise InputError(f"non-finite coordinate in {coords}")
            object.__setattr__(self, "coords", coords)
        else:
            if self.index < 0:
                raise InputError(f"negative point index {self.index}")

    @staticmethod
    def euclidean(*coords: float) -> "Point":
        return Point(coords=tuple(coords))

    @staticmethod
    def finite(index: int) -> "Point":
        return Point(index=index)


@dataclass(frozen=True)
class LiftedPoint:
    """A point of space x [0,1]: a base point together with a level."""

    point: Point
    level: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.level <= 1.0:
            raise InputError(f"level {self.level} outside [0,1]")


@dataclass(frozen=True)
class MetricSpace:
    mode: str
    dim: int | None = None
    matrix: tuple[tuple[float, ...], ...] | None = None

    def __post_init__(self) -> None:
        if self.mode == EUCLIDEAN:
            if self.matrix is not None or self.dim is None or self.dim < 1:
                raise InputError("euclidean space needs dim >= 1 and no matrix")
        elif self.mode == FINITE:
            if self.dim is not None or self.matrix is None:
                raise InputError("finite space needs a matrix and no dim")
            rows = tuple(tuple(float(x) for x in row) for row in self.matrix)
            n = len(rows)
            if n == 0 or any(len(row) != n for row in rows):
                raise InputError("distance matrix must be square and nonempty")
            for row in rows:
                for x in row:
                    if not math.isfinite(x) or x < 0:
                        raise InputError(f"distance matrix entry {x} not a finite nonnegative real")
            object.__setattr__(self, "matrix", rows)
        else:
            raise InputError(f"unknown space mode {self.mode!r}")

    @staticmethod
    def euclidean(dim: int) -> "MetricSpace":
        return MetricSpace(mode=EUCLIDEAN, dim=dim)

    @staticmethod
    def finite(matrix: Sequence[Sequence[float]]) -> "MetricSpace":
        return MetricSpace(mode=FINITE, matrix=tuple(tuple(row) for row in matrix))

    @cached_property
    def matrix_array(self) -> np.ndarray:
        if self.mode != FINITE:
            raise InputError("matrix_array is only available in finite mode")
        return np.asarray(self.matrix, dtype=float)

    @property
    def size(self) -> int:
        return len(self.matrix) if self.mode == FINITE else 0

    def check_point(self, p: Point) -> None:
        if self.mode == EUCLIDEAN:
            if p.coords is None:
                raise InputError("euclidean space expects coordinate points")
            if len(p.coords) != self.dim:
                raise InputError(f"point has {len(p.coords)} coordinates, space has dim {self.dim}")
        else:
            if p.index is None:
                raise InputError("finite space expects index points")
            if p.index >= self.size:
                raise InputError(f"point index {p.index} outside 0..{self.size - 1}")

    def distance(self, p: Point, q: Point) -> float:
        self.check_point(p)
        self.check_point(q)
        if self.mode == EUCLIDEAN:
            return math.dist(p.coords, q.coords)
        return self.matrix[p.index][q.index]


def distance(space: MetricSpace, p: Point, q: Point) -> float:
    """Metric distance d(p, q) in the given space."""
    return space.distance(p, q)


def lifted_distance(space: MetricSpace, a: LiftedPoint, b: LiftedPoint) -> float:
    """Distance on space x [0,1]: d(x, y) + |level(a) - level(b)|."""
    return space.distance(a.point, b.point) + abs(a.level - b.level)


def dist_matrix(space: MetricSpace, a: Sequence[Point], b: Sequence[Point]) -> np.ndarray:
    """Pairwise distance matrix between two point lists of one space."""
    if space.mode == EUCLIDEAN:
        xa = np.asarray([p.coords for p in a], dtype=float)
        xb = np.asarray([p.coords for p in b], dtype=float)
        return np.linalg.norm(xa[:, None, :] - xb[None, :, :], axis=2)
    ia = np.asarray([p.index for p in a], dtype=int)
    ib = np.asarray([p.index for p in b], dtype=int)
    return space.matrix_array[np.ix_(ia, ib)]


def validate_metric(space: MetricSpace) -> Certificate:
    """Certify the metric axioms of a finite-mode distance matrix.

    Checks symmetry, zero diagonal and the triangle inequality exhaustively
    and reports the first violating pair or triple as witness. Euclidean
    spaces are valid by construction and are rejected as unsupported input.
    """
    if space.mode != FINITE:
        raise InputError("validate_metric supports finite mode only")
    m = space.matrix
    n = len(m)
    for i in range(n):
        if abs(m[i][i]) > TOL:
            return Certificate(
                kind="METRIC_AXIOMS",
                verdict=Verdict.FAIL,
                witness=f"nonzero diagonal at ({i},{i})",
                evidence={"violation": (m[i][i],)},
            )
    for i in range(n):
        for j in range(i + 1, n):
            if abs(m[i][j] - m[j][i]) > TOL:
                return Certificate(
                    kind="METRIC_AXIOMS",
                    verdict=Verdict.FAIL,
                    witness=f"asymmetry ({i},{j})",
                    evidence={"violation": (m[i][j], m[j][i])},
                )
    for i in range(n):
        for k in range(n):
            for j in range(n):
                if m[i][k] > m[i][j] + m[j][k] + TOL:
                    return Certificate(
                        kind="METRIC_AXIOMS",
                        verdict=Verdict.FAIL,
                        witness=f"triangle ({i},{k}) via {j}",
                        evidence={"violation": (m[i][k], m[i][j] + m[j][k])},
                    )
    return Certificate(kind="METRIC_AXIOMS", verdict=Verdict.PASS)
