"""Value types for finite subsets of the line and the distortion functional."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .exceptions import CoverageViolation, EmptySet, InvalidCoordinate

ATOL = 1e-9


class PointSet1D:
    """A nonempty, strictly increasing, finite sequence of reals.

    Instances are immutable; the backing array is read-only.
    """

    __slots__ = ("_values",)

    def __init__(self, values: Iterable[float]):
        arr = np.array(list(values) if not isinstance(values, np.ndarray) else values,
                       dtype=float).ravel()
        if arr.size == 0:
            raise EmptySet("a point set needs at least one point")
        if not np.all(np.isfinite(arr)):
            raise InvalidCoordinate("coordinates must be finite")
        if arr.size > 1 and not np.all(np.diff(arr) > 0):
            raise InvalidCoordinate("values must be strictly increasing; use make_point_set")
        arr.setflags(write=False)
        self._values = arr

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def min(self) -> float:
        return float(self._values[0])

    @property
    def max(self) -> float:
        return float(self._values[-1])

    @property
    def diameter(self) -> float:
        return float(self._values[-1] - self._values[0])

    def __len__(self) -> int:
        return self._values.size

    def __getitem__(self, i):
        return float(self._values[i])

    def __iter__(self):
        return (float(v) for v in self._values)

    def __eq__(self, other):
        if not isinstance(other, PointSet1D):
            return NotImplemented
        return np.array_equal(self._values, other._values)

    def __hash__(self):
        return hash(self._values.tobytes())

    def __repr__(self):
        return f"PointSet1D({self._values.tolist()!r})"

    def tolist(self) -> list[float]:
        return self._values.tolist()


def make_point_set(values: Iterable[float]) -> PointSet1D:
    """Sort and deduplicate ``values`` into a :class:`PointSet1D`."""
    if isinstance(values, PointSet1D):
        return values
    arr = np.asarray(list(values) if not isinstance(values, np.ndarray) else values,
                     dtype=float).ravel()
    if arr.size == 0:
        raise EmptySet("a point set needs at least one point")
    if not np.all(np.isfinite(arr)):
        raise InvalidCoordinate("coordinates must be finite")
    return PointSet1D(np.unique(arr))


@dataclass(frozen=True)
class Isometry1D:
    """The map ``t -> sigma * t + delta`` with ``sigma`` in {+1, -1}."""

    sigma: int = 1
    delta: float = 0.0

    def __post_init__(self):
        if self.sigma not in (1, -1):
            raise ValueError(f"sigma must be +1 or -1, got {self.sigma!r}")
        object.__setattr__(self, "delta", float(self.delta))

    @classmethod
    def identity(cls) -> Isometry1D:
        return cls(1, 0.0)

    @classmethod
    def translation(cls, delta: float) -> Isometry1D:
        return cls(1, delta)

    @classmethod
    def reflection_about(cls, center: float) -> Isometry1D:
        """Reflection fixing ``center``."""
        return cls(-1, 2.0 * center)

    @property
    def is_flip(self) -> bool:
        return self.sigma == -1

    def __call__(self, t):
        return self.sigma * np.asarray(t, dtype=float) + self.delta

    def compose(self, inner: Isometry1D) -> Isometry1D:
        """Return ``self o inner`` (apply ``inner`` first)."""
        return Isometry1D(self.sigma * inner.sigma, self.sigma * inner.delta + self.delta)

    def __matmul__(self, inner: Isometry1D) -> Isometry1D:
        return self.compose(inner)

    def inverse(self) -> Isometry1D:
        return Isometry1D(self.sigma, -self.sigma * self.delta)


def apply_isometry(T: Isometry1D, P: PointSet1D) -> PointSet1D:
    out = T(P.values)
    if T.sigma == -1:
        out = out[::-1]
    return PointSet1D(np.ascontiguousarray(out))


class Edge(NamedTuple):
    x: float
    y: float
    i: int
    j: int


@dataclass(frozen=True)
class Correspondence:
    """A relation between two point sets, stored as sorted unique index pairs.

    Indices refer to positions in the sorted point sets, so a correspondence
    survives any isometry applied to either side (a flip reverses the order
    of the coordinates but the pairs still name the same points by their
    original positions).
    """

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        cleaned = tuple(sorted({(int(i), int(j)) for i, j in self.pairs}))
        object.__setattr__(self, "pairs", cleaned)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[int]]) -> Correspondence:
        return cls(tuple((int(i), int(j)) for i, j in pairs))

    @classmethod
    def identity(cls, n: int) -> Correspondence:
        return cls(tuple((i, i) for i in range(n)))

    @classmethod
    def full(cls, n: int, m: int) -> Correspondence:
        return cls(tuple(itertools.product(range(n), range(m))))

    @classmethod
    def from_functions(cls, f: Sequence[int], g: Sequence[int]) -> Correspondence:
        """graph(f) union transpose(graph(g)) for f: X -> Y and g: Y -> X."""
        return cls(tuple((i, fi) for i, fi in enumerate(f))
                   + tuple((gj, j) for j, gj in enumerate(g)))

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __contains__(self, pair):
        return tuple(pair) in set(self.pairs)

    @property
    def index_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        arr = np.array(self.pairs, dtype=np.intp).reshape(-1, 2)
        return arr[:, 0], arr[:, 1]

    def transpose(self) -> Correspondence:
        return Correspondence(tuple((j, i) for i, j in self.pairs))

    def is_valid(self, n: int, m: int) -> bool:
        try:
            self.validate(n, m)
        except CoverageViolation:
            return False
        return True

    def validate(self, n: int, m: int) -> None:
        if not self.pairs:
            raise CoverageViolation("empty relation")
        ii, jj = self.index_arrays
        if ii.min() < 0 or ii.max() >= n or jj.min() < 0 or jj.max() >= m:
            raise CoverageViolation("index out of range")
        if np.unique(ii).size != n:
            missing = sorted(set(range(n)) - set(ii.tolist()))
            raise CoverageViolation(f"points {missing} of the first set are unmatched")
        if np.unique(jj).size != m:
            missing = sorted(set(range(m)) - set(jj.tolist()))
            raise CoverageViolation(f"points {missing} of the second set are unmatched")

    def edges(self, X: PointSet1D, Y: PointSet1D) -> list[Edge]:
        return [Edge(X[i], Y[j], i, j) for i, j in self.pairs]

    def partners_of_x(self, i: int) -> list[int]:
        return [j for a, j in self.pairs if a == i]

    def partners_of_y(self, j: int) -> list[int]:
        return [i for i, b in self.pairs if b == j]


def _distortion_matrix(C: Correspondence, X: PointSet1D, Y: PointSet1D) -> np.ndarray:
    ii, jj = C.index_arrays
    xs = X.values[ii]
    ys = Y.values[jj]
    return np.abs(np.abs(xs[:, None] - xs[None, :]) - np.abs(ys[:, None] - ys[None, :]))


def distortion(C: Correspondence, X: PointSet1D, Y: PointSet1D) -> float:
    """Additive distortion of ``C``: the largest ``||x1-x2| - |y1-y2||`` over edge pairs."""
    C.validate(len(X), len(Y))
    return float(_distortion_matrix(C, X, Y).max())


def distortion_certificate(C: Correspondence, X: PointSet1D, Y: PointSet1D,
                           atol: float = ATOL) -> tuple[float, tuple[Edge, Edge]]:
    """Distortion together with an edge pair attaining it.

    The pair returned is the first, in the lexicographic order of the sorted
    edge list, whose value lies within ``atol`` of the maximum. A singleton
    correspondence returns the edge paired with itself.
    """
    C.validate(len(X), len(Y))
    M = _distortion_matrix(C, X, Y)
    D = float(M.max())
    k = len(C.pairs)
    a_best, b_best = 0, 0
    if k > 1:
        iu, ju = np.triu_indices(k, 1)
        vals = M[iu, ju]
        hit = int(np.flatnonzero(vals >= D - atol)[0])
        a_best, b_best = int(iu[hit]), int(ju[hit])
    (i1, j1), (i2, j2) = C.pairs[a_best], C.pairs[b_best]
    return D, (Edge(X[i1], Y[j1], i1, j1), Edge(X[i2], Y[j2], i2, j2))


def crossing(e1, e2) -> bool:
    """True iff the two edges cross: their x-order and y-order strictly disagree."""
    x1, y1 = e1[0], e1[1]
    x2, y2 = e2[0], e2[1]
    return (x1 < x2 and y1 > y2) or (x1 > x2 and y1 < y2)
