"""Hausdorff distance on the line and its exact minimization over isometries."""
from __future__ import annotations

from typing import NamedTuple, Sequence

import numpy as np

from .core import ATOL, Isometry1D, PointSet1D, apply_isometry

# Above this many candidate translations the "auto" method switches to the
# threshold sweep.
CANDIDATE_BUDGET = 200_000


class TranslationProfilePoint(NamedTuple):
    delta: float
    value: float


class TranslationResult(NamedTuple):
    delta: float
    value: float


class IsoResult(NamedTuple):
    isometry: Isometry1D
    value: float


def directed_hausdorff(X: PointSet1D, Y: PointSet1D) -> float:
    """max over x in X of the distance from x to its nearest point of Y.

    Single merge scan over both sorted sequences, linear in ``|X| + |Y|``.
    """
    xs, ys = X.values, Y.values
    m = ys.size
    j = 0
    worst = 0.0
    for x in xs:
        while j + 1 < m and ys[j + 1] <= x:
            j += 1
        d = abs(x - ys[j])
        if j + 1 < m:
            d = min(d, ys[j + 1] - x)
        if d > worst:
            worst = d
    return float(worst)


def hausdorff(X: PointSet1D, Y: PointSet1D) -> float:
    return max(directed_hausdorff(X, Y), directed_hausdorff(Y, X))


def _nearest_distance(points: np.ndarray, queries: np.ndarray) -> np.ndarray:
    """Distance from each query to its nearest element of the sorted ``points``."""
    idx = np.searchsorted(points, queries)
    left = points[np.clip(idx - 1, 0, points.size - 1)]
    right = points[np.clip(idx, 0, points.size - 1)]
    return np.minimum(np.abs(queries - left), np.abs(queries - right))


def translation_profile_values(X: PointSet1D, Y: PointSet1D, deltas,
                               chunk: int = 2_000_000) -> np.ndarray:
    """Vectorized ``d_H(X, Y + delta)`` for every delta in ``deltas``."""
    deltas = np.asarray(deltas, dtype=float).ravel()
    xs, ys = X.values, Y.values
    out = np.empty(deltas.size)
    step = max(1, chunk // (xs.size + ys.size))
    for lo in range(0, deltas.size, step):
        d = deltas[lo:lo + step, None]
        fwd = _nearest_distance(ys, xs[None, :] - d).max(axis=1)
        bwd = _nearest_distance(xs, ys[None, :] + d).max(axis=1)
        out[lo:lo + step] = np.maximum(fwd, bwd)
    return out


def hausdorff_profile(X: PointSet1D, Y: PointSet1D,
                      deltas: Sequence[float]) -> list[TranslationProfilePoint]:
    vals = translation_profile_values(X, Y, deltas)
    return [TranslationProfilePoint(float(d), float(v)) for d, v in zip(deltas, vals)]


def difference_set(X: PointSet1D, Y: PointSet1D) -> np.ndarray:
    """Sorted unique values ``x_i - y_j``."""
    return np.unique(np.subtract.outer(X.values, Y.values).ravel())


def candidate_translations(X: PointSet1D, Y: PointSet1D) -> np.ndarray:
    """Every midpoint ``(s + s') / 2`` of the difference set, including ``s == s'``."""
    S = difference_set(X, Y)
    iu, ju = np.triu_indices(S.size)
    return np.unique(0.5 * (S[iu] + S[ju]))


def candidate_count(X: PointSet1D, Y: PointSet1D) -> int:
    """Number of pairs ``s <= s'`` from the difference set.

    Coinciding midpoints are not merged, so this bounds the size of
    :func:`candidate_translations` from above without building it.
    """
    k = difference_set(X, Y).size
    return k * (k + 1) // 2


def _pick(deltas: np.ndarray, values: np.ndarray, atol: float) -> TranslationResult:
    best = values.min()
    tied = np.flatnonzero(values <= best + atol)
    k = tied[np.argmin(deltas[tied])]
    return TranslationResult(float(deltas[k]), float(values[k]))


def _min_translation_candidates(X, Y, atol):
    deltas = candidate_translations(X, Y)
    return _pick(deltas, translation_profile_values(X, Y, deltas), atol)


def _full_coverage_components(X: PointSet1D, Y: PointSet1D, r: float):
    """Maximal intervals where ``d_H(X, Y + delta) <= r``.

    Each per-point constraint is a union of closed intervals ``[s - r, s + r]``
    over one row (or column) of the difference matrix. A row's union breaks
    exactly where consecutive sorted differences are more than ``2r`` apart,
    and those gaps are the gaps of the other set, so break positions are
    shared by all rows. Returns ``(s_left, s_right)`` pairs: the component is
    ``[s_left - r, s_right + r]``.
    """
    xs, ys = X.values, Y.values
    n, m = xs.size, ys.size
    yrev = ys[::-1]

    def break_points(sorted_vals):
        gaps = np.abs(np.diff(sorted_vals)) > 2 * r
        starts = np.concatenate(([True], gaps))
        ends = np.concatenate((gaps, [True]))
        return np.flatnonzero(starts), np.flatnonzero(ends)

    ys_starts, ys_ends = break_points(yrev)
    xs_starts, xs_ends = break_points(xs)

    start_s = np.concatenate((
        np.subtract.outer(xs, yrev[ys_starts]).ravel(),
        np.subtract.outer(xs[xs_starts], ys).ravel(),
    ))
    end_s = np.concatenate((
        np.subtract.outer(xs, yrev[ys_ends]).ravel(),
        np.subtract.outer(xs[xs_ends], ys).ravel(),
    ))
    coords = np.concatenate((start_s - r, end_s + r))
    svals = np.concatenate((start_s, end_s))
    kinds = np.concatenate((np.zeros(start_s.size, np.int8), np.ones(end_s.size, np.int8)))
    order = np.lexsort((kinds, coords))
    steps = np.where(kinds[order] == 0, 1, -1)
    cover = np.cumsum(steps)
    full = np.flatnonzero(cover == n + m)
    # a start event lifting coverage to n + m is always followed by an end event
    return [(float(svals[order[k]]), float(svals[order[k + 1]])) for k in full]


def _min_translation_sweep(X, Y, atol, max_iter=200):
    s0 = float(X.values[0] - Y.values[0])
    hi = float(translation_profile_values(X, Y, [s0])[0])
    lo = 0.0
    if _full_coverage_components(X, Y, 0.0):
        hi = 0.0
    for _ in range(max_iter):
        # components are re-read at hi + atol, so finer bisection buys nothing
        if hi - lo <= 0.1 * atol:
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if _full_coverage_components(X, Y, mid):
            hi = mid
        else:
            lo = mid
    comps = _full_coverage_components(X, Y, hi + atol)
    deltas = np.array([0.5 * (a + b) for a, b in comps] + [s0])
    return _pick(deltas, translation_profile_values(X, Y, deltas), atol)


def min_hausdorff_translation(X: PointSet1D, Y: PointSet1D, method: str = "auto",
                              atol: float = ATOL) -> TranslationResult:
    """Global minimum of ``delta -> d_H(X, Y + delta)``.

    The objective is piecewise linear with slopes +-1, so every local minimum
    sits where an ascending line ``delta - s`` meets a descending line
    ``s' - delta`` with ``s, s'`` drawn from the differences ``x_i - y_j``.

    ``method="candidates"`` evaluates every such midpoint. ``method="sweep"``
    bisects on the threshold ``r`` with an interval-coverage test and then
    snaps to the midpoint of the two lines bounding each surviving
    component. ``"auto"`` uses candidates while their number is below
    :data:`CANDIDATE_BUDGET`.

    Values within ``atol`` of the minimum count as ties; the smallest delta
    among them is returned.
    """
    if method == "auto":
        method = "candidates" if candidate_count(X, Y) <= CANDIDATE_BUDGET else "sweep"
    if method == "candidates":
        return _min_translation_candidates(X, Y, atol)
    if method == "sweep":
        return _min_translation_sweep(X, Y, atol)
    raise ValueError(f"unknown method {method!r}")


FLIP = Isometry1D(-1, 0.0)


def dh_iso(X: PointSet1D, Y: PointSet1D, allow_flip: bool = True, method: str = "auto",
           atol: float = ATOL) -> IsoResult:
    """Smallest ``d_H(X, T(Y))`` over translations and, optionally, the flip.

    The flip reflects about 0 before translating. A flipped optimum must beat
    the unflipped one by more than ``atol`` to be chosen.
    """
    plain = min_hausdorff_translation(X, Y, method=method, atol=atol)
    best = IsoResult(Isometry1D(1, plain.delta), plain.value)
    if allow_flip:
        flipped = min_hausdorff_translation(X, apply_isometry(FLIP, Y), method=method,
                                            atol=atol)
        if flipped.value < plain.value - atol:
            best = IsoResult(Isometry1D(-1, flipped.delta), flipped.value)
    return best
