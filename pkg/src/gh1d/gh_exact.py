"""Exact Gromov-Hausdorff distance at small sizes, restricted variants, and
the 5/4 approximation interval."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import ATOL, Correspondence, PointSet1D, distortion
from .exceptions import InstanceTooLarge
from .hausdorff import dh_iso

DEFAULT_CAP = 6

APPROX_FACTOR = 1.25


class Method(str, enum.Enum):
    BRUTE_FORCE = "BruteForce"
    MONOTONE_RESTRICTED = "MonotoneRestricted"
    NOTES_DP = "NotesDP"
    APPROX = "Approx"


@dataclass(frozen=True)
class GHResult:
    value: float
    witness: Optional[Correspondence]
    method: Method


@dataclass(frozen=True)
class ApproxInterval:
    lower: float
    upper: float
    estimate: float

    def __contains__(self, value: float) -> bool:
        return self.lower - ATOL <= value <= self.upper + ATOL


def _check_cap(X, Y, cap):
    if len(X) > cap or len(Y) > cap:
        raise InstanceTooLarge(
            f"exact search is capped at {cap} points per side, got {len(X)} and {len(Y)}")


def _pair_distortions(X: PointSet1D, Y: PointSet1D) -> np.ndarray:
    """dis[p, q] for all pairs p = (i, j), q = (i', j') with p = i * m + j."""
    dx = np.abs(np.subtract.outer(X.values, X.values))
    dy = np.abs(np.subtract.outer(Y.values, Y.values))
    n, m = len(X), len(Y)
    # dis[i, j, i', j'] = | dx[i, i'] - dy[j, j'] |
    dis = np.abs(dx[:, None, :, None] - dy[None, :, None, :])
    return dis.reshape(n * m, n * m)


class _FunctionPairSearch:
    """Depth-first search over (f, g) with bitmask forward checking.

    Variables are f(x_0..x_{n-1}) then g(y_0..y_{m-1}); each takes its values
    in increasing index order, so the first complete assignment found is the
    lexicographically smallest feasible one.
    """

    def __init__(self, X: PointSet1D, Y: PointSet1D):
        self.n, self.m = len(X), len(Y)
        self.dis = _pair_distortions(X, Y)
        n, m = self.n, self.m
        self.domains = [[i * m + j for j in range(m)] for i in range(n)]
        self.domains += [[i * m + j for i in range(n)] for j in range(m)]
        self.domain_masks = [sum(1 << p for p in dom) for dom in self.domains]

    def feasible(self, t: float) -> Optional[list[int]]:
        ok = self.dis <= t
        nm = ok.shape[0]
        if nm <= 62:
            compat = (ok.astype(np.int64) @ (np.int64(1) << np.arange(nm, dtype=np.int64))).tolist()
        else:
            compat = [sum(1 << int(q) for q in np.flatnonzero(row)) for row in ok]
        doms, dmasks = self.domains, self.domain_masks
        nvars = len(doms)
        chosen: list[int] = []

        def rec(k: int, allowed: int) -> bool:
            if k == nvars:
                return True
            for p in doms[k]:
                if not (allowed >> p) & 1:
                    continue
                nxt = allowed & compat[p]
                if all(nxt & dmasks[r] for r in range(k + 1, nvars)):
                    chosen.append(p)
                    if rec(k + 1, nxt):
                        return True
                    chosen.pop()
            return False

        full = (1 << (self.n * self.m)) - 1
        return chosen if rec(0, full) else None

    def to_correspondence(self, chosen: list[int]) -> Correspondence:
        return Correspondence(tuple(divmod(p, self.m) for p in chosen))


def gh_bruteforce(X: PointSet1D, Y: PointSet1D, cap: int = DEFAULT_CAP) -> GHResult:
    """Exact ``d_GH`` as half the least distortion over all correspondences.

    Every correspondence contains some ``graph(f) | transpose(graph(g))`` and
    dropping edges never raises distortion, so searching function pairs is
    exact. The optimum is one of the finitely many values
    ``| |x - x'| - |y - y'| |``; a bisection over them asks, for each
    threshold, whether a function pair with all edges pairwise compatible
    exists. The witness is the lexicographically smallest optimal
    ``(f(0), ..., f(n-1), g(0), ..., g(m-1))``.
    """
    _check_cap(X, Y, cap)
    search = _FunctionPairSearch(X, Y)
    thresholds = np.unique(search.dis)
    lower = abs(X.diameter - Y.diameter)
    lo = int(np.searchsorted(thresholds, lower - ATOL))
    hi = thresholds.size - 1  # everything is compatible at the largest value
    while lo < hi:
        mid = (lo + hi) // 2
        if search.feasible(thresholds[mid]) is not None:
            hi = mid
        else:
            lo = mid + 1
    best = search.feasible(thresholds[lo])
    witness = search.to_correspondence(best)
    return GHResult(0.5 * distortion(witness, X, Y), witness, Method.BRUTE_FORCE)


def _staircase_min(xs: np.ndarray, ys: np.ndarray):
    """Least distortion over monotone staircases from (0, 0) to (n-1, m-1).

    Steps advance i, j, or both. Branch and bound on the running maximum;
    paths are explored with "advance both" first, then i, then j.
    """
    n, m = xs.size, ys.size
    best_val = np.inf
    best_path: list[tuple[int, int]] = []
    path = [(0, 0)]

    def rec(i, j, cur):
        nonlocal best_val, best_path
        if i == n - 1 and j == m - 1:
            if cur < best_val:
                best_val, best_path = cur, list(path)
            return
        for di, dj in ((1, 1), (1, 0), (0, 1)):
            a, b = i + di, j + dj
            if a >= n or b >= m:
                continue
            worst = cur
            for (pi, pj) in path:
                d = abs(abs(xs[a] - xs[pi]) - abs(ys[b] - ys[pj]))
                if d > worst:
                    worst = d
                    if worst >= best_val:
                        break
            if worst >= best_val:
                continue
            path.append((a, b))
            rec(a, b, worst)
            path.pop()

    rec(0, 0, 0.0)
    return float(best_val), best_path


def min_distortion_monotone(X: PointSet1D, Y: PointSet1D,
                            cap: int = DEFAULT_CAP) -> tuple[float, Correspondence]:
    """Least distortion over crossing-free correspondences, Y as-is or reflected.

    Returns ``(distortion, witness)``; the unreflected orientation wins ties.
    Indices in the witness refer to the original sorted ``Y``.
    """
    _check_cap(X, Y, cap)
    m = len(Y)
    v_plain, path_plain = _staircase_min(X.values, Y.values)
    v_flip, path_flip = _staircase_min(X.values, -Y.values[::-1])
    if v_flip < v_plain - ATOL:
        return v_flip, Correspondence(tuple((i, m - 1 - j) for i, j in path_flip))
    return v_plain, Correspondence(tuple(path_plain))


def _notes_dp(A: np.ndarray, B: np.ndarray) -> float:
    n, m = A.size, B.size
    D = np.zeros((n, m))
    for i in range(n):
        for j in range(m):
            if i == 0 and j == 0:
                D[i, j] = 0.0
            elif i == 0:
                D[i, j] = abs(B[j] - B[0])
            elif j == 0:
                D[i, j] = abs(A[i] - A[0])
            else:
                k = np.inf
                for ip in range(i, -1, -1):
                    k = min(k, max(D[ip, j - 1], A[i] - A[ip]))
                D[i, j] = k
    return float(D[n - 1, m - 1])


def gh_dp_notes(X: PointSet1D, Y: PointSet1D) -> float:
    """A proposed dynamic program for d_GH, run in both orientations.

    Experimental: the cost of matching one point of ``Y`` to the run
    ``X[i'..i]`` is taken as the run's width, and nothing guarantees the
    result equals, bounds, or is bounded by the true ``d_GH``.
    """
    k1 = _notes_dp(X.values, Y.values)
    k2 = _notes_dp(X.values, -Y.values[::-1])
    return min(k1, k2) / 2


def gh_approx(X: PointSet1D, Y: PointSet1D, method: str = "auto") -> ApproxInterval:
    """Interval ``[0.8 * d, d]`` with ``d = dh_iso(X, Y)``; contains ``d_GH``."""
    upper = dh_iso(X, Y, method=method).value
    return ApproxInterval(upper / APPROX_FACTOR, upper, upper)


def gh(X: PointSet1D, Y: PointSet1D, method: str = "brute", cap: int = DEFAULT_CAP) -> GHResult:
    """Dispatch on ``method`` in {"brute", "monotone", "dp", "approx"}."""
    if method == "brute":
        return gh_bruteforce(X, Y, cap=cap)
    if method == "monotone":
        v, w = min_distortion_monotone(X, Y, cap=cap)
        return GHResult(v / 2, w, Method.MONOTONE_RESTRICTED)
    if method == "dp":
        return GHResult(gh_dp_notes(X, Y), None, Method.NOTES_DP)
    if method == "approx":
        return GHResult(gh_approx(X, Y).estimate, None, Method.APPROX)
    raise ValueError(f"unknown method {method!r}")
