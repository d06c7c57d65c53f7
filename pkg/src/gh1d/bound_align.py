"""Constructive alignment of a correspondence: d_H(X, T(Y)) <= 5D/8.

Given a correspondence ``C`` of distortion ``D``, the machinery here puts
the pair into standard configuration (designated edges ``(x', y')`` and
``(x, y)`` attain ``D``, do not cross, and ``x' - y' = y - x = D/2``),
classifies the crossing pattern, and proposes translations (with or without
a flip of ``Y`` about the midpoint of ``x`` and ``x'``) drawn from the case
analysis. Every candidate is evaluated exactly; ``dh_iso`` is the certified
fallback.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

import numpy as np

from .core import (ATOL, Correspondence, Edge, Isometry1D, PointSet1D, apply_isometry,
                   crossing, distortion, distortion_certificate)
from .exceptions import BoundViolation, InvariantViolation, NotApplicable
from .hausdorff import dh_iso, hausdorff

FIVE_EIGHTHS = 5.0 / 8.0


class CaseKind(str, enum.Enum):
    TRIVIAL = "Trivial"
    NO_DOUBLE_CROSSING = "NoDoubleCrossing"
    WIDE_CROSSING = "WideCrossing"
    DOUBLE_NOT_WIDE = "DoubleNotWide"
    # cases of the factor-2 alignment
    NO_CROSSINGS = "NoCrossings"
    NARROW_CROSSINGS = "NarrowCrossings"
    WIDE_CROSSINGS = "WideCrossings"


@dataclass(frozen=True)
class StandardConfig:
    """A correspondence normalized so its designated edges sit symmetrically.

    ``Y`` is the second set before standardization and ``S`` maps it into
    ``X``'s frame (``Y_std = S(Y)``). ``C`` indexes ``X`` and ``Y``. When
    ``swapped`` is set, ``X`` and ``Y`` are the caller's second and first
    sets respectively.
    """

    X: PointSet1D
    Y: PointSet1D
    Y_std: PointSet1D
    S: Isometry1D
    C: Correspondence
    x_prime: Edge
    x: Edge
    D: float
    h: float
    swapped: bool = False

    def edges(self) -> list[Edge]:
        """All edges with ``y`` coordinates in the standardized frame."""
        ys = self.S(self.Y.values)
        return [Edge(self.X[i], float(ys[j]), i, j) for i, j in self.C.pairs]

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.x_prime.x + self.x.x)


class DoubleCrossingStats(NamedTuple):
    edge: Edge
    right_side: bool  # p > x and q < y'; otherwise p < x' and q > y
    eps1: float
    eps2: float
    q_reflected: float


@dataclass(frozen=True)
class CaseQuantities:
    A: tuple[float, ...]
    A_prime: tuple[float, ...]
    B: tuple[float, ...]
    B_prime: tuple[float, ...]
    p0: Optional[float] = None
    q0: Optional[float] = None
    eps: Optional[float] = None
    eps_prime: Optional[float] = None
    p1: Optional[float] = None
    q1: Optional[float] = None
    eta: Optional[float] = None
    eta_prime: Optional[float] = None
    double_crossings: tuple[DoubleCrossingStats, ...] = ()


class LemmaCheck(NamedTuple):
    lower_gap: bool      # eps1 - eps2 >= h
    upper_gap: bool      # eps1 - eps2 <= D - h
    half_width: bool     # h <= D / 2
    reflected: bool      # |p - q~| <= D / 2 - h

    @property
    def all(self) -> bool:
        return self.lower_gap and self.upper_gap and self.half_width and self.reflected


@dataclass(frozen=True)
class AlignmentReport:
    T: Isometry1D
    achieved: float
    bound: float
    case_fired: CaseKind
    used_fallback: bool
    candidate_log: list = field(default_factory=list)
    chosen: str = ""


# --------------------------------------------------------------------------
# standard configuration


def _designated_edges(C, X, Y, designated, atol):
    if designated is None:
        D, (e1, e2) = distortion_certificate(C, X, Y, atol=atol)
        return D, e1, e2
    D = distortion(C, X, Y)
    (i1, j1), (i2, j2) = designated
    for p in designated:
        if tuple(p) not in C:
            raise ValueError(f"designated pair {p} is not in the correspondence")
    return D, Edge(X[i1], Y[j1], i1, j1), Edge(X[i2], Y[j2], i2, j2)


def standardize(X: PointSet1D, Y: PointSet1D, C: Correspondence,
                designated=None, atol: float = ATOL) -> StandardConfig:
    """Bring ``(X, Y, C)`` into standard configuration.

    ``designated`` optionally forces the distortion-attaining edge pair as two
    index pairs; by default the lexicographically first attaining pair is
    used.
    """
    D, e1, e2 = _designated_edges(C, X, Y, designated, atol)
    if D <= atol:
        return _overlay_config(X, Y, C, D)

    swapped = abs(e1.x - e2.x) > abs(e1.y - e2.y)
    if swapped:
        X, Y, C = Y, X, C.transpose()
        e1, e2 = Edge(e1.y, e1.x, e1.j, e1.i), Edge(e2.y, e2.x, e2.j, e2.i)
    prime, main = sorted((e1, e2), key=lambda e: (e.x, e.y))
    sigma = 1 if main.y >= prime.y else -1
    S = Isometry1D(sigma, main.x + D / 2 - sigma * main.y)
    return StandardConfig(
        X=X, Y=Y, Y_std=apply_isometry(S, Y), S=S, C=C,
        x_prime=Edge(prime.x, float(S(prime.y)), prime.i, prime.j),
        x=Edge(main.x, float(S(main.y)), main.i, main.j),
        D=D, h=main.x - prime.x, swapped=swapped,
    )


def _overlay_config(X, Y, C, D):
    edges = C.edges(X, Y)
    sigma = 1
    first = edges[0]
    for e in edges[1:]:
        if e.x != first.x:
            sigma = 1 if (e.x - first.x) * (e.y - first.y) > 0 else -1
            break
    S = Isometry1D(sigma, first.x - sigma * first.y)
    e = Edge(first.x, float(S(first.y)), first.i, first.j)
    return StandardConfig(X=X, Y=Y, Y_std=apply_isometry(S, Y), S=S, C=C,
                          x_prime=e, x=e, D=D, h=0.0, swapped=False)


# --------------------------------------------------------------------------
# classification and case quantities


def double_crossing_edges(SC: StandardConfig) -> list[Edge]:
    return [e for e in SC.edges() if crossing(e, SC.x_prime) and crossing(e, SC.x)]


def _is_wide(SC: StandardConfig, e: Edge) -> bool:
    lo, hi = SC.x_prime.x - SC.D, SC.x.x + SC.D
    return not (lo < e.x < hi) or not (lo < e.y < hi)


def classify(SC: StandardConfig, atol: float = ATOL) -> CaseKind:
    """Crossing type of a standardized correspondence.

    Wideness is tested on double-crossing edges only. Raises
    :class:`InvariantViolation` if a double crossing coexists with
    ``h > D/2``, which no correspondence of distortion ``D`` allows.
    """
    if SC.D <= atol:
        return CaseKind.TRIVIAL
    dbl = double_crossing_edges(SC)
    if not dbl:
        return CaseKind.NO_DOUBLE_CROSSING
    if SC.h > SC.D / 2 + atol:
        raise InvariantViolation(f"double crossing with h={SC.h} > D/2={SC.D / 2}")
    if any(_is_wide(SC, e) for e in dbl):
        return CaseKind.WIDE_CROSSING
    return CaseKind.DOUBLE_NOT_WIDE


def _double_crossing_stats(SC: StandardConfig, e: Edge) -> DoubleCrossingStats:
    xp, x, yp, y = SC.x_prime.x, SC.x.x, SC.x_prime.y, SC.x.y
    q_ref = (x + xp) - e.y
    if e.x > x:
        return DoubleCrossingStats(e, True, e.x - x, yp - e.y, q_ref)
    # mirror image of the right-hand picture
    return DoubleCrossingStats(e, False, xp - e.x, e.y - y, q_ref)


def case_quantities(SC: StandardConfig, wide: bool = False) -> CaseQuantities:
    """Sets and scalars used by the case analysis.

    ``wide=False`` takes ``q1 = min B`` with ``eta = y - D - q1``;
    ``wide=True`` uses the wide-crossing variant ``B = {q >= y with a
    partner p >= x}``, ``q1 = max B`` and ``eta = q1 - y``. In both,
    ``eta' = p1 - x`` for the smallest such partner ``p1``.
    """
    xp, x, yp, y, D = SC.x_prime.x, SC.x.x, SC.x_prime.y, SC.x.y, SC.D
    edges = SC.edges()
    A = sorted({e.x for e in edges if e.x > x + D and yp <= e.y <= y})
    A_prime = sorted({e.x for e in edges if e.x < xp - D and yp <= e.y <= y})
    B = sorted({e.y for e in edges if yp < e.y < y - D and e.x >= x})
    B_prime = sorted({e.y for e in edges if yp + D < e.y < y and e.x >= x})

    kw = {}
    if A:
        p0 = A[-1]
        q0 = max(e.y for e in edges if e.x == p0 and yp <= e.y <= y)
        kw.update(p0=p0, q0=q0, eps=p0 - x - D, eps_prime=y - q0)
    if wide:
        Bw = sorted({e.y for e in edges if e.y >= y and e.x >= x})
        if Bw:
            q1 = Bw[-1]
            p1 = min(e.x for e in edges if e.y == q1 and e.x >= x)
            kw.update(q1=q1, p1=p1, eta=q1 - y, eta_prime=p1 - x)
    elif B:
        q1 = B[0]
        p1 = min(e.x for e in edges if e.y == q1 and e.x >= x)
        kw.update(q1=q1, p1=p1, eta=y - D - q1, eta_prime=p1 - x)

    stats = tuple(_double_crossing_stats(SC, e) for e in double_crossing_edges(SC))
    return CaseQuantities(tuple(A), tuple(A_prime), tuple(B), tuple(B_prime),
                          double_crossings=stats, **kw)


def check_double_crossing_lemma(SC: StandardConfig, e: Edge,
                                atol: float = ATOL) -> LemmaCheck:
    """The four inequalities every double-crossing edge must satisfy.

    For an edge left of ``x'`` (and above ``y``) the picture is mirrored:
    ``eps1 = x' - p`` and ``eps2 = q - y``.
    """
    if not (crossing(e, SC.x_prime) and crossing(e, SC.x)):
        raise NotApplicable(f"{e} does not cross both designated edges")
    s = _double_crossing_stats(SC, e)
    D, h = SC.D, SC.h
    gap = s.eps1 - s.eps2
    return LemmaCheck(
        gap >= h - atol,
        gap <= D - h + atol,
        h <= D / 2 + atol,
        abs(e.x - s.q_reflected) <= D / 2 - h + atol,
    )


def check_wide_crossing_lemma(SC: StandardConfig, atol: float = ATOL) -> Optional[bool]:
    """``eps' >= h`` for every edge beyond ``x + D`` landing strictly in ``(y', y)``.

    Applies only when some double crossing is wide; returns ``None`` when the
    hypotheses are not met. The mirrored statement (edges below ``x' - D``,
    ``eps' = q0 - y'``) is checked as well.
    """
    if SC.D <= atol:
        return None
    dbl = double_crossing_edges(SC)
    if not any(_is_wide(SC, e) for e in dbl):
        return None
    xp, x, yp, y, D, h = SC.x_prime.x, SC.x.x, SC.x_prime.y, SC.x.y, SC.D, SC.h
    gaps = [y - e.y for e in SC.edges() if e.x > x + D and yp < e.y < y]
    gaps += [e.y - yp for e in SC.edges() if e.x < xp - D and yp < e.y < y]
    if not gaps:
        return None
    return all(g >= h - atol for g in gaps)


# --------------------------------------------------------------------------
# alignment


class _Frame(NamedTuple):
    ex: np.ndarray
    ey: np.ndarray
    xp: float
    x: float
    yp: float
    y: float
    D: float


def _frame(SC: StandardConfig, mirrored: bool) -> _Frame:
    edges = SC.edges()
    ex = np.array([e.x for e in edges])
    ey = np.array([e.y for e in edges])
    xp, x, yp, y = SC.x_prime.x, SC.x.x, SC.x_prime.y, SC.x.y
    if mirrored:
        return _Frame(-ex, -ey, -x, -xp, -y, -yp, SC.D)
    return _Frame(ex, ey, xp, x, yp, y, SC.D)


def _extreme_gap_right(f: _Frame):
    """eps from A = {p > x + D with partner in [y', y]}, or None."""
    mask = (f.ex > f.x + f.D) & (f.ey >= f.yp) & (f.ey <= f.y)
    return float(f.ex[mask].max() - f.x - f.D) if mask.any() else None


def _case_candidates(f: _Frame, kind: CaseKind) -> list[tuple[str, float]]:
    D = f.D
    out: list[tuple[str, float]] = [("zero", 0.0)]
    eps = _extreme_gap_right(f)

    if kind == CaseKind.NO_DOUBLE_CROSSING:
        mask = (f.ey > f.yp) & (f.ey < f.y - D) & (f.ex >= f.x)
        eta = float(f.y - D - f.ey[mask].min()) if mask.any() else None
        if eps is not None:
            out.append(("3/4 eps", 0.75 * eps))
        if eta is not None:
            out.append(("3/4 eta", 0.75 * eta))
        if eps is not None and eta is not None:
            out.append(("3/4 max(eps, eta)", 0.75 * max(eps, eta)))
        return out

    right = (f.ex > f.x) & (f.ey < f.yp)
    left = (f.ex < f.xp) & (f.ey > f.y)

    if kind == CaseKind.WIDE_CROSSING:
        bw = (f.ey >= f.y) & (f.ex >= f.x)
        eta1 = float(f.ey[bw].max() - f.y) if bw.any() else 0.0
        if eps is not None:
            out.append(("3/4 max(eps, eta)", 0.75 * max(eps, eta1)))
        b2 = (f.ey <= f.yp) & (f.ex <= f.xp)
        if b2.any():
            q2 = f.ey[b2].min()
            p2 = f.ex[b2 & (f.ey == q2)].max()
            eta2_p = float(f.xp - p2)
        else:
            eta2_p = 0.0
        out.append(("eta1 - eta2' - D/8", eta1 - eta2_p - D / 8))
        out.append(("D/8 - eta1", D / 8 - eta1))
        return out

    # double crossings, none wide
    eta1s = [float(v - f.y) for v in f.ey[left]] or [0.0]
    eps2s = [float(f.yp - v) for v in f.ey[right]] or [0.0]
    if eps is not None:
        out.extend(("eps - eta1", eps - e1) for e1 in sorted(set(eta1s)))
    out.append(("3/4 max(eta1, eps2)", 0.75 * max(max(eta1s), max(eps2s))))
    out.extend(("3/4 max(eta1, eps2)", 0.75 * max(a, b))
               for a in sorted(set(eta1s)) for b in sorted(set(eps2s)))
    return out


def _frame_isometry(SC: StandardConfig, flip: bool, delta: float) -> Isometry1D:
    inner = Isometry1D.reflection_about(SC.midpoint) if flip else Isometry1D.identity()
    return Isometry1D.translation(delta) @ inner


def _to_caller(SC: StandardConfig, T_frame: Isometry1D) -> Isometry1D:
    T = T_frame @ SC.S
    return T.inverse() if SC.swapped else T


def _all_candidates(SC: StandardConfig, kind: CaseKind):
    """Case candidates from the configuration and its mirror image."""
    cands = []
    for mirrored in (False, True):
        sign = -1.0 if mirrored else 1.0
        for label, d in _case_candidates(_frame(SC, mirrored), kind):
            cands.append((label + (" (mirrored)" if mirrored else ""), sign * d))
    seen, uniq = set(), []
    for label, d in cands:
        if d not in seen:
            seen.add(d)
            uniq.append((label, d))
    return uniq


def align_5_8(X: PointSet1D, Y: PointSet1D, C: Correspondence,
              atol: float = ATOL) -> AlignmentReport:
    """Isometry ``T`` with ``d_H(X, T(Y)) <= 5/8 * Dist(C)``.

    Candidates prescribed for the detected case are tried first (flipped
    about the midpoint of ``x`` and ``x'`` for a wide crossing, unflipped
    otherwise), then every candidate of every case in both flip states, then
    ``dh_iso``. Raises :class:`BoundViolation` if even ``dh_iso`` misses.
    """
    SC = standardize(X, Y, C, atol=atol)
    kind = classify(SC, atol=atol)
    bound = FIVE_EIGHTHS * SC.D
    log = []

    def evaluate(stage):
        best = None
        for label, flip, d in stage:
            T = _frame_isometry(SC, flip, d)
            v = hausdorff(SC.X, apply_isometry(T, SC.Y_std))
            log.append((d, flip, v))
            if best is None or v < best[0]:
                best = (v, label, flip, d)
        return best

    if kind == CaseKind.TRIVIAL:
        stages = [[("overlay", False, 0.0)]]
    else:
        flip = kind == CaseKind.WIDE_CROSSING
        primary = [(lbl, flip, d) for lbl, d in _all_candidates(SC, kind)]
        rest = []
        for k in (CaseKind.NO_DOUBLE_CROSSING, CaseKind.WIDE_CROSSING, CaseKind.DOUBLE_NOT_WIDE):
            for lbl, d in _all_candidates(SC, k):
                for fl in (False, True):
                    if (lbl, fl, d) not in primary:
                        rest.append((lbl, fl, d))
        stages = [primary, rest]

    for stage in stages:
        if not stage:
            continue
        v, label, flip, d = evaluate(stage)
        if v <= bound + atol:
            T = _to_caller(SC, _frame_isometry(SC, flip, d))
            achieved = hausdorff(X, apply_isometry(T, Y))
            if achieved <= bound + atol:
                return AlignmentReport(T, achieved, bound, kind, False, log,
                                       f"{label}{' flipped' if flip else ''}")

    T, _ = dh_iso(X, Y, atol=atol)
    achieved = hausdorff(X, apply_isometry(T, Y))
    if achieved > bound + atol:
        raise BoundViolation(
            f"d_H = {achieved} exceeds 5D/8 = {bound} for D = {SC.D} (case {kind.value})")
    return AlignmentReport(T, achieved, bound, kind, True, log, "dh_iso")


def weak_align_2(X: PointSet1D, Y: PointSet1D, C: Correspondence,
                 atol: float = ATOL) -> AlignmentReport:
    """Isometry ``T`` with ``d_H(X, T(Y)) <= Dist(C)``.

    Pins ``min X`` to its partner (after flipping ``Y`` if the partners of
    ``min X`` and ``max X`` are out of order) and shifts right by ``D`` when
    an edge crossing that pin reaches further than ``D``.
    """
    D = distortion(C, X, Y)
    iL, iR = 0, len(X) - 1
    j1 = min(C.partners_of_x(iL))
    j2 = min(C.partners_of_x(iR))
    sigma = -1 if Y[j1] > Y[j2] else 1
    base = Isometry1D(sigma, X[iL] - sigma * Y[j1])
    ys = base(Y.values)
    xL, y1 = X[iL], float(ys[j1])
    crossers = [(X[i], float(ys[j])) for i, j in C.pairs if crossing((X[i], ys[j]), (xL, y1))]
    log = []
    if not crossers:
        kind, order = CaseKind.NO_CROSSINGS, (0.0, D)
    else:
        eps1 = max(p - xL for p, _ in crossers)
        eps2 = max(y1 - q for _, q in crossers)
        if eps1 > D or eps2 > D:
            kind, order = CaseKind.WIDE_CROSSINGS, (D, 0.0)
        else:
            kind, order = CaseKind.NARROW_CROSSINGS, (0.0, D)
    for shift in order:
        T = Isometry1D.translation(shift) @ base
        v = hausdorff(X, apply_isometry(T, Y))
        log.append((shift, sigma == -1, v))
        if v <= D + atol:
            return AlignmentReport(T, v, D, kind, False, log,
                                   "shift D" if shift else "pin")
    T, _ = dh_iso(X, Y, atol=atol)
    v = hausdorff(X, apply_isometry(T, Y))
    if v > D + atol:
        raise BoundViolation(f"d_H = {v} exceeds D = {D} ({kind.value})")
    return AlignmentReport(T, v, D, kind, True, log, "dh_iso")
