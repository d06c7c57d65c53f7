"""Instances on which dh_iso / d_GH = 5/4 - eps, showing 5/4 cannot be improved."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import ATOL, Correspondence, PointSet1D, distortion, make_point_set
from .exceptions import InvariantViolation, SeparationTooSmall
from .hausdorff import TranslationProfilePoint, hausdorff_profile

MIN_SEPARATION = 50.0


@dataclass(frozen=True)
class TightInstance:
    k: int
    eps: float
    delta: float
    h: float
    X: PointSet1D
    Y: PointSet1D
    C: Correspondence

    @property
    def expected_gh(self) -> float:
        return self.delta

    @property
    def expected_dhiso(self) -> float:
        return (1.25 - self.eps) * self.delta

    @property
    def expected_dist(self) -> float:
        return 2.0 * self.delta

    @property
    def special_translations(self) -> list[float]:
        """Translations at which ``d_H(X, Y + t)`` touches its minimum."""
        e, d = self.eps, self.delta
        return [0.75 * d + e * d + 4 * i * e * d for i in range(self.k + 1)]


def generate(k: int, delta: float = 1.0, h: Optional[float] = None) -> TightInstance:
    """Build the family member for ``eps = 1 / (4(2k + 1))``.

    With ``x = 0``: ``x' = -h``, ``y' = -h - delta``, ``y = delta``,
    ``y_i = 4 i eps delta`` and ``x_i = 2 delta + 4 (2k - i + 1) eps delta``
    for ``i = 0..k``. The correspondence pairs ``x_i`` with ``y_i`` plus the
    two designated edges and has distortion ``2 delta``.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if not delta > 0:
        raise ValueError("delta must be positive")
    if h is None:
        h = MIN_SEPARATION * delta
    if h < MIN_SEPARATION * delta:
        raise SeparationTooSmall(f"h = {h} < {MIN_SEPARATION} * delta")
    eps = 1.0 / (4 * (2 * k + 1))
    xs = [-h, 0.0] + [2 * delta + 4 * (2 * k - i + 1) * eps * delta for i in range(k + 1)]
    ys = [-h - delta, delta] + [4 * i * eps * delta for i in range(k + 1)]
    X, Y = make_point_set(xs), make_point_set(ys)
    if len(X) != k + 3 or len(Y) != k + 3:
        raise InvariantViolation("tight family points collided")
    xi = {v: i for i, v in enumerate(X.values.tolist())}
    yi = {v: j for j, v in enumerate(Y.values.tolist())}
    C = Correspondence(tuple((xi[a], yi[b]) for a, b in zip(xs, ys)))
    inst = TightInstance(k, eps, float(delta), float(h), X, Y, C)
    if abs(distortion(C, X, Y) - inst.expected_dist) > ATOL * max(1.0, delta):
        raise InvariantViolation("tight family correspondence has the wrong distortion")
    return inst


def profile_table(k: int, delta: float = 1.0,
                  h: Optional[float] = None) -> list[TranslationProfilePoint]:
    """``d_H(X, Y + t)`` at the special translations and the midpoints between them,
    in increasing order of ``t``."""
    inst = generate(k, delta, h)
    special = inst.special_translations
    ts = []
    for a, b in zip(special, special[1:]):
        ts += [a, 0.5 * (a + b)]
    ts.append(special[-1])
    return hausdorff_profile(inst.X, inst.Y, ts)
