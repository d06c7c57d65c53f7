"""scikit-learn style front end for rigid alignment on the line."""
from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_column, check_points
from .bound_align import align_5_8, weak_align_2
from .core import ATOL, Correspondence, Isometry1D, apply_isometry
from .gh_exact import DEFAULT_CAP, gh_approx, gh_bruteforce
from .hausdorff import dh_iso, hausdorff

STRATEGIES = ("optimal", "five_eighths", "weak")


class IsometryAligner(TransformerMixin, BaseEstimator):
    """Learn the isometry of the line that moves ``X`` onto the target ``y``.

    ``fit(X, y)`` treats ``X`` as the moving point set and ``y`` as the fixed
    one; the two need not have the same length. ``transform`` applies the
    learned map elementwise and preserves input order and shape.

    Parameters
    ----------
    strategy : {"optimal", "five_eighths", "weak"}
        ``"optimal"`` minimizes the Hausdorff distance exactly. The other two
        run the constructive aligners on a correspondence passed to ``fit``
        (or, if none is given, an optimal one found by exhaustive search,
        which needs at most ``cap`` points per side).
    allow_flip : bool
        Only used by ``"optimal"``.
    """

    def __init__(self, strategy="optimal", allow_flip=True, method="auto", cap=DEFAULT_CAP,
                 atol=ATOL):
        self.strategy = strategy
        self.allow_flip = allow_flip
        self.method = method
        self.cap = cap
        self.atol = atol

    def fit(self, X, y, correspondence=None):
        if self.strategy not in STRATEGIES:
            raise ValueError(f"strategy must be one of {STRATEGIES}, got {self.strategy!r}")
        moving = check_points(X, "X")
        target = check_points(y, "y")
        self.n_features_in_ = 1
        if self.strategy == "optimal":
            T, value = dh_iso(target, moving, allow_flip=self.allow_flip, method=self.method,
                              atol=self.atol)
            self.report_ = None
        else:
            if correspondence is None:
                C = gh_bruteforce(target, moving, cap=self.cap).witness
            else:
                # caller's pairs are (moving index, target index)
                C = Correspondence.from_pairs(correspondence).transpose()
            align = align_5_8 if self.strategy == "five_eighths" else weak_align_2
            self.report_ = align(target, moving, C, atol=self.atol)
            T, value = self.report_.T, self.report_.achieved
        self.isometry_: Isometry1D = T
        self.hausdorff_ = float(value)
        self.flipped_ = T.is_flip
        self.gh_interval_ = gh_approx(target, moving, method=self.method)
        return self

    def transform(self, X):
        check_is_fitted(self, "isometry_")
        flat, column = check_column(X)
        out = self.isometry_(flat)
        return out[:, None] if column else out

    def score(self, X, y):
        """Negative Hausdorff distance between ``y`` and the aligned ``X``."""
        check_is_fitted(self, "isometry_")
        moving = check_points(X, "X")
        return -hausdorff(check_points(y, "y"), apply_isometry(self.isometry_, moving))
