import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from gh1d import IsometryAligner, dh_iso, gh_bruteforce, make_point_set
from gh1d.exceptions import EmptySet, InvalidCoordinate

X = np.array([0.0, 1.0, 2.0])
y = np.array([3.0, 2.0, 1.5])


def test_params_round_trip():
    est = IsometryAligner(strategy="weak", cap=4)
    assert clone(est).get_params() == est.get_params()
    assert est.set_params(allow_flip=False).allow_flip is False


@pytest.mark.parametrize("strategy, bound", [("optimal", 0.25), ("five_eighths", 0.3125),
                                             ("weak", 0.5)])
def test_strategies(strategy, bound):
    est = IsometryAligner(strategy=strategy).fit(X, y)
    assert est.hausdorff_ <= bound + 1e-9
    assert est.score(X, y) == pytest.approx(-est.hausdorff_)
    assert est.n_features_in_ == 1
    assert 0.25 in est.gh_interval_


def test_optimal_matches_dh_iso():
    est = IsometryAligner().fit(X, y)
    assert est.hausdorff_ == dh_iso(make_point_set(y), make_point_set(X)).value
    assert (est.report_, est.flipped_) == (None, False)


def test_transform_preserves_shape_and_order():
    est = IsometryAligner().fit(X[:, None], y[:, None])
    col = est.transform(np.array([[2.0], [0.0]]))
    assert col.shape == (2, 1)
    np.testing.assert_allclose(col.ravel(), [3.25, 1.25])
    np.testing.assert_allclose(est.fit_transform(X, y), [1.25, 2.25, 3.25])


def test_flip_is_learned():
    est = IsometryAligner().fit([0, 1, 3], [0, 2, 3])
    assert est.flipped_ and est.hausdorff_ == 0
    np.testing.assert_allclose(np.sort(est.transform([0, 1, 3])), [0, 2, 3])


def test_explicit_correspondence():
    est = IsometryAligner(strategy="weak").fit(X, y, correspondence=[(0, 0), (1, 1), (2, 2)])
    assert est.report_.achieved <= est.report_.bound + 1e-9


def test_default_correspondence_is_optimal():
    est = IsometryAligner(strategy="five_eighths").fit(X, y)
    g = gh_bruteforce(make_point_set(y), make_point_set(X)).value
    assert est.report_.bound == pytest.approx(1.25 * g)


def test_errors():
    with pytest.raises(NotFittedError):
        IsometryAligner().transform(X)
    with pytest.raises(ValueError):
        IsometryAligner(strategy="greedy").fit(X, y)
    with pytest.raises(EmptySet):
        IsometryAligner().fit([], y)
    with pytest.raises(InvalidCoordinate):
        IsometryAligner().fit([0.0, np.nan], y)
    with pytest.raises(ValueError):
        IsometryAligner().fit(np.zeros((2, 2)), y)
