import numpy as np
import pytest
from hypothesis import given, strategies as st

from gh1d import (Correspondence, CoverageViolation, EmptySet, InvalidCoordinate, Isometry1D,
                  PointSet1D, apply_isometry, crossing, distortion, distortion_certificate,
                  make_point_set)
from gh1d.core import Edge

from conftest import correspondences, point_sets
from oracles import distortion_bruteforce

P = make_point_set


@pytest.mark.parametrize("raw, expected", [
    ([3, 1, 1, 2], [1, 2, 3]),
    ([0], [0]),
    ([0.5, -0.5], [-0.5, 0.5]),
])
def test_make_point_set_sorts_and_dedupes(raw, expected):
    assert P(raw).tolist() == expected


@pytest.mark.parametrize("raw, exc", [
    ([], EmptySet),
    ([0.0, float("nan")], InvalidCoordinate),
    ([float("inf")], InvalidCoordinate),
])
def test_make_point_set_rejects(raw, exc):
    with pytest.raises(exc):
        P(raw)


def test_point_set_is_read_only_and_strict():
    X = P([2, 0, 1])
    with pytest.raises(ValueError):
        X.values[0] = 5
    with pytest.raises(InvalidCoordinate):
        PointSet1D([1, 0])
    assert (X.min, X.max, X.diameter, len(X)) == (0, 2, 2, 3)
    assert X == P([0, 1, 2]) and hash(X) == hash(P([0, 1, 2]))


@pytest.mark.parametrize("T, pts, expected", [
    (Isometry1D(1, 2), [0, 1], [2, 3]),
    (Isometry1D(-1, 0), [0, 1, 3], [-3, -1, 0]),
    (Isometry1D(-1, 3), [0, 2, 3], [0, 1, 3]),
])
def test_apply_isometry_examples(T, pts, expected):
    assert apply_isometry(T, P(pts)).tolist() == expected


def test_isometry_rejects_bad_sigma():
    with pytest.raises(ValueError):
        Isometry1D(0, 1.0)


@given(point_sets(), st.sampled_from([1, -1]), st.floats(-10, 10), st.sampled_from([1, -1]),
       st.floats(-10, 10))
def test_isometries_preserve_distances_and_compose(X, s1, d1, s2, d2):
    A, B = Isometry1D(s1, d1), Isometry1D(s2, d2)
    v = X.values
    np.testing.assert_allclose(A(B(v)), (A @ B)(v), atol=1e-9)
    np.testing.assert_allclose(A.inverse()(A(v)), v, atol=1e-9)
    moved = apply_isometry(A, X).values
    np.testing.assert_allclose(np.abs(np.subtract.outer(moved, moved)),
                               np.abs(np.subtract.outer(np.sort(A(v)), np.sort(A(v)))))
    assert moved.size == v.size


def test_reflection_about_fixes_center():
    R = Isometry1D.reflection_about(2.5)
    assert R(2.5) == 2.5 and R(0.0) == 5.0 and R.is_flip


@pytest.mark.parametrize("xs, ys, pairs, expected", [
    ([0, 1], [0, 2], [(0, 0), (1, 1)], 1.0),
    ([0], [0, 10], [(0, 0), (0, 1)], 10.0),
    ([0, 5, 9], [0, 5, 9], [(0, 0), (1, 1), (2, 2)], 0.0),
])
def test_distortion_examples(xs, ys, pairs, expected):
    assert distortion(Correspondence.from_pairs(pairs), P(xs), P(ys)) == expected


def test_distortion_rejects_uncovered_relation():
    with pytest.raises(CoverageViolation):
        distortion(Correspondence.from_pairs([(0, 0)]), P([0, 1]), P([0]))
    with pytest.raises(CoverageViolation):
        distortion(Correspondence.from_pairs([(0, 3)]), P([0]), P([0]))


@given(point_sets(max_size=5), point_sets(max_size=5), st.data())
def test_distortion_matches_oracle_and_certificate(X, Y, data):
    C = data.draw(correspondences(len(X), len(Y)))
    D = distortion(C, X, Y)
    assert D == pytest.approx(distortion_bruteforce(C.pairs, X.tolist(), Y.tolist()), abs=1e-12)
    Dc, (e1, e2) = distortion_certificate(C, X, Y)
    assert Dc == D
    assert abs(abs(e1.x - e2.x) - abs(e1.y - e2.y)) >= D - 1e-9
    assert (e1.i, e1.j) in C and (e2.i, e2.j) in C
    assert distortion(C.transpose(), Y, X) == D


def test_correspondence_normalizes_pairs():
    C = Correspondence(((1, 0), (0, 0), (1, 0)))
    assert C.pairs == ((0, 0), (1, 0))
    assert Correspondence.from_functions([1, 0], [0]).pairs == ((0, 0), (0, 1), (1, 0))
    assert C.partners_of_y(0) == [0, 1]
    assert not C.is_valid(2, 2) and C.is_valid(2, 1)


@pytest.mark.parametrize("e1, e2, expected", [
    ((0, 0), (1, 2), False),
    ((0, 2), (1, 0), True),
    ((0, 0), (0, 5), False),
])
def test_crossing_examples(e1, e2, expected):
    assert crossing(e1, e2) is expected
    assert crossing(e2, e1) is expected


def test_crossing_accepts_edges():
    assert crossing(Edge(0.0, 2.0, 0, 1), Edge(1.0, 0.0, 1, 0))
