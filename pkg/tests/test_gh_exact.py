import pytest
from hypothesis import given, settings, strategies as st

from gh1d import (ApproxInterval, Correspondence, InstanceTooLarge, Isometry1D, Method,
                  apply_isometry, dh_iso, distortion, gh, gh_approx, gh_bruteforce, gh_dp_notes,
                  make_point_set, min_distortion_monotone)

from conftest import point_sets
from oracles import first_optimal_function_pair, gh_by_function_pairs, gh_by_relations

P = make_point_set
small = point_sets(max_size=3)
ints = point_sets(max_size=3, elements=st.integers(-6, 6).map(float))


@pytest.mark.parametrize("xs, ys, expected", [
    ([0, 1], [0, 2], 0.5),
    ([0, 1, 2], [0, 1], 0.5),
    ([0, 3.5, 4, 9], [0, 3.5, 4, 9], 0.0),
])
def test_bruteforce_examples(xs, ys, expected):
    r = gh_bruteforce(P(xs), P(ys))
    assert r.value == pytest.approx(expected, abs=1e-12)
    assert r.method is Method.BRUTE_FORCE
    assert distortion(r.witness, P(xs), P(ys)) == pytest.approx(2 * expected, abs=1e-12)


def test_bruteforce_identity_witness():
    X = P([0, 3.5, 4, 9])
    assert gh_bruteforce(X, X).witness == Correspondence.identity(4)


def test_bruteforce_example_witness():
    r = gh_bruteforce(P([0, 1, 2]), P([0, 1]))
    assert distortion(Correspondence.from_pairs([(0, 0), (1, 0), (2, 1)]), P([0, 1, 2]),
                      P([0, 1])) == 1.0
    assert r.value == 0.5


def test_cap_enforced():
    with pytest.raises(InstanceTooLarge):
        gh_bruteforce(P(range(7)), P([0]))
    with pytest.raises(InstanceTooLarge):
        min_distortion_monotone(P([0]), P(range(4)), cap=3)


@settings(max_examples=60)
@given(small, small)
def test_bruteforce_matches_function_pair_oracle(X, Y):
    assert gh_bruteforce(X, Y).value == pytest.approx(
        gh_by_function_pairs(X.tolist(), Y.tolist()), abs=1e-12)


@settings(max_examples=40)
@given(point_sets(max_size=2), point_sets(max_size=3))
def test_function_pairs_suffice(X, Y):
    # the reduction from relations to function pairs, checked on tiny inputs
    assert gh_by_function_pairs(X.tolist(), Y.tolist()) == pytest.approx(
        gh_by_relations(X.tolist(), Y.tolist()), abs=1e-12)


@settings(max_examples=60)
@given(ints, ints)
def test_witness_is_lexicographically_first(X, Y):
    best, pairs = first_optimal_function_pair(X.tolist(), Y.tolist())
    r = gh_bruteforce(X, Y)
    assert r.value == best / 2
    assert r.witness.pairs == pairs


@given(point_sets(max_size=5), point_sets(max_size=5), st.sampled_from([1, -1]),
       st.floats(-20, 20))
def test_bruteforce_metric_properties(X, Y, sigma, delta):
    d = gh_bruteforce(X, Y).value
    assert d == pytest.approx(gh_bruteforce(Y, X).value, abs=1e-12)
    assert d == pytest.approx(gh_bruteforce(X, apply_isometry(Isometry1D(sigma, delta), Y)).value,
                              abs=1e-7)
    assert d >= abs(X.diameter - Y.diameter) / 2 - 1e-12
    assert d <= max(X.diameter, Y.diameter) / 2 + 1e-12


@given(point_sets(max_size=5), point_sets(max_size=5))
def test_sandwich(X, Y):
    d = gh_bruteforce(X, Y).value
    iso = dh_iso(X, Y).value
    assert d <= iso + 1e-9
    assert iso <= 1.25 * d + 1e-9
    assert d in gh_approx(X, Y)


@pytest.mark.parametrize("xs, ys, expected", [
    ([0, 1], [0, 2], 1.0),
    ([0, 1, 3], [0, 2, 3], 0.0),
    ([0], [0, 10], 10.0),
])
def test_monotone_examples(xs, ys, expected):
    v, w = min_distortion_monotone(P(xs), P(ys))
    assert v == pytest.approx(expected, abs=1e-12)
    assert distortion(w, P(xs), P(ys)) == pytest.approx(v, abs=1e-12)


def test_monotone_staircase_shape():
    _, w = min_distortion_monotone(P([0, 1]), P([0, 2]))
    assert w.pairs == ((0, 0), (1, 1))
    _, w = min_distortion_monotone(P([0, 1, 3]), P([0, 2, 3]))
    assert w.pairs == ((0, 2), (1, 1), (2, 0))


@given(point_sets(max_size=5), point_sets(max_size=5))
def test_monotone_is_an_upper_bound(X, Y):
    v, w = min_distortion_monotone(X, Y)
    assert w.is_valid(len(X), len(Y))
    assert distortion(w, X, Y) == pytest.approx(v, abs=1e-12)
    assert v / 2 >= gh_bruteforce(X, Y).value - 1e-12


@pytest.mark.parametrize("xs, ys, expected", [
    ([0, 1], [0, 2], 0.5),
    ([0], [0, 10], 5.0),
    ([0], [0], 0.0),
])
def test_notes_dp_examples(xs, ys, expected):
    assert gh_dp_notes(P(xs), P(ys)) == pytest.approx(expected, abs=1e-12)


def test_notes_dp_charges_the_diagonal():
    # D[2,2] = min(max(D[1,1], 1 - 0), max(D[2,1], 1 - 1)) = 1 even for X = Y:
    # the run cost is the run's width, so the identity matching is not free
    X = P([0, 1])
    assert gh_dp_notes(X, X) == pytest.approx(0.5)
    assert gh_bruteforce(X, X).value == 0.0


@given(point_sets(max_size=5), point_sets(max_size=5))
def test_notes_dp_is_finite_and_nonnegative(X, Y):
    v = gh_dp_notes(X, Y)
    assert 0 <= v <= max(X.diameter, Y.diameter)


def test_approx_examples():
    assert gh_approx(P([0, 2, 7]), P([0, 2, 7])) == ApproxInterval(0.0, 0.0, 0.0)
    iv = gh_approx(P([0]), P([0, 10]))
    assert (iv.lower, iv.upper, iv.estimate) == pytest.approx((4, 5, 5))
    assert gh_bruteforce(P([0]), P([0, 10])).value in iv


@pytest.mark.parametrize("method, kind", [
    ("brute", Method.BRUTE_FORCE), ("monotone", Method.MONOTONE_RESTRICTED),
    ("dp", Method.NOTES_DP), ("approx", Method.APPROX),
])
def test_dispatch(method, kind):
    r = gh(P([0, 1]), P([0, 2]), method=method)
    assert r.method is kind and r.value == pytest.approx(0.5)


def test_dispatch_rejects_unknown():
    with pytest.raises(ValueError):
        gh(P([0]), P([0]), method="exact")


def test_crossing_free_is_not_always_optimal():
    # found by the seeded sweep; every optimal correspondence here has a crossing
    X = P([0.20865252563011638, 0.5880230133040781, 0.9026246440620189, 0.9235192462510241])
    Y = P([0.1817623836406047, 0.6803607820946072, 0.6869059502014632, 0.7809764348030869])
    exact = gh_bruteforce(X, Y).value
    mono, _ = min_distortion_monotone(X, Y)
    assert exact == pytest.approx(0.11744029011923313, abs=1e-12)
    assert mono / 2 == pytest.approx(0.12071287417266113, abs=1e-12)
    assert mono / 2 > exact + 1e-3
