from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cryptolab.gf2 import BitVector
from cryptolab.metric import (
    CubeSet,
    ball,
    check_point,
    covering_radius,
    cryptosystem_check,
    distance_to_set,
    is_metrically_regular,
    iterate_to_regular,
    metric_complement,
    metric_complement_with_radius,
    set_distance,
    small_dimension_sweep,
)


def cube_sets(max_n=5):
    return st.integers(1, max_n).flatmap(
        lambda n: st.frozensets(st.integers(0, (1 << n) - 1), min_size=1).map(lambda m: CubeSet(n, m))
    )


def naive_complement(X: CubeSet) -> tuple[set[int], int]:
    d = {y: min(bin(y ^ x).count("1") for x in X.members) for y in range(1 << X.n)}
    r = max(d.values())
    return {y for y, v in d.items() if v == r}, r


@pytest.fixture(scope="module")
def reference_sets(fixture_dir):
    return CubeSet.load(fixture_dir / "metric_A.txt"), CubeSet.load(fixture_dir / "metric_B.txt")


@given(cube_sets())
def test_complement_matches_pairwise_distances(X):
    comp = metric_complement_with_radius(X)
    members, r = naive_complement(X)
    assert set(comp.members.members) == members and comp.covering_radius == r
    assert covering_radius(X) == r


@given(cube_sets())
def test_complement_lies_at_covering_radius(X):
    B = metric_complement(X)
    r = covering_radius(X)
    assert all(distance_to_set(v, X) == r for v in B.vectors())
    assert set_distance(X, B) == r


@given(cube_sets(4))
def test_iteration_reaches_regular_pair(X):
    tr = iterate_to_regular(X)
    a, b = tr.pair
    assert is_metrically_regular(a) and metric_complement(a) == b and metric_complement(b) == a


def test_small_dimensions_have_no_counterexample():
    for n in (1, 2, 3, 4):
        assert small_dimension_sweep(n) is None


def test_ball_and_antipode():
    c = BitVector.from_str("0000")
    B = ball(c, 1)
    assert len(B) == 5
    assert metric_complement(CubeSet.from_vectors([c])) == CubeSet.from_strings(["1111"])


def test_text_round_trip(reference_sets):
    A, _ = reference_sets
    assert CubeSet.from_text(A.to_text()) == A
    with pytest.raises(ValueError):
        CubeSet.from_strings(["0101", "01"])


def test_reference_pair_is_regular(reference_sets):
    A, B = reference_sets
    assert len(A) == len(B) == 16 and A.n == 16
    assert metric_complement(A) == B and metric_complement(B) == A
    assert set_distance(A, B) == covering_radius(A) == 8


def test_reference_counterexample(reference_sets):
    A, B = reference_sets
    ce = check_point(A, B, BitVector.from_str("0000000000010111"))
    assert (ce.dist_a, ce.dist_b, ce.total, ce.expected) == (4, 6, 10, 8)


def test_cryptosystem_sweep_finds_violations(reference_sets):
    A, B = reference_sets
    rep = cryptosystem_check(A)
    assert rep.B == B and rep.d == 8 and not rep.correct
    ce = rep.counterexample
    assert ce.total != ce.expected
    assert ce.dist_a == distance_to_set(ce.x, A) and ce.dist_b == distance_to_set(ce.x, B)
    assert rep.violations > 0


def test_check_rejects_irregular_set():
    A = CubeSet.from_strings(["000", "001", "010"])
    assert not is_metrically_regular(A)
    with pytest.raises(ValueError):
        cryptosystem_check(A)
