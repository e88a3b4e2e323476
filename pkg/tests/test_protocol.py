from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cryptolab.numtheory import is_probable_prime
from cryptolab.protocol import (
    GroupParams,
    Party,
    attack_extract_secret,
    attack_predict,
    establish,
    parse_scenario,
    random_scenario,
    simulate_attack,
)

SMALL = GroupParams(23, 5)


def test_generated_group_is_safe_prime_with_generator():
    params = GroupParams.generate(32, random.Random(1))
    q = (params.p - 1) // 2
    assert is_probable_prime(params.p) and is_probable_prime(q)
    assert pow(params.g, q, params.p) != 1 and pow(params.g, 2, params.p) != 1


def test_parameter_validation():
    with pytest.raises(ValueError):
        GroupParams(21, 2)
    with pytest.raises(ValueError):
        GroupParams(23, 23)
    with pytest.raises(ValueError):
        GroupParams.generate(8, random.Random(0))


def test_session_key_equals_product_exponent():
    a, b = Party.create(SMALL, 3), Party.create(SMALL, 7)
    t = establish(SMALL, a, b, 4, 9)
    assert t.K == pow(5, 4 * 9, 23)
    assert (t.X_a, t.X_b) == (7, 16)
    with pytest.raises(ValueError):
        establish(SMALL, a, b, 22, 0)


@given(
    st.integers(0, 21), st.integers(0, 21),
    st.lists(st.tuples(st.integers(0, 21), st.integers(0, 21)), min_size=2, max_size=6),
)
def test_attack_exhaustive_small_group(aa, ab, randoms):
    a, b = Party.create(SMALL, aa), Party.create(SMALL, ab)
    rep = simulate_attack(SMALL, a, b, randoms)
    assert rep.secret == pow(5, aa * ab, 23)
    assert rep.mismatches == 0


def test_one_stolen_key_predicts_later_sessions_64_bit():
    rng = random.Random(2016)
    for _ in range(10):
        rep = random_scenario(64, 5, rng)
        assert rep.params.p.bit_length() == 64
        assert rep.mismatches == 0 and len(rep.predictions) == 4


def test_prediction_uses_only_public_values():
    rng = random.Random(3)
    params = GroupParams.generate(48, rng)
    a, b = Party.random(params, rng), Party.random(params, rng)
    n = params.p - 1
    first = establish(params, a, b, rng.randrange(n), rng.randrange(n))
    s = attack_extract_secret(params, a.P, b.P, first)
    later = establish(params, a, b, rng.randrange(n), rng.randrange(n))
    assert attack_predict(params, a.P, b.P, s, later.X_a, later.X_b) == later.K


def test_parse_scenario():
    text = "# toy\n23\n5\n3\n7\n4 9\n1, 2\n\n10 11\n"
    params, a, b, pairs = parse_scenario(text)
    assert params == SMALL and a.alpha == 3 and b.P == pow(5, 7, 23)
    assert pairs == [(4, 9), (1, 2), (10, 11)]
    assert simulate_attack(params, a, b, pairs).mismatches == 0
    with pytest.raises(ValueError):
        parse_scenario("23\n5\n3\n")
    with pytest.raises(ValueError):
        parse_scenario("23\n5\n3\n7\n1 2 3\n")


def test_needs_two_sessions():
    with pytest.raises(ValueError):
        simulate_attack(SMALL, Party.create(SMALL, 1), Party.create(SMALL, 2), [(1, 1)])
