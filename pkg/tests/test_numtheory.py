from __future__ import annotations

import random
from itertools import combinations, combinations_with_replacement

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cryptolab.numtheory import (
    CUBE_BASE,
    access_puzzle,
    factor_check_f5,
    fermat,
    is_prime_trial,
    is_probable_prime,
    iter_fillings,
    pepin_test,
    random_prime,
    random_safe_prime,
    seven_cubes,
)


@given(st.integers(-5, 20000))
def test_miller_rabin_matches_trial_division(n):
    assert is_probable_prime(n) == is_prime_trial(n)


def test_miller_rabin_large_values():
    assert is_probable_prime(2**127 - 1)
    assert not is_probable_prime((2**61 - 1) * (2**31 - 1))
    assert not is_probable_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7


def test_random_primes():
    rng = random.Random(0)
    p = random_prime(40, rng)
    assert p.bit_length() == 40 and is_probable_prime(p)
    s = random_safe_prime(40, rng)
    assert is_probable_prime((s - 1) // 2)


def test_pepin_small_fermat_numbers():
    assert [pepin_test(k) for k in range(1, 10)] == ["PRIME"] * 4 + ["COMPOSITE"] * 5
    for k in range(1, 4):
        assert is_prime_trial(fermat(k).value)
    with pytest.raises(ValueError):
        pepin_test(0)


def test_f5_factorization():
    f = factor_check_f5()
    assert f.ok and f.value == 4294967297 == 641 * 6700417
    assert not factor_check_f5(641, 6700419).ok


def test_seven_cubes():
    assert sum(t**3 for t in CUBE_BASE) == 2016
    key = seven_cubes(2017)
    assert len(key.terms) == 7 and key.target == 2016**2017
    assert sum(t**3 for t in key.terms) == 2016**2017
    for e in (1, 4, 7):
        assert seven_cubes(e).verify()
    with pytest.raises(ValueError):
        seven_cubes(2016)


def naive_totals(cells: int, sums: set[int], lo: int = 1) -> set[int]:
    out = set()
    for combo in combinations_with_replacement(range(lo, max(sums) + 1), cells):
        got = {a + b for a, b in combinations(combo, 2)}
        if got == sums:
            out.add(sum(combo))
    return out


@pytest.mark.parametrize("cells", [3, 4, 5, 6])
@pytest.mark.parametrize("allow_zero", [False, True])
def test_access_puzzle_matches_multiset_enumeration(cells, allow_zero):
    sums = {4, 6, 8}
    assert access_puzzle(cells, sums, allow_zero) == naive_totals(cells, sums, 0 if allow_zero else 1)


def test_fillings_are_valid():
    for f in iter_fillings(7, {4, 6, 8}):
        assert sum(f.values()) == 7
        vals = [v for v, c in f.items() for _ in range(c)]
        assert {a + b for a, b in combinations(vals, 2)} == {4, 6, 8}


def test_access_puzzle_twenty_cells():
    assert access_puzzle() == set(range(44, 77, 2))


def test_f5_decimal_value():
    # 2^32 + 1, not the transposed 4284967297
    assert fermat(5).value == 4_294_967_297
    assert 641 * 6700417 != 4_284_967_297
