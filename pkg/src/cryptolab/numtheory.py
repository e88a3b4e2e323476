"""Number-theory utilities: primality, Fermat numbers, cube sums, sum puzzles."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

FERMAT_MAX_K = 20
PEPIN_MAX_K = 14

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int, rounds: int = 32, rng: random.Random | None = None) -> bool:
    """Miller-Rabin; deterministic for ``n < 3.3e24`` via the fixed small bases."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = list(_SMALL_PRIMES)
    if n.bit_length() > 80:
        rng = rng or random.Random(n)
        bases += [rng.randrange(2, n - 1) for _ in range(rounds)]
    for a in bases:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime_trial(n: int) -> bool:
    """Trial division; only for small ``n``."""
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def random_prime(bits: int, rng: random.Random) -> int:
    while True:
        c = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
        if is_probable_prime(c):
            return c


def random_safe_prime(bits: int, rng: random.Random) -> int:
    """Prime ``p = 2q + 1`` with ``q`` prime."""
    while True:
        q = rng.getrandbits(bits - 1) | (1 << (bits - 2)) | 1
        if q % 3 != 2:  # p = 2q + 1 must not be divisible by 3
            continue
        if is_probable_prime(q) and is_probable_prime(2 * q + 1):
            return 2 * q + 1


@dataclass(frozen=True)
class FermatNumber:
    k: int
    value: int


def fermat(k: int) -> FermatNumber:
    if not 0 <= k <= FERMAT_MAX_K:
        raise ValueError(f"k must lie in 0..{FERMAT_MAX_K}")
    return FermatNumber(k, (1 << (1 << k)) + 1)


def pepin_test(k: int) -> str:
    """``'PRIME'`` iff ``3^((F_k - 1)/2) = -1 (mod F_k)``."""
    if not 1 <= k <= PEPIN_MAX_K:
        raise ValueError(f"Pepin's test is supported for 1 <= k <= {PEPIN_MAX_K}")
    f = fermat(k).value
    return "PRIME" if pow(3, (f - 1) // 2, f) == f - 1 else "COMPOSITE"


@dataclass(frozen=True)
class F5Factorization:
    p: int
    q: int
    value: int
    product_ok: bool
    p_is_prime: bool
    q_is_prime: bool
    factors_are_1_mod_128: bool

    @property
    def ok(self) -> bool:
        return self.product_ok and self.p_is_prime and self.q_is_prime and self.factors_are_1_mod_128


def factor_check_f5(p: int = 641, q: int = 6700417) -> F5Factorization:
    f5 = fermat(5).value
    return F5Factorization(
        p,
        q,
        f5,
        p * q == f5,
        is_prime_trial(p),
        is_prime_trial(q),
        p % 128 == 1 and q % 128 == 1,
    )


CUBE_BASE = (3, 4, 5, 6, 7, 8, 9)
CUBE_TARGET_BASE = 2016


@dataclass(frozen=True)
class CubeKey:
    terms: tuple[int, ...]
    target: int

    def verify(self) -> bool:
        return all(t > 0 for t in self.terms) and sum(t ** 3 for t in self.terms) == self.target


def seven_cubes(e: int) -> CubeKey:
    """Seven positive integers whose cubes sum to ``2016**e`` (``e = 1 mod 3``).

    ``3^3 + ... + 9^3 = 2016``; scaling every term by ``2016**((e-1)/3)``
    multiplies the sum by ``2016**(e-1)``.
    """
    if e < 1 or e % 3 != 1:
        raise ValueError(
            f"exponent {e} is not 1 mod 3: the scaling trick needs (e - 1) divisible by 3"
        )
    scale = CUBE_TARGET_BASE ** ((e - 1) // 3)
    key = CubeKey(tuple(t * scale for t in CUBE_BASE), CUBE_TARGET_BASE ** e)
    if not key.verify():
        raise AssertionError("cube-sum verification failed")
    return key


def _value_sets(values: list[int], sums: frozenset[int]) -> Iterator[tuple[int, ...]]:
    """Sets of distinct values whose pairwise sums all lie in ``sums``."""

    def grow(start: int, chosen: list[int]) -> Iterator[tuple[int, ...]]:
        if chosen:
            yield tuple(chosen)
        for i in range(start, len(values)):
            v = values[i]
            if all(v + u in sums for u in chosen):
                chosen.append(v)
                yield from grow(i + 1, chosen)
                chosen.pop()

    yield from grow(0, [])


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Positive integer tuples of length ``parts`` summing to ``total``."""
    for cuts in combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def iter_fillings(cells: int, sums: frozenset[int] | set[int], allow_zero: bool = False) -> Iterator[dict[int, int]]:
    """Every multiset (value -> multiplicity) of ``cells`` integers whose pairwise
    sums all lie in ``sums`` and together achieve every element of ``sums``."""
    if cells < 2:
        raise ValueError("need at least two cells")
    sums = frozenset(sums)
    if not sums:
        return
    lo = 0 if allow_zero else 1
    values = list(range(lo, max(sums) - lo + 1))
    for D in _value_sets(values, sums):
        for mult in _compositions(cells, len(D)):
            achieved = {u + v for u, v in combinations(D, 2)}
            achieved |= {2 * v for v, c in zip(D, mult) if c >= 2}
            if achieved == sums:
                yield dict(zip(D, mult))


def access_puzzle(cells: int = 20, sums: frozenset[int] | set[int] = frozenset({4, 6, 8}), allow_zero: bool = False) -> set[int]:
    """Achievable totals over all valid fillings."""
    return {sum(v * c for v, c in f.items()) for f in iter_fillings(cells, sums, allow_zero)}
