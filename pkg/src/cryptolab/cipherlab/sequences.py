"""Binary sequences generated by quadratic feedback functions.

A register of length ``n`` produces ``u_{i+n} = f(u_i, ..., u_{i+n-1})``
where ``f`` has algebraic degree at most two.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class QuadraticFeedback:
    """``f = a0 + sum_{i in linear} x_i + sum_{(i, j) in quadratic} x_i x_j``.

    Variable indices are 1-based.
    """

    n: int
    a0: int = 0
    linear: frozenset[int] = frozenset()
    quadratic: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("register length must be positive")
        if self.a0 not in (0, 1):
            raise ValueError("a0 must be a bit")
        for i in self.linear:
            if not 1 <= i <= self.n:
                raise ValueError(f"linear index {i} out of range")
        norm = set()
        for i, j in self.quadratic:
            if not (1 <= i <= self.n and 1 <= j <= self.n) or i == j:
                raise ValueError(f"bad quadratic term x{i}x{j}")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "quadratic", frozenset(norm))
        object.__setattr__(self, "linear", frozenset(self.linear))

    @classmethod
    def build(cls, n: int, a0: int = 0, linear: Iterable[int] = (), quadratic: Iterable[tuple[int, int]] = ()) -> QuadraticFeedback:
        return cls(n, a0, frozenset(linear), frozenset(quadratic))

    def __call__(self, window: Sequence[int]) -> int:
        v = self.a0
        for i in self.linear:
            v ^= window[i - 1]
        for i, j in self.quadratic:
            v ^= window[i - 1] & window[j - 1]
        return v


def qf_generate(f: QuadraticFeedback, init: Sequence[int], length: int) -> list[int]:
    if len(init) != f.n:
        raise ValueError(f"initial state must have {f.n} bits")
    if length < f.n:
        raise ValueError("length must be at least the register length")
    seq = [int(b) & 1 for b in init]
    while len(seq) < length:
        seq.append(f(seq[-f.n:]))
    return seq


@dataclass(frozen=True)
class AmbiguityWitness:
    f_u: QuadraticFeedback
    f_v: QuadraticFeedback
    init: tuple[int, ...]
    agreement_length: int


def agreement_length(a: Sequence[int], b: Sequence[int]) -> int:
    k = 0
    for x, y in zip(a, b):
        if x != y:
            break
        k += 1
    return k


def qf_ambiguity_witness(n: int) -> AmbiguityWitness:
    """Two distinct quadratic registers that agree on ``n*n - n`` leading bits.

    ``f_u = x1 x2`` and ``f_v = x2 xn + x1 + xn`` from ``1^(n-1) 0``; the
    agreement length is measured by simulation, not assumed.
    """
    if n < 3:
        raise ValueError("witness needs n >= 3")
    f_u = QuadraticFeedback.build(n, quadratic=[(1, 2)])
    f_v = QuadraticFeedback.build(n, linear=[1, n], quadratic=[(2, n)])
    init = (1,) * (n - 1) + (0,)
    length = n * n - n + 1
    u = qf_generate(f_u, init, length)
    v = qf_generate(f_v, init, length)
    k = agreement_length(u, v)
    if k != n * n - n:
        raise AssertionError(f"witness agreement is {k}, expected {n * n - n}")
    return AmbiguityWitness(f_u, f_v, init, k)
