"""Exhaustive solving of small Boolean constraint systems.

Assignments are ints read as ``(x_1, ..., x_k)`` with ``x_1`` the most
significant bit, so the ascending integer order is lexicographic order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

MAX_BITS = 24

Assignment = tuple[int, ...]


def brute_force_bits(predicate: Callable[[Assignment], bool], k: int) -> list[Assignment]:
    """All ``x`` in ``{0,1}^k`` satisfying ``predicate``, in ascending order."""
    if not 0 <= k <= MAX_BITS:
        raise ValueError(f"k must lie in 0..{MAX_BITS}")
    out = []
    for v in range(1 << k):
        x = tuple((v >> (k - 1 - i)) & 1 for i in range(k))
        if predicate(x):
            out.append(x)
    return out


def key_system(x: Sequence[int]) -> bool:
    """Twelve mixed XOR / integer equations in 16 key bits.

    ``^`` is XOR of bits; ``+``, ``-``, squares and the division by two are
    ordinary integer (rational) arithmetic.
    """
    x1, x2, x3, x4, x5, x6, x7, x8, x9, x10, x11, x12, x13, x14, x15, x16 = x
    return (
        ((x1 & x3) ^ (x2 & x4)) == x5 - x6
        and (x14 ^ x11) == (x12 ^ x13 ^ x14 ^ x15 ^ x16)
        and (x8 + x9 + x7) ** 2 == 2 * (x6 + x11 + x10)
        and ((x13 & x11) ^ (x12 & x14)) == -(x16 - x15)
        and x5 * x1 * x6 == x4 * x2 * x3
        and (x11 ^ x8 ^ x7) == (x10 ^ x6)
        and ((x6 & x11 & x10) ^ (x7 & x9 & x8)) == 0
        # ((x12 + x14 + x13) / sqrt 2)^2 is exactly (x12 + x14 + x13)^2 / 2
        and Fraction((x12 + x14 + x13) ** 2, 2) - x15 == x16 + x11
        and (x1 ^ x6) == (x5 ^ x3 ^ x2)
        and ((x6 & x8) ^ (x9 & x7)) == x10 - x11
        and 2 * (x5 + x1 + x6) == (x4 + x3 + x2) ** 2
        and x11 * x13 * x12 == x15 * x14 * x16
    )


def solve_key_system() -> list[Assignment]:
    return brute_force_bits(key_system, 16)


def assignment_str(x: Assignment) -> str:
    return "".join(str(b) for b in x)
