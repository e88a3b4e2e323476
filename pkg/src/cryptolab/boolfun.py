"""Boolean and vectorial Boolean functions given by value tables.

Inputs are integers ``0 .. 2**n - 1`` read as ``(x_1, ..., x_n)`` with
``x_n`` the least significant bit, so the value vector is listed in
lexicographic order of inputs.  Monomial masks use the same bit layout:
mask bit ``n - k`` set means ``x_k`` occurs in the monomial.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .gf2 import BitVector, has_nontrivial_kernel


def _popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True)
class BooleanFunction:
    n: int
    truth_table: BitVector

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if self.truth_table.length != 1 << self.n:
            raise ValueError(f"truth table must have {1 << self.n} entries, got {self.truth_table.length}")

    @classmethod
    def from_values(cls, values: Iterable[int]) -> BooleanFunction:
        tt = BitVector.from_bits(int(v) & 1 for v in values)
        n = tt.length.bit_length() - 1
        if tt.length != 1 << n:
            raise ValueError("truth table length is not a power of two")
        return cls(n, tt)

    @classmethod
    def from_callable(cls, n: int, func) -> BooleanFunction:
        """Build from ``func(bits)`` where ``bits`` is the tuple ``(x_1, ..., x_n)``."""
        return cls.from_values(func(int_to_bits(x, n)) for x in range(1 << n))

    @classmethod
    def from_hex(cls, text: str, n: int | None = None) -> BooleanFunction:
        """Hex value vector, most significant nibble first; whitespace ignored."""
        digits = "".join(text.split())
        if n is None:
            nbits = 4 * len(digits)
            n = nbits.bit_length() - 1
            if nbits != 1 << n:
                raise ValueError("hex length does not give a power-of-two table")
        return cls(n, BitVector.from_hex(digits, 1 << n))

    @classmethod
    def from_polynomial(cls, expr: str, n: int, index_base: int = 1) -> BooleanFunction:
        return from_anf(AnfForm(n, parse_polynomial(expr, n, index_base)))

    @classmethod
    def constant(cls, n: int, c: int) -> BooleanFunction:
        return cls(n, BitVector.ones(1 << n) if c else BitVector.zeros(1 << n))

    def values(self) -> np.ndarray:
        return np.fromiter(self.truth_table, dtype=np.uint8, count=1 << self.n)

    def __call__(self, x: int) -> int:
        return self.truth_table[x]

    def __xor__(self, other: BooleanFunction) -> BooleanFunction:
        return BooleanFunction(self.n, self.truth_table ^ other.truth_table)

    def complement(self) -> BooleanFunction:
        return BooleanFunction(self.n, ~self.truth_table)

    def weight(self) -> int:
        return self.truth_table.weight()

    def support(self) -> list[int]:
        return [x for x in range(1 << self.n) if self.truth_table[x]]

    def to_hex(self) -> str:
        return self.truth_table.to_hex()

    def degree(self) -> int:
        return to_anf(self).degree()


@dataclass(frozen=True)
class AnfForm:
    n: int
    coefficients: BitVector

    def __post_init__(self):
        if self.coefficients.length != 1 << self.n:
            raise ValueError("coefficient vector must have 2**n entries")

    def monomials(self) -> list[int]:
        return [m for m in range(1 << self.n) if self.coefficients[m]]

    def degree(self) -> int:
        # zero polynomial is given degree 0
        return max((_popcount(m) for m in self.monomials()), default=0)

    def to_str(self, index_base: int = 1) -> str:
        terms = []
        for m in self.monomials():
            if m == 0:
                terms.append("1")
                continue
            vs = [k for k in range(1, self.n + 1) if (m >> (self.n - k)) & 1]
            terms.append("".join(f"x{k - 1 + index_base}" for k in vs))
        return "+".join(sorted(terms, key=lambda t: (t != "1", t))) or "0"


def int_to_bits(x: int, n: int) -> tuple[int, ...]:
    """``x`` as ``(x_1, ..., x_n)``, most significant bit first."""
    return tuple((x >> (n - 1 - i)) & 1 for i in range(n))


def bits_to_int(bits: Sequence[int]) -> int:
    v = 0
    for b in bits:
        v = (v << 1) | (b & 1)
    return v


_TERM = re.compile(r"x_?\{?(\d+)\}?")


def parse_polynomial(expr: str, n: int, index_base: int = 1) -> BitVector:
    """Parse a sum of monomials such as ``"x0x1 + x3 + 1"`` into ANF coefficients.

    ``index_base`` is the index of the first variable in ``expr``; variables
    are mapped onto ``x_1 .. x_n`` in order.
    """
    coeffs = 0
    size = 1 << n
    cleaned = expr.replace("⊕", "+").replace("^", "+").replace(" ", "")
    if cleaned in ("", "0"):
        return BitVector(0, size)
    for term in cleaned.split("+"):
        if not term:
            raise ValueError(f"empty term in {expr!r}")
        if term == "1":
            mask = 0
        else:
            body = term.replace("*", "")
            idx = _TERM.findall(body)
            if not idx or _TERM.sub("", body):
                raise ValueError(f"cannot parse term {term!r}")
            mask = 0
            for s in idx:
                k = int(s) - index_base + 1
                if not 1 <= k <= n:
                    raise ValueError(f"variable x{s} out of range for n={n}")
                mask |= 1 << (n - k)
        coeffs ^= 1 << (size - 1 - mask)
    return BitVector(coeffs, size)


def _moebius(values: np.ndarray) -> np.ndarray:
    a = values.astype(np.uint8).copy()
    n = a.size.bit_length() - 1
    for i in range(n):
        step = 1 << i
        a = a.reshape(-1, 2, step)
        a[:, 1, :] ^= a[:, 0, :]
        a = a.reshape(-1)
    return a


def to_anf(f: BooleanFunction) -> AnfForm:
    coeffs = _moebius(f.values())
    return AnfForm(f.n, BitVector.from_bits(int(c) for c in coeffs))


def from_anf(a: AnfForm) -> BooleanFunction:
    vals = _moebius(np.fromiter(a.coefficients, dtype=np.uint8, count=1 << a.n))
    return BooleanFunction(a.n, BitVector.from_bits(int(v) for v in vals))


def _monomials_up_to(n: int, d: int) -> list[int]:
    out = []
    for k in range(d + 1):
        for vs in combinations(range(n), k):
            out.append(sum(1 << v for v in vs))
    return out


def _has_annihilator(points: Sequence[int], monomials: Sequence[int]) -> bool:
    # rows: evaluation of each monomial at a point where g must vanish
    cols = len(monomials)
    rows = []
    for x in points:
        r = 0
        for m in monomials:
            r = (r << 1) | ((m & x) == m)
        rows.append(r)
    return has_nontrivial_kernel(rows, cols)


def algebraic_immunity(f: BooleanFunction) -> int:
    """Smallest degree of a nonzero ``g`` with ``f g = 0`` or ``(f + 1) g = 0``."""
    if f.n < 1:
        raise ValueError("algebraic immunity needs n >= 1")
    ones = f.support()
    zeros = [x for x in range(1 << f.n) if not f.truth_table[x]]
    for d in range(f.n + 1):
        mons = _monomials_up_to(f.n, d)
        if _has_annihilator(ones, mons) or _has_annihilator(zeros, mons):
            return d
    raise AssertionError("unreachable: g = f + 1 always annihilates f")


@dataclass(frozen=True)
class VectorialFunction:
    n: int
    m: int
    table: tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != 1 << self.n:
            raise ValueError(f"lookup table must have {1 << self.n} entries")
        if any(not 0 <= y < 1 << self.m for y in self.table):
            raise ValueError(f"entries must lie in [0, {1 << self.m})")

    @classmethod
    def from_lut(cls, lut: Sequence[int], m: int | None = None) -> VectorialFunction:
        lut = tuple(int(v) for v in lut)
        n = len(lut).bit_length() - 1
        if len(lut) != 1 << n:
            raise ValueError("lookup table length is not a power of two")
        if m is None:
            m = max(n, max(lut).bit_length())
        return cls(n, m, lut)

    @classmethod
    def parse_lut(cls, text: str, m: int | None = None) -> VectorialFunction:
        """Comma-separated decimal entries; surrounding parentheses allowed."""
        body = text.strip().strip("()[]")
        return cls.from_lut([int(t) for t in body.replace("\n", ",").split(",") if t.strip()], m)

    def coordinate(self, j: int) -> BooleanFunction:
        """Coordinate ``f_{j+1}``; coordinate 0 is the most significant output bit."""
        if not 0 <= j < self.m:
            raise ValueError("coordinate index out of range")
        return component(self, 1 << (self.m - 1 - j))


def component(F: VectorialFunction, v: int) -> BooleanFunction:
    """``x -> <v, F(x)>``."""
    if v == 0:
        raise ValueError("component mask must be nonzero")
    if not 0 < v < 1 << F.m:
        raise ValueError("component mask out of range")
    return BooleanFunction.from_values(_popcount(v & y) & 1 for y in F.table)


def component_algebraic_immunity(F: VectorialFunction) -> int:
    if F.m < 1:
        raise ValueError("need m >= 1")
    return min(algebraic_immunity(component(F, v)) for v in range(1, 1 << F.m))


def rotate_left(x: int, n: int, k: int = 1) -> int:
    """Rotate ``(x_1, ..., x_n)`` left by ``k``: ``(x_{k+1}, ..., x_n, x_1, ..., x_k)``."""
    k %= n
    mask = (1 << n) - 1
    return ((x << k) | (x >> (n - k))) & mask if k else x


def rotational_construction(f: BooleanFunction, m: int) -> VectorialFunction:
    """``F(x) = f(x) || f(Lx) || ... || f(L^{m-1} x)`` with ``L`` the left rotation."""
    n = f.n
    if m > n:
        raise ValueError(f"m={m} exceeds n={n}")
    if m < 1:
        raise ValueError("m must be positive")
    table = []
    for x in range(1 << n):
        y = 0
        for j in range(m):
            y = (y << 1) | f(rotate_left(x, n, j))
        table.append(y)
    return VectorialFunction(n, m, tuple(table))


def walsh_spectrum(f: BooleanFunction) -> np.ndarray:
    """``W(a) = sum_x (-1)^(f(x) + a.x)`` for every ``a``, via the fast transform."""
    w = 1 - 2 * f.values().astype(np.int64)
    h = 1
    size = w.size
    while h < size:
        w = w.reshape(-1, 2, h)
        s = w[:, 0, :] + w[:, 1, :]
        d = w[:, 0, :] - w[:, 1, :]
        w = np.stack([s, d], axis=1).reshape(-1)
        h *= 2
    return w


def nonlinearity(f: BooleanFunction) -> int:
    w = walsh_spectrum(f)
    return (1 << (f.n - 1)) - int(np.abs(w).max()) // 2


def vectorial_nonlinearity(F: VectorialFunction) -> int:
    """Minimum nonlinearity over all nonzero components."""
    return min(nonlinearity(component(F, v)) for v in range(1, 1 << F.m))


def differential_uniformity(F: VectorialFunction) -> int:
    table = np.asarray(F.table, dtype=np.int64)
    xs = np.arange(1 << F.n)
    best = 0
    for a in range(1, 1 << F.n):
        diffs = table ^ table[xs ^ a]
        best = max(best, int(np.bincount(diffs, minlength=1 << F.m).max()))
    return best


def is_permutation(F: VectorialFunction) -> bool:
    return F.n == F.m and len(set(F.table)) == len(F.table)


def algebraic_degree(F: VectorialFunction) -> int:
    return max(component(F, 1 << j).degree() for j in range(F.m))
