"""Dense linear algebra over GF(2) with rows packed into Python ints.

Bit position 0 is the leftmost bit of a vector (the first character of its
text form).  Internally a vector of length ``n`` is an int whose most
significant of ``n`` bits is position 0, so ``int(s, 2)`` is the packing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

ExactRational = Fraction


@dataclass(frozen=True)
class BitVector:
    """Immutable bit sequence of fixed length."""

    value: int
    length: int

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("length must be non-negative")
        if self.value < 0 or self.value >> self.length:
            raise ValueError(f"value does not fit in {self.length} bits")

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> BitVector:
        value = 0
        length = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"not a bit: {b!r}")
            value = (value << 1) | b
            length += 1
        return cls(value, length)

    @classmethod
    def from_str(cls, text: str) -> BitVector:
        """Parse a '0'/'1' string; whitespace is ignored."""
        s = "".join(text.split())
        if s and set(s) - {"0", "1"}:
            raise ValueError(f"not a binary string: {text!r}")
        return cls(int(s, 2) if s else 0, len(s))

    @classmethod
    def zeros(cls, length: int) -> BitVector:
        return cls(0, length)

    @classmethod
    def ones(cls, length: int) -> BitVector:
        return cls((1 << length) - 1, length)

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i: int) -> int:
        if i < 0:
            i += self.length
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.value >> (self.length - 1 - i)) & 1

    def __iter__(self):
        for i in range(self.length):
            yield (self.value >> (self.length - 1 - i)) & 1

    def _check(self, other: BitVector) -> None:
        if self.length != other.length:
            raise ValueError(f"length mismatch: {self.length} != {other.length}")

    def __xor__(self, other: BitVector) -> BitVector:
        self._check(other)
        return BitVector(self.value ^ other.value, self.length)

    def __and__(self, other: BitVector) -> BitVector:
        self._check(other)
        return BitVector(self.value & other.value, self.length)

    def __invert__(self) -> BitVector:
        return BitVector(self.value ^ ((1 << self.length) - 1), self.length)

    def weight(self) -> int:
        return bin(self.value).count("1")

    def distance(self, other: BitVector) -> int:
        self._check(other)
        return bin(self.value ^ other.value).count("1")

    def dot(self, other: BitVector) -> int:
        self._check(other)
        return bin(self.value & other.value).count("1") & 1

    def bits(self) -> list[int]:
        return list(self)

    def to_str(self, group: int = 0) -> str:
        s = format(self.value, f"0{self.length}b") if self.length else ""
        if group:
            s = " ".join(s[i:i + group] for i in range(0, len(s), group))
        return s

    def to_hex(self) -> str:
        """Hex rendering, most significant nibble first; length must be a multiple of 4."""
        if self.length % 4:
            raise ValueError("hex rendering needs a length divisible by 4")
        return format(self.value, f"0{self.length // 4}x") if self.length else ""

    @classmethod
    def from_hex(cls, text: str, length: int | None = None) -> BitVector:
        s = "".join(text.split()).lower()
        if s.startswith("0x"):
            s = s[2:]
        nbits = 4 * len(s) if length is None else length
        return cls(int(s, 16) if s else 0, nbits)

    def __str__(self) -> str:
        return self.to_str()


@dataclass(frozen=True)
class BitMatrix:
    """Immutable dense GF(2) matrix; each row is packed like a BitVector."""

    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self):
        if len(self.data) != self.rows:
            raise ValueError("row count does not match data")
        for r in self.data:
            if r < 0 or r >> self.cols:
                raise ValueError("row wider than column count")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]] | Sequence[BitVector], cols: int | None = None) -> BitMatrix:
        packed = []
        width = cols
        for r in rows:
            v = r if isinstance(r, BitVector) else BitVector.from_bits(r)
            if width is None:
                width = v.length
            elif v.length != width:
                raise ValueError("ragged rows")
            packed.append(v.value)
        return cls(len(packed), width or 0, tuple(packed))

    @classmethod
    def from_columns(cls, columns: Sequence[BitVector]) -> BitMatrix:
        if not columns:
            raise ValueError("need at least one column")
        nrows = columns[0].length
        data = []
        for i in range(nrows):
            row = 0
            for c in columns:
                row = (row << 1) | c[i]
            data.append(row)
        return cls(nrows, len(columns), tuple(data))

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls(n, n, tuple(1 << (n - 1 - i) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> BitMatrix:
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def from_text(cls, text: str) -> BitMatrix:
        """Parse the 'rows cols' header followed by one 0/1 line per row."""
        lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        if not lines:
            raise ValueError("empty matrix text")
        header = lines[0].split()
        if len(header) != 2:
            raise ValueError("header must be 'rows cols'")
        nrows, ncols = int(header[0]), int(header[1])
        body = lines[1:]
        if len(body) != nrows:
            raise ValueError(f"expected {nrows} rows, got {len(body)}")
        data = []
        for ln in body:
            if len(ln) != ncols or set(ln) - {"0", "1"}:
                raise ValueError(f"bad row {ln!r}")
            data.append(int(ln, 2) if ncols else 0)
        return cls(nrows, ncols, tuple(data))

    def to_text(self) -> str:
        out = [f"{self.rows} {self.cols}"]
        out += [format(r, f"0{self.cols}b") if self.cols else "" for r in self.data]
        return "\n".join(out) + "\n"

    def row(self, i: int) -> BitVector:
        return BitVector(self.data[i], self.cols)

    def column(self, j: int) -> BitVector:
        shift = self.cols - 1 - j
        return BitVector.from_bits((r >> shift) & 1 for r in self.data)

    def entry(self, i: int, j: int) -> int:
        return (self.data[i] >> (self.cols - 1 - j)) & 1

    def transpose(self) -> BitMatrix:
        return BitMatrix.from_columns([self.row(i) for i in range(self.rows)]) if self.rows else BitMatrix(self.cols, 0, (0,) * self.cols)

    def mul_vec(self, v: BitVector) -> BitVector:
        if v.length != self.cols:
            raise ValueError("dimension mismatch")
        return BitVector.from_bits(bin(r & v.value).count("1") & 1 for r in self.data)


def _rref(data: Sequence[int], cols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form with leftmost-pivot selection.

    Returns the nonzero reduced rows and their pivot columns.
    """
    work = [r for r in data if r]
    pivots: list[int] = []
    reduced: list[int] = []
    for col in range(cols):
        mask = 1 << (cols - 1 - col)
        hit = next((i for i, r in enumerate(work) if r & mask), None)
        if hit is None:
            continue
        p = work.pop(hit)
        work = [r ^ p if r & mask else r for r in work]
        reduced = [r ^ p if r & mask else r for r in reduced]
        reduced.append(p)
        pivots.append(col)
        work = [r for r in work if r]
        if not work:
            break
    return reduced, pivots


def rank(m: BitMatrix) -> int:
    """Dimension of the row space of ``m``."""
    return len(_rref(m.data, m.cols)[1])


def kernel_basis(m: BitMatrix) -> list[BitVector]:
    """Basis of ``{v : m v = 0}``; size is ``cols - rank(m)``."""
    reduced, pivots = _rref(m.data, m.cols)
    pivot_set = set(pivots)
    n = m.cols
    basis = []
    for free in range(n):
        if free in pivot_set:
            continue
        v = 1 << (n - 1 - free)
        fmask = 1 << (n - 1 - free)
        for row, pc in zip(reduced, pivots):
            if row & fmask:
                v |= 1 << (n - 1 - pc)
        basis.append(BitVector(v, n))
    return basis


def has_nontrivial_kernel(rows: Sequence[int], cols: int) -> bool:
    """True iff the packed rows have rank < cols (some nonzero v with M v = 0)."""
    return len(_rref(rows, cols)[1]) < cols


def count_matrices_of_rank(n: int, k: int) -> int:
    """Exact number of n x n GF(2) matrices of rank k."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    num = 1
    den = 1
    for i in range(k):
        num *= ((1 << n) - (1 << i)) ** 2
        den *= (1 << k) - (1 << i)
    return num // den


def secret_sharing_probabilities(n: int = 32, attempts: int = 23) -> tuple[Fraction, Fraction]:
    """Probabilities for the three-party XOR sharing of an n-bit password.

    ``p1``: the two colluding parties learn nothing (the third party's
    random n x n matrix is invertible).  ``p2``: they can guarantee access
    within ``attempts`` guesses, i.e. ``2**rank <= attempts``.
    """
    total = 1 << (n * n)
    p1 = Fraction(count_matrices_of_rank(n, n), total)
    max_rank = min(n, attempts.bit_length() - 1) if attempts >= 1 else -1
    good = sum(count_matrices_of_rank(n, k) for k in range(max_rank + 1))
    return p1, Fraction(good, total)


def log2_fraction(q: Fraction) -> float:
    """log2 of a positive rational, safe for numerators far below float range."""
    if q <= 0:
        raise ValueError("log2 of non-positive value")
    return math.log2(q.numerator) - math.log2(q.denominator)


def decimal_str(q: Fraction, places: int) -> str:
    """Round-half-up decimal rendering with a fixed number of places."""
    sign = "-" if q < 0 else ""
    q = abs(q)
    scaled = (q.numerator * 10**places * 2 + q.denominator) // (2 * q.denominator)
    whole, frac = divmod(scaled, 10**places)
    return f"{sign}{whole}.{frac:0{places}d}" if places else f"{sign}{whole}"
