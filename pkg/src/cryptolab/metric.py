"""Metric complements of subsets of the Boolean cube.

Sets are stored as frozensets of packed ints (the same packing as
:class:`~cryptolab.gf2.BitVector`).  Every operation that needs distances
to a set computes the full distance map ``y -> d(y, X)`` over all ``2**n``
points, so dimensions are capped at :data:`MAX_DIM`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional, Union

import numpy as np

from .gf2 import BitVector

MAX_DIM = 24

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CubeSet:
    n: int
    members: frozenset[int]

    def __post_init__(self):
        if not self.members:
            raise ValueError("a cube set must be non-empty")
        if self.n < 1:
            raise ValueError("dimension must be positive")
        if any(not 0 <= m < 1 << self.n for m in self.members):
            raise ValueError(f"member outside the {self.n}-cube")

    @classmethod
    def from_vectors(cls, vectors: Iterable[BitVector]) -> CubeSet:
        vs = list(vectors)
        if not vs:
            raise ValueError("a cube set must be non-empty")
        n = vs[0].length
        if any(v.length != n for v in vs):
            raise ValueError("members must share one length")
        return cls(n, frozenset(v.value for v in vs))

    @classmethod
    def from_strings(cls, lines: Iterable[str]) -> CubeSet:
        return cls.from_vectors(BitVector.from_str(s) for s in lines if s.strip())

    @classmethod
    def from_text(cls, text: str) -> CubeSet:
        """One binary string per line; blank lines and ``#`` comments skipped."""
        return cls.from_strings(ln for ln in text.splitlines() if not ln.lstrip().startswith("#"))

    @classmethod
    def load(cls, path: Union[str, Path]) -> CubeSet:
        return cls.from_text(Path(path).read_text())

    def to_text(self) -> str:
        return "".join(BitVector(m, self.n).to_str() + "\n" for m in sorted(self.members))

    def vectors(self) -> list[BitVector]:
        return [BitVector(m, self.n) for m in sorted(self.members)]

    def __contains__(self, v: BitVector | int) -> bool:
        return (v.value if isinstance(v, BitVector) else v) in self.members

    def __len__(self) -> int:
        return len(self.members)


def _check_dim(n: int) -> None:
    if n > MAX_DIM:
        raise ValueError(f"dimension {n} exceeds the exhaustive-sweep limit {MAX_DIM}")


def distance_map(X: CubeSet) -> np.ndarray:
    """``d(y, X)`` for every ``y`` in the cube, indexed by packed ``y``.

    One relaxation pass per coordinate suffices because Hamming distance is
    a sum of independent per-coordinate costs.
    """
    _check_dim(X.n)
    size = 1 << X.n
    d = np.full(size, X.n + 1, dtype=np.int16)
    d[np.fromiter(X.members, dtype=np.int64)] = 0
    for bit in range(X.n):
        v = d.reshape(-1, 2, 1 << bit)
        lo = v[:, 0, :].copy()
        np.minimum(v[:, 0, :], v[:, 1, :] + 1, out=v[:, 0, :])
        np.minimum(v[:, 1, :], lo + 1, out=v[:, 1, :])
    return d


def distance_to_set(y: BitVector, X: CubeSet) -> int:
    if y.length != X.n:
        raise ValueError(f"vector length {y.length} differs from dimension {X.n}")
    return min(bin(y.value ^ m).count("1") for m in X.members)


def covering_radius(X: CubeSet) -> int:
    return int(distance_map(X).max())


@dataclass(frozen=True)
class Complement:
    members: CubeSet
    covering_radius: int


def metric_complement_with_radius(X: CubeSet) -> Complement:
    d = distance_map(X)
    r = int(d.max())
    pts = np.flatnonzero(d == r)
    return Complement(CubeSet(X.n, frozenset(int(p) for p in pts)), r)


def metric_complement(X: CubeSet) -> CubeSet:
    """All points at the covering radius of ``X``."""
    return metric_complement_with_radius(X).members


def is_metrically_regular(X: CubeSet) -> bool:
    return metric_complement(metric_complement(X)) == X


def set_distance(A: CubeSet, B: CubeSet) -> int:
    """``min d(a, b)`` over ``a in A``, ``b in B``."""
    d = distance_map(A)
    return int(d[np.fromiter(B.members, dtype=np.int64)].min())


@dataclass(frozen=True)
class RegularTrace:
    trace: tuple[CubeSet, ...]
    index: int

    @property
    def pair(self) -> tuple[CubeSet, CubeSet]:
        return self.trace[self.index], self.trace[self.index + 1]


def iterate_to_regular(X: CubeSet, max_steps: int = 64) -> RegularTrace:
    """Complement repeatedly until ``X_M`` equals its double complement.

    Returns the trace ``X_0, X_1, ...`` (ending at ``X_{M+2}``) and ``M``.
    """
    trace = [X]
    while len(trace) < 3:
        trace.append(metric_complement(trace[-1]))
    for m in range(max_steps):
        if trace[m + 2] == trace[m]:
            return RegularTrace(tuple(trace), m)
        trace.append(metric_complement(trace[-1]))
    raise RuntimeError(f"no regular set within {max_steps} complementations")


@dataclass(frozen=True)
class Counterexample:
    x: BitVector
    dist_a: int
    dist_b: int
    expected: int

    @property
    def total(self) -> int:
        return self.dist_a + self.dist_b


@dataclass(frozen=True)
class CryptosystemReport:
    B: CubeSet
    d: int
    counterexample: Optional[Counterexample]
    violations: int

    @property
    def correct(self) -> bool:
        return self.counterexample is None


def cryptosystem_check(A: CubeSet) -> CryptosystemReport:
    """Sweep every ``x`` and test ``d(x, A) + d(x, B) == d(A, B)``.

    ``B`` is the metric complement of ``A``.  The first violating ``x`` in
    ascending order is reported, together with the total violation count.
    """
    if not is_metrically_regular(A):
        raise ValueError("set A is not metrically regular")
    comp = metric_complement_with_radius(A)
    B = comp.members
    da = distance_map(A)
    db = distance_map(B)
    d = comp.covering_radius
    bad = np.flatnonzero(da.astype(np.int32) + db != d)
    if bad.size == 0:
        return CryptosystemReport(B, d, None, 0)
    x = int(bad[0])
    ce = Counterexample(BitVector(x, A.n), int(da[x]), int(db[x]), d)
    return CryptosystemReport(B, d, ce, int(bad.size))


def check_point(A: CubeSet, B: CubeSet, x: BitVector) -> Counterexample:
    """Distances of one ``x`` to both sets, with ``d(A, B)`` as the target."""
    return Counterexample(x, distance_to_set(x, A), distance_to_set(x, B), set_distance(A, B))


def small_dimension_sweep(n: int) -> Optional[tuple[CubeSet, Counterexample]]:
    """Try every non-empty subset of the ``n``-cube; return the first regular
    set whose cryptosystem fails, or None.  Feasible for ``n <= 4``."""
    if n > 4:
        raise ValueError("exhaustive subset sweep only supported for n <= 4")
    size = 1 << n
    for mask in range(1, 1 << size):
        A = CubeSet(n, frozenset(i for i in range(size) if mask >> i & 1))
        if not is_metrically_regular(A):
            continue
        rep = cryptosystem_check(A)
        if rep.counterexample is not None:
            return A, rep.counterexample
    return None


def ball(center: BitVector, radius: int) -> CubeSet:
    n = center.length
    _check_dim(n)
    return CubeSet(n, frozenset(y for y in range(1 << n) if bin(y ^ center.value).count("1") <= radius))
