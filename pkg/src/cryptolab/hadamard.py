"""First-order Reed-Muller (Hadamard) key binding with a biometric XOR mask.

A key ``(k_1, ..., k_n, k_{n+1})`` is encoded as the value vector of the
affine function ``k_1 x_1 + ... + k_n x_n + k_{n+1}`` over ``2**n`` inputs.
Enrollment stores ``c = template XOR encode(key)``; a later probe ``b`` is
accepted when ``b XOR c`` decodes close enough to some codeword.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from .gf2 import BitVector

DEFAULT_MAX_FRACTION = Fraction(1, 5)


@dataclass(frozen=True)
class BioKey:
    bits: BitVector

    @property
    def n(self) -> int:
        return self.bits.length - 1

    @classmethod
    def from_str(cls, s: str) -> BioKey:
        return cls(BitVector.from_str(s))

    def __str__(self) -> str:
        return self.bits.to_str()


@dataclass(frozen=True)
class EncryptedTemplate:
    c: BitVector


@dataclass(frozen=True)
class DecodeResult:
    key: Optional[BioKey]
    distance: int
    candidates: tuple[BioKey, ...]

    @property
    def ambiguous(self) -> bool:
        return len(self.candidates) > 1


@dataclass(frozen=True)
class RecoverResult:
    accepted: bool
    key: Optional[BioKey]
    distance: int
    length: int
    ambiguous: bool = False

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.distance, self.length)


def _log2_length(length: int) -> int:
    n = length.bit_length() - 1
    if length < 2 or length != 1 << n:
        raise ValueError(f"word length must be a power of two >= 2, got {length}")
    return n


def encode(key: BioKey) -> BitVector:
    n = key.n
    if n < 1:
        raise ValueError("key must have at least 2 bits")
    a = key.bits.value >> 1
    const = key.bits.value & 1
    bits = (((bin(a & x).count("1") + const) & 1) for x in range(1 << n))
    return BitVector.from_bits(bits)


def spectrum(word: BitVector) -> np.ndarray:
    """Walsh-Hadamard transform of the +-1 image of ``word``."""
    n = _log2_length(word.length)
    w = 1 - 2 * np.fromiter(word, dtype=np.int64, count=1 << n)
    h = 1
    while h < w.size:
        w = w.reshape(-1, 2, h)
        w = np.stack([w[:, 0, :] + w[:, 1, :], w[:, 0, :] - w[:, 1, :]], axis=1).reshape(-1)
        h *= 2
    return w


def decode(word: BitVector, key_filter: Callable[[BioKey], bool] | None = None) -> DecodeResult:
    """Nearest-codeword decoding through the fast transform.

    The largest ``|W(a)|`` picks the linear part ``a``; a negative sign sets
    the constant bit.  Equal-distance winners are all reported and ``key``
    is left as None.  ``key_filter`` restricts the admissible keys.
    """
    n = _log2_length(word.length)
    w = spectrum(word)
    size = 1 << n
    # distance to codeword (a, c) is (2^n - (-1)^c W(a)) / 2
    dist0 = (size - w) // 2
    dist1 = (size + w) // 2
    if key_filter is None:
        best = int(min(dist0.min(), dist1.min()))
        hits = [(int(a), 0) for a in np.flatnonzero(dist0 == best)]
        hits += [(int(a), 1) for a in np.flatnonzero(dist1 == best)]
        cands = [BioKey(BitVector((a << 1) | c, n + 1)) for a, c in sorted(hits)]
    else:
        scored = []
        for a in range(size):
            for c, d in ((0, dist0[a]), (1, dist1[a])):
                k = BioKey(BitVector((a << 1) | c, n + 1))
                if key_filter(k):
                    scored.append((int(d), k))
        if not scored:
            raise ValueError("key filter rejects every key")
        best = min(d for d, _ in scored)
        cands = [k for d, k in scored if d == best]
    key = cands[0] if len(cands) == 1 else None
    return DecodeResult(key, best, tuple(cands))


def brute_force_decode(word: BitVector) -> int:
    """Minimum distance to any codeword, by listing all ``2**(n+1)`` codewords."""
    n = _log2_length(word.length)
    return min(word.distance(encode(BioKey(BitVector(k, n + 1)))) for k in range(1 << (n + 1)))


def enroll(template: BitVector, key: BioKey) -> EncryptedTemplate:
    s = encode(key)
    if template.length != s.length:
        raise ValueError(f"template has {template.length} bits, codeword has {s.length}")
    return EncryptedTemplate(template ^ s)


def recover(
    probe: BitVector,
    c: EncryptedTemplate,
    max_fraction: Fraction | float = DEFAULT_MAX_FRACTION,
    key_filter: Callable[[BioKey], bool] | None = None,
) -> RecoverResult:
    """Decode ``probe XOR c``; accept iff distance / length <= ``max_fraction``."""
    if probe.length != c.c.length:
        raise ValueError("probe and encrypted template lengths differ")
    res = decode(probe ^ c.c, key_filter)
    ok = res.key is not None and Fraction(res.distance, probe.length) <= Fraction(max_fraction)
    return RecoverResult(ok, res.key if ok else None, res.distance, probe.length, res.ambiguous)


def odd_parity(key: BioKey) -> bool:
    return key.bits.weight() % 2 == 1


def word_at_distance(center: BitVector, dist: int, rng: random.Random) -> BitVector:
    """``center`` with exactly ``dist`` random positions flipped."""
    flips = rng.sample(range(center.length), dist)
    mask = 0
    for p in flips:
        mask |= 1 << (center.length - 1 - p)
    return BitVector(center.value ^ mask, center.length)


def synth_bank_fixture(
    key: BioKey,
    genuine_distance: int,
    impostor_distance: int,
    seed: int = 0,
) -> dict[str, BitVector]:
    """Build ``(c, b_genuine, b_impostor)`` realising the requested distances.

    ``b_genuine XOR c`` lies at ``genuine_distance`` from ``encode(key)``;
    ``b_impostor XOR c`` has nearest-codeword distance ``impostor_distance``.
    """
    rng = random.Random(seed)
    length = 1 << key.n
    template = BitVector(rng.getrandbits(length), length)
    c = enroll(template, key).c
    b_genuine = template ^ (word_at_distance(encode(key), genuine_distance, rng) ^ encode(key))
    while True:
        s = BitVector(rng.getrandbits(length), length)
        r = decode(s)
        if r.distance == impostor_distance and not r.ambiguous:
            break
    return {"c": c, "b_genuine": b_genuine, "b_impostor": s ^ c, "template": template}
