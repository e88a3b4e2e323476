"""Zerosum search: distinct inputs whose XOR equals the XOR of their images.

With ``Y_i = E(X_i) ^ X_i`` the condition on a subset ``S`` is
``XOR_{i in S} Y_i = 0``, i.e. the indicator of ``S`` lies in the kernel of
the matrix whose columns are the ``Y_i``.  Random kernel vectors have weight
close to ``pool / 2``, so sampling finds a subset of the wanted size quickly.
"""

from __future__ import annotations

import logging
import random
from functools import reduce
from operator import xor
from typing import Protocol, Sequence

from ..gf2 import BitMatrix, BitVector, kernel_basis

log = logging.getLogger(__name__)


class BlockCipher(Protocol):
    block_bits: int

    def encrypt(self, block: int) -> int: ...


def is_zerosum(cipher: BlockCipher, blocks: Sequence[int]) -> bool:
    """Independent check: distinct blocks with equal input and output XOR."""
    if len(set(blocks)) != len(blocks):
        return False
    lhs = reduce(xor, blocks, 0)
    rhs = reduce(xor, (cipher.encrypt(b) for b in blocks), 0)
    return lhs == rhs


def find_zerosum(
    cipher: BlockCipher,
    count: int = 128,
    pool: int = 256,
    seed: int | None = None,
    trials: int = 100_000,
    max_pools: int = 16,
) -> list[int]:
    """Return ``count`` distinct blocks forming a zerosum for ``cipher``.

    Raises RuntimeError when ``max_pools`` pools (each grown by 25% after an
    exhausted ``trials`` budget) all fail.
    """
    bits = cipher.block_bits
    if count < 1:
        raise ValueError("count must be positive")
    if pool <= count:
        raise ValueError("pool must exceed count")
    if pool > 1 << bits:
        raise ValueError("pool larger than the block space")
    rng = random.Random(seed)
    for attempt in range(max_pools):
        xs = _distinct_blocks(rng, pool, bits)
        ys = [BitVector(cipher.encrypt(x) ^ x, bits) for x in xs]
        basis = kernel_basis(BitMatrix.from_columns(ys))
        if basis:
            for _ in range(trials):
                z = 0
                for v in basis:
                    if rng.getrandbits(1):
                        z ^= v.value
                if bin(z).count("1") == count:
                    chosen = [xs[i] for i in range(pool) if (z >> (pool - 1 - i)) & 1]
                    if is_zerosum(cipher, chosen):
                        return chosen
                    raise AssertionError("kernel vector failed the zerosum check")
        log.info("zerosum attempt %d failed with pool %d; enlarging", attempt, pool)
        pool = min(pool + max(1, pool // 4), 1 << bits)
    raise RuntimeError("no zerosum found within the attempt budget")


def _distinct_blocks(rng: random.Random, k: int, bits: int) -> list[int]:
    if bits <= 20:
        return rng.sample(range(1 << bits), k)
    seen: dict[int, None] = {}
    while len(seen) < k:
        seen.setdefault(rng.getrandbits(bits), None)
    return list(seen)
