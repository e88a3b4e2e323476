"""AES-256 block cipher written from the standard description.

Blocks are 16-byte ``bytes`` or 128-bit ints (big-endian byte order).  No
side-channel hardening is attempted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Union

Block = Union[bytes, int]


def _xtime(a: int) -> int:
    a <<= 1
    return (a ^ 0x11B) & 0xFF if a & 0x100 else a


def _gmul(a: int, b: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        a = _xtime(a)
        b >>= 1
    return r


def _build_sbox() -> tuple[bytes, bytes]:
    inv = [0] * 256
    for a in range(1, 256):
        for b in range(1, 256):
            if _gmul(a, b) == 1:
                inv[a] = b
                break
    sbox = bytearray(256)
    for x in range(256):
        b = inv[x]
        s = b
        for k in range(1, 5):
            s ^= ((b << k) | (b >> (8 - k))) & 0xFF
        sbox[x] = s ^ 0x63
    inv_sbox = bytearray(256)
    for x, y in enumerate(sbox):
        inv_sbox[y] = x
    return bytes(sbox), bytes(inv_sbox)


SBOX, INV_SBOX = _build_sbox()
_MUL = {c: bytes(_gmul(x, c) for x in range(256)) for c in (2, 3, 9, 11, 13, 14)}


def _expand_key(key: bytes) -> list[bytes]:
    if len(key) != 32:
        raise ValueError("AES-256 needs a 32-byte key")
    nk, nr = 8, 14
    words = [key[4 * i:4 * i + 4] for i in range(nk)]
    rcon = 1
    for i in range(nk, 4 * (nr + 1)):
        t = words[i - 1]
        if i % nk == 0:
            t = bytes(SBOX[b] for b in t[1:] + t[:1])
            t = bytes([t[0] ^ rcon]) + t[1:]
            rcon = _xtime(rcon)
        elif i % nk == 4:
            t = bytes(SBOX[b] for b in t)
        words.append(bytes(a ^ b for a, b in zip(words[i - nk], t)))
    return [b"".join(words[4 * r:4 * r + 4]) for r in range(nr + 1)]


def _add(state: bytearray, rk: bytes) -> None:
    for i in range(16):
        state[i] ^= rk[i]


def _shift_rows(s: bytearray, inverse: bool = False) -> bytearray:
    # state is column-major: byte index = 4 * col + row
    out = bytearray(16)
    for c in range(4):
        for r in range(4):
            src = (c + r) % 4 if not inverse else (c - r) % 4
            out[4 * c + r] = s[4 * src + r]
    return out


def _mix_columns(s: bytearray, inverse: bool = False) -> None:
    m = _MUL
    for c in range(4):
        a0, a1, a2, a3 = s[4 * c:4 * c + 4]
        if not inverse:
            s[4 * c + 0] = m[2][a0] ^ m[3][a1] ^ a2 ^ a3
            s[4 * c + 1] = a0 ^ m[2][a1] ^ m[3][a2] ^ a3
            s[4 * c + 2] = a0 ^ a1 ^ m[2][a2] ^ m[3][a3]
            s[4 * c + 3] = m[3][a0] ^ a1 ^ a2 ^ m[2][a3]
        else:
            s[4 * c + 0] = m[14][a0] ^ m[11][a1] ^ m[13][a2] ^ m[9][a3]
            s[4 * c + 1] = m[9][a0] ^ m[14][a1] ^ m[11][a2] ^ m[13][a3]
            s[4 * c + 2] = m[13][a0] ^ m[9][a1] ^ m[14][a2] ^ m[11][a3]
            s[4 * c + 3] = m[11][a0] ^ m[13][a1] ^ m[9][a2] ^ m[14][a3]


def _as_bytes(block: Block) -> bytes:
    if isinstance(block, int):
        if not 0 <= block < 1 << 128:
            raise ValueError("block int must fit in 128 bits")
        return block.to_bytes(16, "big")
    if len(block) != 16:
        raise ValueError("block must be 16 bytes")
    return bytes(block)


@dataclass(frozen=True)
class AES256:
    """AES-256 instance with a fixed key."""

    key: bytes
    round_keys: tuple[bytes, ...] = field(init=False, repr=False)
    block_bits: int = field(default=128, init=False)

    def __post_init__(self):
        object.__setattr__(self, "round_keys", tuple(_expand_key(bytes(self.key))))

    def encrypt_block(self, block: bytes) -> bytes:
        rk = self.round_keys
        s = bytearray(_as_bytes(block))
        _add(s, rk[0])
        for r in range(1, 15):
            s = bytearray(SBOX[b] for b in s)
            s = _shift_rows(s)
            if r != 14:
                _mix_columns(s)
            _add(s, rk[r])
        return bytes(s)

    def decrypt_block(self, block: bytes) -> bytes:
        rk = self.round_keys
        s = bytearray(_as_bytes(block))
        _add(s, rk[14])
        for r in range(13, -1, -1):
            s = _shift_rows(s, inverse=True)
            s = bytearray(INV_SBOX[b] for b in s)
            _add(s, rk[r])
            if r != 0:
                _mix_columns(s, inverse=True)
        return bytes(s)

    def encrypt(self, block: int) -> int:
        """Integer-block interface used by the zerosum search."""
        return int.from_bytes(self.encrypt_block(_as_bytes(block)), "big")

    def decrypt(self, block: int) -> int:
        return int.from_bytes(self.decrypt_block(_as_bytes(block)), "big")


AES0 = AES256(bytes(32))


def aes256_encrypt_zero_key(block: Block) -> bytes:
    return AES0.encrypt_block(_as_bytes(block))


@dataclass(frozen=True)
class FunctionCipher:
    """Adapter turning a plain function on ints into a block cipher."""

    block_bits: int
    encrypt: Callable[[int], int]
