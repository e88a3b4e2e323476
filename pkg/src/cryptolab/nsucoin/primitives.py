"""Hashing, number/string codecs and raw RSA for the toy coin."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

RSA_P = 2250339337
RSA_Q = 4044301367
RSA_N = 9101050456842973679
RSA_PHI = (RSA_P - 1) * (RSA_Q - 1)


def reduced_md5(s: str) -> str:
    """First four bytes of MD5 over the UTF-8 encoding, as lowercase hex."""
    return hashlib.md5(s.encode("utf-8")).digest()[:4].hex()


def str_to_byte_dec(s: str) -> int:
    """UTF-8 bytes of ``s`` read as one big-endian integer."""
    return int.from_bytes(s.encode("utf-8"), "big")


def dec_to_hex_str(x: int) -> str:
    """Lowercase hex without prefix or zero padding."""
    if x < 0:
        raise ValueError("negative value")
    return format(x, "x")


def rsa_sign(d: int, msg: int, n: int = RSA_N) -> int:
    if not 0 <= msg < n:
        raise ValueError("message must satisfy 0 <= msg < n")
    return pow(msg, d, n)


def rsa_verify(e: int, msg: int, sig: int, n: int = RSA_N) -> bool:
    if not 0 <= msg < n:
        return False
    return pow(sig, e, n) == msg


@dataclass(frozen=True)
class KeyPair:
    name: str
    e: int
    d: int
    n: int = RSA_N


USER_KEYS: dict[str, int] = {"Alice": 11, "Bob": 17, "Caroline": 199, "Daniel": 5}


def private_exponent(e: int, p: int = RSA_P, q: int = RSA_Q) -> int:
    if p * q != RSA_N:
        raise ValueError("factors do not multiply to the modulus")
    return pow(e, -1, (p - 1) * (q - 1))


def derive_private_keys() -> dict[str, KeyPair]:
    return {name: KeyPair(name, e, private_exponent(e)) for name, e in USER_KEYS.items()}


def signature_message(parents: tuple[str, ...] | list[str], pub_key: int) -> int:
    """``StrToByteDec(Hash(Tx1 + Tx2 + PK))`` for a signed output."""
    return str_to_byte_dec(reduced_md5("".join(parents) + str(pub_key)))


def sign_output(d: int, parents: tuple[str, ...] | list[str], pub_key: int) -> str:
    return dec_to_hex_str(rsa_sign(d, signature_message(parents, pub_key)))


def verify_output(e: int, parents: tuple[str, ...] | list[str], pub_key: int, sig_hex: str) -> bool:
    try:
        sig = int(sig_hex, 16)
    except ValueError:
        return False
    return rsa_verify(e, signature_message(parents, pub_key), sig)
