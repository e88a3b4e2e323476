"""Wire format of transactions and blocks (``key:value`` fields joined by ``;``)."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .primitives import reduced_md5

_HASH = re.compile(r"[0-9a-f]{8}")
_SIG = re.compile(r"[0-9a-f]*")
MAX_VALUE = 10
MAX_NONCE = 40000


class WireError(ValueError):
    """Parse failure carrying a machine-readable ``code``."""

    def __init__(self, code: str, message: str):
        super().__init__(f"{code}: {message}")
        self.code = code


MALFORMED = "MALFORMED"
BAD_HASH = "BAD_HASH"
OUT_OF_RANGE = "OUT_OF_RANGE"


@dataclass(frozen=True)
class Output:
    value: int
    pub_key: int
    sign: str


@dataclass(frozen=True)
class Transaction:
    tx_hash: str
    input_txs: tuple[str, ...]
    seller: Output
    buyer: Optional[Output] = None

    @property
    def info(self) -> str:
        """The hashed part of the wire string (everything after ``txHash``)."""
        s = (
            f"inputTx:{','.join(self.input_txs)};value1:{self.seller.value};"
            f"pubKey1:{self.seller.pub_key};sign1:{self.seller.sign}"
        )
        if self.buyer is not None:
            s += f";value2:{self.buyer.value};pubKey2:{self.buyer.pub_key};sign2:{self.buyer.sign}"
        return s

    @property
    def is_special(self) -> bool:
        return not self.input_txs and self.buyer is None

    def outputs(self) -> list[tuple[int, int]]:
        """``(pub_key, value)`` pairs received in this transaction."""
        out = [(self.seller.pub_key, self.seller.value)]
        if self.buyer is not None:
            out.append((self.buyer.pub_key, self.buyer.value))
        return out

    @classmethod
    def create(cls, input_txs: tuple[str, ...], seller: Output, buyer: Optional[Output] = None) -> Transaction:
        t = cls("", tuple(input_txs), seller, buyer)
        return cls(reduced_md5(t.info), t.input_txs, seller, buyer)

    def __str__(self) -> str:
        return serialize_transaction(self)


def serialize_transaction(t: Transaction) -> str:
    return f"txHash:{t.tx_hash};{t.info}"


def special_transaction(pub_key: int, coins: int = 10) -> Transaction:
    return Transaction.create((), Output(coins, pub_key, ""))


_TX_KEYS_SPECIAL = ["txHash", "inputTx", "value1", "pubKey1", "sign1"]
_TX_KEYS_FULL = _TX_KEYS_SPECIAL + ["value2", "pubKey2", "sign2"]


def _fields(s: str, keys: list[list[str]]) -> dict[str, str]:
    parts = s.split(";")
    names = [p.split(":", 1)[0] for p in parts]
    if names not in keys:
        raise WireError(MALFORMED, f"unexpected field sequence {names}")
    out = {}
    for p in parts:
        k, sep, v = p.partition(":")
        if not sep:
            raise WireError(MALFORMED, f"field without ':' in {p!r}")
        out[k] = v
    return out


def _int_field(fields: dict[str, str], key: str) -> int:
    v = fields[key]
    if not v.isdigit() or (len(v) > 1 and v[0] == "0"):
        raise WireError(MALFORMED, f"{key} is not a canonical decimal: {v!r}")
    return int(v)


def parse_transaction(s: str, check_hash: bool = True) -> Transaction:
    """Parse the exact printed grammar; the hash is recomputed and checked."""
    f = _fields(s, [_TX_KEYS_SPECIAL, _TX_KEYS_FULL])
    h = f["txHash"]
    if not _HASH.fullmatch(h):
        raise WireError(MALFORMED, f"txHash is not 8 lowercase hex chars: {h!r}")
    inputs = tuple(f["inputTx"].split(",")) if f["inputTx"] else ()
    if len(inputs) > 2:
        raise WireError(MALFORMED, "more than two parent transactions")
    for p in inputs:
        if not _HASH.fullmatch(p):
            raise WireError(MALFORMED, f"bad parent hash {p!r}")
    for key in ("sign1", "sign2"):
        if key in f and not _SIG.fullmatch(f[key]):
            raise WireError(MALFORMED, f"{key} is not lowercase hex")
    v1 = _int_field(f, "value1")
    seller = Output(v1, _int_field(f, "pubKey1"), f["sign1"])
    buyer = None
    if "value2" in f:
        buyer = Output(_int_field(f, "value2"), _int_field(f, "pubKey2"), f["sign2"])
    if not 0 < v1 <= MAX_VALUE:
        raise WireError(OUT_OF_RANGE, f"value1={v1} outside 1..{MAX_VALUE}")
    if buyer is not None and not 0 <= buyer.value <= MAX_VALUE:
        raise WireError(OUT_OF_RANGE, f"value2={buyer.value} outside 0..{MAX_VALUE}")
    t = Transaction(h, inputs, seller, buyer)
    if check_hash and reduced_md5(t.info) != h:
        raise WireError(BAD_HASH, f"txHash {h} but content hashes to {reduced_md5(t.info)}")
    return t


@dataclass(frozen=True)
class Block:
    height: int
    prev_hash: str
    ctx_hash: str
    nonce: int

    def __str__(self) -> str:
        return serialize_block(self)

    @property
    def hash(self) -> str:
        return reduced_md5(serialize_block(self))

    def prefix(self) -> str:
        """Serialized block up to and including ``nonce:``."""
        return f"height:{self.height};prevHash:{self.prev_hash};ctxHash:{self.ctx_hash};nonce:"


def serialize_block(b: Block) -> str:
    return f"{b.prefix()}{b.nonce}"


def parse_block(s: str) -> Block:
    f = _fields(s, [["height", "prevHash", "ctxHash", "nonce"]])
    for key in ("prevHash", "ctxHash"):
        if not _HASH.fullmatch(f[key]):
            raise WireError(MALFORMED, f"{key} is not 8 lowercase hex chars")
    nonce = _int_field(f, "nonce")
    if nonce > MAX_NONCE:
        raise WireError(OUT_OF_RANGE, f"nonce {nonce} exceeds {MAX_NONCE}")
    return Block(_int_field(f, "height"), f["prevHash"], f["ctxHash"], nonce)
