"""Block mining and full validation of transaction histories.

Coins live in outputs keyed by ``(tx_hash, recipient public key)``.  A
transaction spends the buyer's outputs in its 1-2 parents and splits the
total between seller (``value1``) and buyer (``value2``).  Parents must be
verified by an earlier block, or appear earlier in the same block and be
based only on verified transactions themselves.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .primitives import derive_private_keys, reduced_md5, verify_output, USER_KEYS
from .wire import MAX_NONCE, Block, Transaction, WireError, parse_block, parse_transaction, special_transaction

GENESIS_PREV = "00000000"
POW_PREFIX = "0000"

# validation issue codes
BAD_HASH = "BAD_HASH"
BAD_SIGNATURE = "BAD_SIGNATURE"
DOUBLE_SPEND = "DOUBLE_SPEND"
VALUE_MISMATCH = "VALUE_MISMATCH"
UNKNOWN_PARENT = "UNKNOWN_PARENT"
UNVERIFIED_PARENT = "UNVERIFIED_PARENT"
SAME_PARTY = "SAME_PARTY"
UNKNOWN_KEY = "UNKNOWN_KEY"
DUPLICATE_TX = "DUPLICATE_TX"
MALFORMED = "MALFORMED"
BAD_GENESIS = "BAD_GENESIS"
BLOCK_SIZE = "BLOCK_SIZE"
BAD_LINK = "BAD_LINK"
BAD_CTX = "BAD_CTX"
BAD_POW = "BAD_POW"
NONCE_NOT_MINIMAL = "NONCE_NOT_MINIMAL"
BAD_HEIGHT = "BAD_HEIGHT"
NO_NONCE = "NO_NONCE"


@dataclass(frozen=True)
class Economy:
    """Participants and the flower market rules."""

    users: tuple[tuple[str, int, str], ...] = (
        ("Alice", 11, "chamomile"),
        ("Bob", 17, "tulip"),
        ("Caroline", 199, "gerbera"),
        ("Daniel", 5, "rose"),
    )
    initial_coins: int = 10
    initial_flowers: int = 5
    flower_price: int = 2
    max_block_txs: int = 4

    @property
    def pub_keys(self) -> tuple[int, ...]:
        return tuple(u[1] for u in self.users)

    def name_of(self, pk: int) -> str:
        for name, key, _ in self.users:
            if key == pk:
                return name
        raise KeyError(pk)

    def sort_of(self, pk: int) -> str:
        for _, key, sort in self.users:
            if key == pk:
                return sort
        raise KeyError(pk)

    @property
    def sorts(self) -> tuple[str, ...]:
        return tuple(u[2] for u in self.users)

    def specials(self) -> list[Transaction]:
        return [special_transaction(pk, self.initial_coins) for pk in self.pub_keys]


DEFAULT_ECONOMY = Economy()


def private_keys() -> dict[int, int]:
    """Public exponent -> private exponent for every known user."""
    return {kp.e: kp.d for kp in derive_private_keys().values()}


def ctx_hash(tx_hashes: Sequence[str]) -> str:
    return reduced_md5("".join(tx_hashes))


def minimal_nonce(prefix: str, max_nonce: int = MAX_NONCE, start: int = 0) -> Optional[int]:
    """Smallest nonce in ``start..max_nonce`` whose block hash starts with ``0000``."""
    for nonce in range(start, max_nonce + 1):
        if reduced_md5(prefix + str(nonce)).startswith(POW_PREFIX):
            return nonce
    return None


class MiningError(RuntimeError):
    code = NO_NONCE


def mine_block(height: int, prev_hash: str, tx_hashes: Sequence[str], max_nonce: int = MAX_NONCE) -> Block:
    if not 1 <= len(tx_hashes) <= DEFAULT_ECONOMY.max_block_txs:
        raise ValueError("a block verifies 1 to 4 transactions")
    b = Block(height, prev_hash, ctx_hash(tx_hashes), 0)
    nonce = minimal_nonce(b.prefix(), max_nonce)
    if nonce is None:
        raise MiningError(f"{NO_NONCE}: no nonce in 0..{max_nonce} for {b.prefix()}")
    return Block(height, prev_hash, b.ctx_hash, nonce)


@dataclass(frozen=True)
class Issue:
    code: str
    height: int
    tx: str
    message: str

    def __str__(self) -> str:
        where = f"block {self.height}" + (f", tx {self.tx}" if self.tx else "")
        return f"{self.code} ({where}): {self.message}"


@dataclass
class ChainState:
    """Mutable replay state; ``issues`` collects every violation found."""

    economy: Economy = DEFAULT_ECONOMY
    unspent: dict[tuple[str, int], int] = field(default_factory=dict)
    spent: set[tuple[str, int]] = field(default_factory=set)
    received: dict[tuple[str, int], int] = field(default_factory=dict)
    height_of: dict[str, int] = field(default_factory=dict)
    txs: dict[str, Transaction] = field(default_factory=dict)
    blocks: list[Block] = field(default_factory=list)
    issues: list[Issue] = field(default_factory=list)

    @property
    def height(self) -> int:
        return len(self.blocks)

    def _issue(self, code: str, tx: str, msg: str) -> None:
        self.issues.append(Issue(code, self.height, tx, msg))

    def _parent_ok(self, p: str, in_block: dict[str, Transaction]) -> bool:
        if p in self.height_of:
            return True
        if p in in_block:
            return all(q in self.height_of for q in in_block[p].input_txs)
        return False

    def verify_transaction(self, t: Transaction, in_block: dict[str, Transaction]) -> bool:
        """Check one purchase against the current state; record issues."""
        n_before = len(self.issues)
        h = t.tx_hash
        if reduced_md5(t.info) != h:
            self._issue(BAD_HASH, h, f"content hashes to {reduced_md5(t.info)}")
        if h in self.txs or h in in_block:
            self._issue(DUPLICATE_TX, h, "transaction already recorded")
        if t.is_special or t.buyer is None or not 1 <= len(t.input_txs) <= 2:
            self._issue(MALFORMED, h, "a purchase needs 1-2 parents and buyer info")
            return False
        if len(set(t.input_txs)) != len(t.input_txs):
            self._issue(MALFORMED, h, "repeated parent")
        buyer, seller = t.buyer.pub_key, t.seller.pub_key
        keys = self.economy.pub_keys
        if buyer not in keys or seller not in keys:
            self._issue(UNKNOWN_KEY, h, "unknown public key")
            return False
        if buyer == seller:
            self._issue(SAME_PARTY, h, "seller and buyer coincide")
        total = 0
        for p in t.input_txs:
            if p not in self.txs and p not in in_block:
                self._issue(UNKNOWN_PARENT, h, f"parent {p} is unknown")
                continue
            if not self._parent_ok(p, in_block):
                self._issue(UNVERIFIED_PARENT, h, f"parent {p} is neither verified nor based on verified transactions")
            key = (p, buyer)
            if key in self.spent:
                self._issue(DOUBLE_SPEND, h, f"output of {p} to {buyer} already spent")
            elif key not in self.unspent:
                self._issue(VALUE_MISMATCH, h, f"buyer {buyer} received nothing in {p}")
            else:
                total += self.unspent[key]
        if t.seller.value + t.buyer.value != total:
            self._issue(VALUE_MISMATCH, h, f"values {t.seller.value}+{t.buyer.value} != received {total}")
        for out in (t.seller, t.buyer):
            if not verify_output(buyer, t.input_txs, out.pub_key, out.sign):
                self._issue(BAD_SIGNATURE, h, f"signature for pubKey {out.pub_key} does not verify under buyer key {buyer}")
        return len(self.issues) == n_before

    def _record(self, t: Transaction) -> None:
        for p in t.input_txs:
            key = (p, t.buyer.pub_key)
            if key in self.unspent:
                del self.unspent[key]
                self.spent.add(key)
        for pk, v in t.outputs():
            self.unspent[(t.tx_hash, pk)] = v
            self.received[(t.tx_hash, pk)] = v

    def apply_block(self, block: Block, txs: Sequence[Transaction], check_pow: bool = True) -> bool:
        n_before = len(self.issues)
        h = self.height
        if block.height != h:
            self._issue(BAD_HEIGHT, "", f"block height {block.height}, expected {h}")
        prev = self.blocks[-1].hash if self.blocks else GENESIS_PREV
        if block.prev_hash != prev:
            self._issue(BAD_LINK, "", f"prevHash {block.prev_hash}, expected {prev}")
        if ctx_hash([t.tx_hash for t in txs]) != block.ctx_hash:
            self._issue(BAD_CTX, "", f"ctxHash {block.ctx_hash} but transactions hash to {ctx_hash([t.tx_hash for t in txs])}")
        if check_pow:
            if not block.hash.startswith(POW_PREFIX):
                self._issue(BAD_POW, "", f"block hash {block.hash} lacks the {POW_PREFIX} prefix")
            else:
                m = minimal_nonce(block.prefix(), block.nonce)
                if m != block.nonce:
                    self._issue(NONCE_NOT_MINIMAL, "", f"nonce {block.nonce} but {m} already works")
        if h == 0:
            self._apply_genesis(txs)
        else:
            if not 1 <= len(txs) <= self.economy.max_block_txs:
                self._issue(BLOCK_SIZE, "", f"{len(txs)} transactions in one block")
            in_block: dict[str, Transaction] = {}
            for t in txs:
                self.verify_transaction(t, in_block)
                if t.buyer is not None:
                    self._record(t)
                in_block[t.tx_hash] = t
        for t in txs:
            self.txs.setdefault(t.tx_hash, t)
            self.height_of.setdefault(t.tx_hash, h)
        self.blocks.append(block)
        return len(self.issues) == n_before

    def _apply_genesis(self, txs: Sequence[Transaction]) -> None:
        want = {t.tx_hash for t in self.economy.specials()}
        got = [t.tx_hash for t in txs]
        if sorted(got) != sorted(want) or any(not t.is_special for t in txs):
            self._issue(BAD_GENESIS, "", "first block must verify exactly the special transactions")
        for t in txs:
            if reduced_md5(t.info) != t.tx_hash:
                self._issue(BAD_HASH, t.tx_hash, "special transaction hash mismatch")
            self._record_special(t)

    def _record_special(self, t: Transaction) -> None:
        for pk, v in t.outputs():
            self.unspent[(t.tx_hash, pk)] = v
            self.received[(t.tx_hash, pk)] = v

    def balances(self) -> dict[int, int]:
        out = {pk: 0 for pk in self.economy.pub_keys}
        for (_, pk), v in self.unspent.items():
            out[pk] = out.get(pk, 0) + v
        return out


History = list[tuple[Block, list[Transaction]]]


@dataclass(frozen=True)
class ChainReport:
    issues: tuple[Issue, ...]
    state: ChainState

    @property
    def ok(self) -> bool:
        return not self.issues

    def codes(self) -> set[str]:
        return {i.code for i in self.issues}


def validate_chain(history: History, economy: Economy = DEFAULT_ECONOMY, check_pow: bool = True) -> ChainReport:
    st = ChainState(economy)
    for block, txs in history:
        st.apply_block(block, txs, check_pow)
    return ChainReport(tuple(st.issues), st)


@dataclass(frozen=True)
class RawBlock:
    """A block as transcribed: raw strings plus the printed block hash."""

    block: str
    txs: tuple[str, ...]
    printed_hash: Optional[str] = None


def parse_history(raw: Sequence[RawBlock]) -> tuple[History, list[Issue]]:
    """Parse raw strings; unparsable lines become issues instead of exceptions."""
    history: History = []
    issues = []
    for h, rb in enumerate(raw):
        txs = []
        for s in rb.txs:
            try:
                txs.append(parse_transaction(s))
            except WireError as e:
                issues.append(Issue(e.code, h, s[:20], str(e)))
        try:
            block = parse_block(rb.block)
        except WireError as e:
            issues.append(Issue(e.code, h, "", str(e)))
            continue
        history.append((block, txs))
    return history, issues


def validate_raw(raw: Sequence[RawBlock], economy: Economy = DEFAULT_ECONOMY) -> ChainReport:
    history, issues = parse_history(raw)
    rep = validate_chain(history, economy)
    extra = []
    for h, rb in enumerate(raw):
        if rb.printed_hash is not None and h < len(history) and history[h][0].hash != rb.printed_hash:
            extra.append(Issue("PRINTED_HASH", h, "", f"printed {rb.printed_hash}, computed {history[h][0].hash}"))
    return ChainReport(tuple(issues) + rep.issues + tuple(extra), rep.state)


def build_transaction(
    parents: Sequence[str], buyer: int, seller: int, value1: int, value2: int, keys: Optional[dict[int, int]] = None
) -> Transaction:
    """Create and sign a purchase with the buyer's private key."""
    from .primitives import sign_output
    from .wire import Output

    keys = keys or private_keys()
    d = keys[buyer]
    parents = tuple(parents)
    return Transaction.create(
        parents,
        Output(value1, seller, sign_output(d, parents, seller)),
        Output(value2, buyer, sign_output(d, parents, buyer)),
    )


__all__ = [
    "USER_KEYS",
    "ChainReport",
    "ChainState",
    "Economy",
    "History",
    "Issue",
    "RawBlock",
    "build_transaction",
    "ctx_hash",
    "mine_block",
    "minimal_nonce",
    "parse_history",
    "validate_chain",
    "validate_raw",
]
