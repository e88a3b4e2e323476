"""Toy proof-of-work coin: primitives, wire format, validation, ledger, search."""

from .chain import (
    DEFAULT_ECONOMY,
    ChainReport,
    Economy,
    build_transaction,
    ctx_hash,
    mine_block,
    minimal_nonce,
    validate_chain,
    validate_raw,
)
from .ledger import FlowerLedger, flower_ledger
from .primitives import (
    RSA_N,
    RSA_PHI,
    dec_to_hex_str,
    derive_private_keys,
    reduced_md5,
    rsa_sign,
    rsa_verify,
    str_to_byte_dec,
)
from .wire import Block, Transaction, WireError, parse_block, parse_transaction, serialize_block, serialize_transaction

__all__ = [
    "DEFAULT_ECONOMY",
    "RSA_N",
    "RSA_PHI",
    "Block",
    "ChainReport",
    "Economy",
    "FlowerLedger",
    "Transaction",
    "WireError",
    "build_transaction",
    "ctx_hash",
    "dec_to_hex_str",
    "derive_private_keys",
    "flower_ledger",
    "mine_block",
    "minimal_nonce",
    "parse_block",
    "parse_transaction",
    "reduced_md5",
    "rsa_sign",
    "rsa_verify",
    "serialize_block",
    "serialize_transaction",
    "str_to_byte_dec",
    "validate_chain",
    "validate_raw",
]
