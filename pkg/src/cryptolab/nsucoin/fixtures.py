"""Loaders for the bundled coin fixtures."""

from __future__ import annotations

import json
import re
from importlib.resources import files
from typing import Any

from .chain import RawBlock

_LINE = re.compile(r"^(Tx\d+|Block \d+):\s*(.*?)\s*$")
_WITH_HASH = re.compile(r"^(.*?)\s+with hash\s+([0-9a-f]{8})$")


def _read(name: str) -> str:
    return files("cryptolab").joinpath(f"fixtures/v1/{name}").read_text(encoding="utf-8")


def load_json(name: str) -> Any:
    return json.loads(_read(name))


def parse_histories(text: str) -> dict[str, list[RawBlock]]:
    """``[section]`` headers, ``TxN:`` lines, and ``Block N: ... with hash h``
    lines closing each block over the transactions listed since the last one."""
    out: dict[str, list[RawBlock]] = {}
    section = None
    pending: list[str] = []
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        if ln.startswith("[") and ln.endswith("]"):
            section = ln[1:-1]
            out[section] = []
            pending = []
            continue
        m = _LINE.match(ln)
        if not m or section is None:
            raise ValueError(f"unrecognised history line: {ln!r}")
        label, body = m.groups()
        if label.startswith("Tx"):
            pending.append(body)
        else:
            wh = _WITH_HASH.match(body)
            block, printed = (wh.group(1), wh.group(2)) if wh else (body, None)
            out[section].append(RawBlock(block, tuple(pending), printed))
            pending = []
    return out


def load_histories(corrected: bool = True) -> dict[str, list[RawBlock]]:
    name = "nsucoin_histories_corrected.txt" if corrected else "nsucoin_histories_verbatim.txt"
    return parse_histories(_read(name))
