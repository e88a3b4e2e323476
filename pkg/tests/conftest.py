from __future__ import annotations

from importlib.resources import files
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "repo", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("repo")


@pytest.fixture(scope="session")
def fixture_dir() -> Path:
    return Path(str(files("cryptolab").joinpath("fixtures/v1")))


@pytest.fixture(scope="session")
def smoke_chain():
    """A two-user economy with one planted block after genesis.

    Returns ``(economy, genesis_history, block, block_txs)``.
    """
    from cryptolab.nsucoin.chain import Economy, MiningError, build_transaction, mine_block
    from cryptolab.nsucoin.search import genesis_candidates

    econ = Economy(users=(("Alice", 11, "chamomile"), ("Bob", 17, "tulip")))
    (g, g_txs), = genesis_candidates(econ, 40000)
    alice = next(t for t in g_txs if t.seller.pub_key == 11)
    for v in (2, 4, 6, 8, 10):
        t1 = build_transaction([alice.tx_hash], 11, 17, v, 10 - v)
        t2 = build_transaction([t1.tx_hash], 17, 11, 2, v - 2)
        try:
            block = mine_block(1, g.hash, [t1.tx_hash, t2.tx_hash])
        except MiningError:
            continue
        return econ, [(g, g_txs)], block, [t1, t2]
    raise AssertionError("no minable smoke block")


ACCEPTANCE_LINES: dict[str, str] = {}


def record_criterion(key: str, passed: bool, detail: str) -> None:
    """Store and print one acceptance line; the caller asserts ``passed``."""
    line = f"{key}: {'PASS' if passed else 'FAIL'} - {detail}"
    ACCEPTANCE_LINES[key] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for key in sorted(ACCEPTANCE_LINES, key=lambda k: [int(p) if p.isdigit() else p for p in k.replace(".", " ").split()]):
            terminalreporter.write_line(ACCEPTANCE_LINES[key])
