"""Flower holdings and coin balances implied by a transaction history."""

from __future__ import annotations

from dataclasses import dataclass

from .chain import DEFAULT_ECONOMY, Economy, History


@dataclass(frozen=True)
class FlowerLedger:
    economy: Economy
    flowers: dict[str, dict[str, int]]
    coins: dict[str, int]
    flags: tuple[str, ...]

    def holdings(self, name: str) -> tuple[int, ...]:
        """Counts in the economy's sort order."""
        return tuple(self.flowers[name][s] for s in self.economy.sorts)

    @property
    def ok(self) -> bool:
        return not self.flags


def flower_ledger(history: History, economy: Economy = DEFAULT_ECONOMY) -> FlowerLedger:
    """Replay every purchase: ``value1`` coins buy ``value1 / price`` flowers
    of the seller's sort.  Odd payments and negative stock are flagged."""
    flowers = {name: {s: 0 for s in economy.sorts} for name, _, _ in economy.users}
    for name, _, sort in economy.users:
        flowers[name][sort] = economy.initial_flowers
    unspent: dict[tuple[str, int], int] = {}
    flags = []
    for _, txs in history:
        for t in txs:
            if t.buyer is not None:
                seller = economy.name_of(t.seller.pub_key)
                buyer = economy.name_of(t.buyer.pub_key)
                sort = economy.sort_of(t.seller.pub_key)
                qty, rest = divmod(t.seller.value, economy.flower_price)
                if rest:
                    flags.append(f"{t.tx_hash}: payment {t.seller.value} is not a whole number of flowers")
                flowers[seller][sort] -= qty
                flowers[buyer][sort] += qty
                if flowers[seller][sort] < 0:
                    flags.append(f"{t.tx_hash}: {seller} sells more {sort}s than owned")
                for p in t.input_txs:
                    unspent.pop((p, t.buyer.pub_key), None)
            for pk, v in t.outputs():
                unspent[(t.tx_hash, pk)] = v
    coins = {name: 0 for name, _, _ in economy.users}
    for (_, pk), v in unspent.items():
        coins[economy.name_of(pk)] += v
    return FlowerLedger(economy, flowers, coins, tuple(flags))
