"""Latin-square challenge-response authentication and its reconstruction attack.

A challenge ``(a, b, c, d)`` is answered by ``t3 = s_d(s_c(s_b(a)))`` where
``s_j`` is column ``j`` read as a map row -> entry.  Full batteries of
queries expose compositions of these column permutations; expressing every
column through column 0 leaves a search over the single unknown ``s_0``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional, Sequence, Union

Perm = tuple[int, ...]


@dataclass(frozen=True)
class LatinSquare:
    n: int
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.cells) != self.n or any(len(r) != self.n for r in self.cells):
            raise ValueError("square must be n x n")
        if not is_latin(self.cells):
            raise ValueError("not a Latin square")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> LatinSquare:
        return cls(len(rows), tuple(tuple(int(v) for v in r) for r in rows))

    @classmethod
    def from_text(cls, text: str) -> LatinSquare:
        """``n`` lines of ``n`` digits (separators optional); ``#`` comments skipped."""
        rows = []
        for ln in text.splitlines():
            ln = ln.split("#", 1)[0]
            digits = [int(ch) for ch in ln if ch.isdigit()] if " " not in ln.strip() else [int(t) for t in ln.split()]
            if digits:
                rows.append(digits)
        return cls.from_rows(rows)

    @classmethod
    def load(cls, path: Union[str, Path]) -> LatinSquare:
        return cls.from_text(Path(path).read_text())

    def to_text(self) -> str:
        sep = "" if self.n <= 10 else " "
        return "".join(sep.join(str(v) for v in r) + "\n" for r in self.cells)

    def column(self, j: int) -> Perm:
        """Column ``j`` as the permutation row -> entry."""
        return tuple(self.cells[r][j] for r in range(self.n))

    @classmethod
    def from_columns(cls, cols: Sequence[Perm]) -> LatinSquare:
        n = len(cols)
        return cls.from_rows([[cols[j][r] for j in range(n)] for r in range(n)])


def is_latin(cells: Sequence[Sequence[int]]) -> bool:
    n = len(cells)
    if any(len(r) != n for r in cells):
        return False
    full = set(range(n))
    if any(set(r) != full for r in cells):
        return False
    return all({cells[r][j] for r in range(n)} == full for j in range(n))


def cyclic_square(n: int) -> LatinSquare:
    return LatinSquare.from_rows([[(i + j) % n for j in range(n)] for i in range(n)])


def random_latin_square(n: int, rng: random.Random) -> LatinSquare:
    """Row-by-row construction: each row is a random perfect matching of
    columns to still-unused symbols (always extendable by Hall's theorem),
    followed by random row, column and symbol relabelling."""
    used = [set() for _ in range(n)]  # symbols already used per column
    rows = []
    for _ in range(n):
        match: dict[int, int] = {}  # symbol -> column

        def augment(col: int, seen: set[int]) -> bool:
            syms = [s for s in range(n) if s not in used[col]]
            rng.shuffle(syms)
            for s in syms:
                if s in seen:
                    continue
                seen.add(s)
                if s not in match or augment(match[s], seen):
                    match[s] = col
                    return True
            return False

        cols = list(range(n))
        rng.shuffle(cols)
        for col in cols:
            if not augment(col, set()):
                raise AssertionError("Latin rectangle failed to extend")
        row = [0] * n
        for s, col in match.items():
            row[col] = s
            used[col].add(s)
        rows.append(row)
    rp, cp, sp = (rng.sample(range(n), n) for _ in range(3))
    return LatinSquare.from_rows([[sp[rows[rp[i]][cp[j]]] for j in range(n)] for i in range(n)])


@dataclass(frozen=True)
class Challenge:
    a: int
    b: int
    c: int
    d: int

    def validate(self, n: int) -> None:
        if not all(0 <= v < n for v in (self.a, self.b, self.c, self.d)):
            raise ValueError(f"challenge digits must lie in 0..{n - 1}")
        if self.a == self.b or self.b == self.c or self.c == self.d:
            raise ValueError("challenge needs a != b, b != c, c != d")

    @classmethod
    def parse(cls, text: str) -> Challenge:
        ds = [int(ch) for ch in text if ch.isdigit()]
        if len(ds) != 4:
            raise ValueError("challenge must have four digits")
        return cls(*ds)

    def __str__(self) -> str:
        return f"{self.a}{self.b}{self.c}{self.d}"


def respond(L: LatinSquare, q: Challenge) -> int:
    """Direct table walk: three lookups row -> entry in columns b, c, d."""
    q.validate(L.n)
    t1 = L.cells[q.a][q.b]
    t2 = L.cells[t1][q.c]
    return L.cells[t2][q.d]


def respond_steps(L: LatinSquare, q: Challenge) -> tuple[int, int, int]:
    q.validate(L.n)
    t1 = L.cells[q.a][q.b]
    t2 = L.cells[t1][q.c]
    return t1, t2, L.cells[t2][q.d]


def compose(*perms: Perm) -> Perm:
    """``compose(f, g, h)(x) = f(g(h(x)))``."""
    n = len(perms[0])
    out = list(range(n))
    for p in reversed(perms):
        out = [p[x] for x in out]
    return tuple(out)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for x, y in enumerate(p):
        inv[y] = x
    return tuple(inv)


def respond_by_composition(L: LatinSquare, q: Challenge) -> int:
    q.validate(L.n)
    return compose(L.column(q.d), L.column(q.c), L.column(q.b))[q.a]


Oracle = Callable[[Challenge], int]


@dataclass
class QueryLog:
    oracle: Oracle
    n: int
    entries: list[tuple[Challenge, int]] = field(default_factory=list)

    def ask(self, q: Challenge) -> int:
        q.validate(self.n)
        t = self.oracle(q)
        self.entries.append((q, t))
        return t

    def __len__(self) -> int:
        return len(self.entries)


def _battery(log: QueryLog, b: int, c: int, d: int) -> Perm:
    """``s_d s_c s_b`` from the ``n - 1`` queries with ``a != b``; the image
    of ``a = b`` is the single value left over."""
    n = log.n
    img = {a: log.ask(Challenge(a, b, c, d)) for a in range(n) if a != b}
    missing = set(range(n)) - set(img.values())
    if len(missing) != 1:
        raise ValueError("oracle answers are not consistent with a Latin square")
    img[b] = missing.pop()
    return tuple(img[a] for a in range(n))


def relative_permutation(log: QueryLog, i: int, j: int) -> Perm:
    """``s_j^{-1} s_i`` from two batteries (``2 (n - 1)`` queries)."""
    c, d = sorted(set(range(log.n)) - {i, j})[:2]
    forward = _battery(log, i, c, d)  # s_d s_c s_i
    back = _battery(log, j, c, d)  # s_d s_c s_j
    return compose(inverse(back), forward)


def _solve_base(n: int, inv_tau: Sequence[Perm], constraints: Sequence[tuple[int, int, int, int, int]]) -> list[Perm]:
    """All ``s_0`` consistent with every observed answer.

    Columns are ``s_j = s_0 o tau_j^{-1}``.  This is an exhaustive search
    over ``s_0``: branches are cut as soon as a fully evaluable answer
    disagrees, and an answer whose last lookup is unknown forces that value.
    """
    sols: list[Perm] = []

    def propagate(S: list[int], used: list[bool]) -> bool:
        changed = True
        while changed:
            changed = False
            for a, b, c, d, t in constraints:
                v = S[inv_tau[b][a]]
                if v < 0:
                    continue
                v = S[inv_tau[c][v]]
                if v < 0:
                    continue
                u = inv_tau[d][v]
                v = S[u]
                if v < 0:
                    if used[t]:
                        return False
                    S[u] = t
                    used[t] = True
                    changed = True
                elif v != t:
                    return False
        return True

    def search(S: list[int], used: list[bool]) -> None:
        if not propagate(S, used):
            return
        try:
            x = S.index(-1)
        except ValueError:
            sols.append(tuple(S))
            return
        for y in range(n):
            if not used[y]:
                S2, u2 = S.copy(), used.copy()
                S2[x] = y
                u2[y] = True
                search(S2, u2)

    search([-1] * n, [False] * n)
    return sols


def sweep_bases(n: int, inv_tau: Sequence[Perm], constraints: Sequence[tuple[int, int, int, int, int]]) -> list[Perm]:
    """Literal sweep over all ``n!`` candidates for ``s_0`` (no pruning)."""
    from itertools import permutations

    out = []
    for s0 in permutations(range(n)):
        cols = [compose(s0, inv_tau[j]) for j in range(n)]
        if all(cols[d][cols[c][cols[b][a]]] == t for a, b, c, d, t in constraints):
            out.append(s0)
    return out


@dataclass(frozen=True)
class Reconstruction:
    square: Optional[LatinSquare]
    survivors: tuple[LatinSquare, ...]
    queries: tuple[tuple[Challenge, int], ...]
    relation_queries: int

    @property
    def unique(self) -> bool:
        return len(self.survivors) == 1


def random_challenge(n: int, rng: random.Random) -> Challenge:
    while True:
        q = Challenge(*(rng.randrange(n) for _ in range(4)))
        if q.a != q.b and q.b != q.c and q.c != q.d:
            return q


def all_challenges(n: int) -> list[Challenge]:
    return [
        Challenge(a, b, c, d)
        for a in range(n) for b in range(n) for c in range(n) for d in range(n)
        if a != b and b != c and c != d
    ]


def reconstruct(oracle: Oracle, n: int = 10, verification: int = 20, seed: int = 0) -> Reconstruction:
    """Recover a hidden Latin square from challenge-response access.

    Uses ``2 (n - 1)`` queries per column relation (``n - 1`` relations),
    then ``verification`` random challenges.  When several squares remain,
    challenges that separate them are issued until one is left or no
    challenge distinguishes the rest (then all survivors are reported).
    """
    if n < 4:
        raise ValueError("order must be at least 4 so that c, d outside {i, j} exist")
    rng = random.Random(seed)
    log = QueryLog(oracle, n)
    inv_tau: list[Perm] = [tuple(range(n))]
    for j in range(1, n):
        tau = relative_permutation(log, 0, j)  # s_j^{-1} s_0
        inv_tau.append(inverse(tau))
    relation_queries = len(log)
    for _ in range(verification):
        log.ask(random_challenge(n, rng))
    cons = [(q.a, q.b, q.c, q.d, t) for q, t in log.entries]
    bases = _solve_base(n, inv_tau, cons)
    squares = [LatinSquare.from_columns([compose(s0, inv_tau[j]) for j in range(n)]) for s0 in bases]
    squares = [L for L in squares if all(respond(L, q) == t for q, t in log.entries)]
    while len(squares) > 1:
        split = next(
            (q for q in all_challenges(n) if len({respond(L, q) for L in squares}) > 1),
            None,
        )
        if split is None:
            break
        t = log.ask(split)
        squares = [L for L in squares if respond(L, split) == t]
    return Reconstruction(
        squares[0] if len(squares) == 1 else None,
        tuple(squares),
        tuple(log.entries),
        relation_queries,
    )


def load_reference_square() -> LatinSquare:
    from importlib.resources import files

    return LatinSquare.from_text(files("cryptolab").joinpath("fixtures/v1/latin_square.txt").read_text())
