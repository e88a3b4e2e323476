"""Session-key establishment from masked exponents, and the stolen-key attack.

Each side publishes ``X = (alpha + R) mod (p - 1)`` and the key is
``K = g^(R_a R_b) mod p``.  Expanding the exponent shows that
``K = g^(X_a X_b) P_a^(-X_b) P_b^(-X_a) s`` with a session-independent
``s = g^(alpha_a alpha_b)``; one leaked key therefore reveals ``s``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .numtheory import is_probable_prime, random_safe_prime


@dataclass(frozen=True)
class GroupParams:
    p: int
    g: int

    def __post_init__(self):
        if not 1 < self.g < self.p:
            raise ValueError("need 1 < g < p")
        if not is_probable_prime(self.p):
            raise ValueError("modulus is not prime")

    @classmethod
    def generate(cls, bits: int, rng: random.Random) -> GroupParams:
        """Safe prime ``p = 2q + 1`` with a generator of the full group."""
        if not 16 <= bits <= 256:
            raise ValueError("bits must lie in 16..256")
        p = random_safe_prime(bits, rng)
        q = (p - 1) // 2
        while True:
            g = rng.randrange(2, p - 1)
            if pow(g, 2, p) != 1 and pow(g, q, p) != 1:
                return cls(p, g)


@dataclass(frozen=True)
class Party:
    alpha: int
    P: int

    @classmethod
    def create(cls, params: GroupParams, alpha: int) -> Party:
        alpha %= params.p - 1
        return cls(alpha, pow(params.g, alpha, params.p))

    @classmethod
    def random(cls, params: GroupParams, rng: random.Random) -> Party:
        return cls.create(params, rng.randrange(params.p - 1))


@dataclass(frozen=True)
class SessionTranscript:
    X_a: int
    X_b: int
    K: int = field(repr=False)


def _inv(x: int, p: int) -> int:
    return pow(x, -1, p)


def establish(params: GroupParams, a: Party, b: Party, R_a: int, R_b: int) -> SessionTranscript:
    p, g = params.p, params.g
    n = p - 1
    if not (0 <= R_a < n and 0 <= R_b < n):
        raise ValueError("R_a and R_b must lie in Z_{p-1}")
    X_a = (a.alpha + R_a) % n
    X_b = (b.alpha + R_b) % n
    K_ab = pow(pow(g, X_b, p) * _inv(b.P, p) % p, R_a, p)
    K_ba = pow(pow(g, X_a, p) * _inv(a.P, p) % p, R_b, p)
    if K_ab != K_ba:
        raise AssertionError("parties derived different session keys")
    return SessionTranscript(X_a, X_b, K_ab)


def _public_part(params: GroupParams, P_a: int, P_b: int, X_a: int, X_b: int) -> int:
    """``g^(X_a X_b) P_a^(-X_b) P_b^(-X_a) mod p``."""
    p, n = params.p, params.p - 1
    t = pow(params.g, X_a * X_b % n, p)
    t = t * pow(_inv(P_a, p), X_b, p) % p
    return t * pow(_inv(P_b, p), X_a, p) % p


def attack_extract_secret(params: GroupParams, P_a: int, P_b: int, stolen: SessionTranscript) -> int:
    """``s = g^(alpha_a alpha_b)`` from one observed session and its key."""
    return stolen.K * _inv(_public_part(params, P_a, P_b, stolen.X_a, stolen.X_b), params.p) % params.p


def attack_predict(params: GroupParams, P_a: int, P_b: int, s: int, X_a: int, X_b: int) -> int:
    return _public_part(params, P_a, P_b, X_a, X_b) * s % params.p


@dataclass(frozen=True)
class AttackReport:
    params: GroupParams
    sessions: tuple[SessionTranscript, ...]
    secret: int
    predictions: tuple[int, ...]

    @property
    def mismatches(self) -> int:
        return sum(k != s.K for k, s in zip(self.predictions, self.sessions[1:]))


def simulate_attack(
    params: GroupParams, a: Party, b: Party, randoms: list[tuple[int, int]]
) -> AttackReport:
    """Steal the first session's key and predict every later one."""
    if len(randoms) < 2:
        raise ValueError("need at least two sessions")
    sessions = tuple(establish(params, a, b, ra, rb) for ra, rb in randoms)
    s = attack_extract_secret(params, a.P, b.P, sessions[0])
    preds = tuple(attack_predict(params, a.P, b.P, s, t.X_a, t.X_b) for t in sessions[1:])
    return AttackReport(params, sessions, s, preds)


def random_scenario(bits: int, sessions: int, rng: random.Random) -> AttackReport:
    params = GroupParams.generate(bits, rng)
    a = Party.random(params, rng)
    b = Party.random(params, rng)
    n = params.p - 1
    rs = [(rng.randrange(n), rng.randrange(n)) for _ in range(sessions)]
    return simulate_attack(params, a, b, rs)


def parse_scenario(text: str) -> tuple[GroupParams, Party, Party, list[tuple[int, int]]]:
    """Decimal ``p``, ``g``, ``alpha_a``, ``alpha_b`` then one ``R_a R_b`` pair per line.

    Blank lines and ``#`` comments are ignored.
    """
    nums = []
    for ln in text.splitlines():
        ln = ln.split("#", 1)[0].strip()
        if ln:
            nums.append([int(t) for t in ln.replace(",", " ").split()])
    flat_head = [v for row in nums[:4] for v in row]
    if len(nums) < 4 or len(flat_head) != 4:
        raise ValueError("scenario needs p, g, alpha_a, alpha_b on four lines")
    p, g, aa, ab = flat_head
    params = GroupParams(p, g)
    pairs = []
    for row in nums[4:]:
        if len(row) != 2:
            raise ValueError("each session line needs R_a R_b")
        pairs.append((row[0], row[1]))
    return params, Party.create(params, aa), Party.create(params, ab), pairs
