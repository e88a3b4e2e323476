"""Command-line entry point: one subcommand per engine.

Every solver subcommand produces a :class:`RunReport` whose verdicts are
re-computed by a second route (a brute-force check, an inverse operation or
a full validator) rather than copied from the solver.  Exit status is 0 when
all verdicts pass, 1 when one fails, and 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Sequence

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2


@dataclass
class RunReport:
    """Machine-readable result of one subcommand run."""

    name: str
    inputs: dict[str, Any]
    outputs: dict[str, Any] = field(default_factory=dict)
    verdicts: dict[str, bool] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def inputs_digest(self) -> str:
        blob = json.dumps(self.inputs, sort_keys=True, default=str).encode()
        return hashlib.sha256(blob).hexdigest()

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())

    def to_json(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "inputs": self.inputs,
            "inputs_digest": self.inputs_digest,
            "outputs": self.outputs,
            "verdicts": self.verdicts,
            "elapsed": round(self.elapsed, 6),
        }

    def to_text(self) -> str:
        lines = [self.name]
        for k, v in self.outputs.items():
            if isinstance(v, list) and v and all(isinstance(x, str) for x in v):
                lines.append(f"  {k}:")
                lines += [f"    {x}" for x in v]
            else:
                lines.append(f"  {k}: {v}")
        for k, ok in self.verdicts.items():
            lines.append(f"  [{'PASS' if ok else 'FAIL'}] {k}")
        return "\n".join(lines)


class UsageError(Exception):
    """Bad arguments or unreadable input files (exit status 2)."""


def group_digits(n: int, group: bool) -> str:
    """Full decimal rendering, optionally grouped in threes with spaces."""
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)  # big integers are printed in full
    s = str(n)
    if not group:
        return s
    sign, body = ("-", s[1:]) if s.startswith("-") else ("", s)
    parts = []
    while body:
        parts.append(body[-3:])
        body = body[:-3]
    return sign + " ".join(reversed(parts))


def parse_bits(text: str, length: int | None = None):
    """Binary string, or hex with a ``0x`` prefix (whitespace ignored)."""
    from .gf2 import BitVector

    s = "".join(text.split())
    try:
        if s.lower().startswith("0x"):
            return BitVector.from_hex(s, length)
        v = BitVector.from_str(s)
    except ValueError as e:
        raise UsageError(str(e)) from e
    if length is not None and v.length != length:
        raise UsageError(f"expected {length} bits, got {v.length}")
    return v


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from e


def _fx(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------- gf2

def cmd_gf2(args) -> RunReport:
    from .gf2 import BitMatrix, count_matrices_of_rank, decimal_str, kernel_basis, log2_fraction, rank
    from .gf2 import secret_sharing_probabilities

    if args.action == "sharing":
        rep = RunReport("gf2 sharing", {"n": args.n, "attempts": args.attempts})
        p1, p2 = secret_sharing_probabilities(args.n, args.attempts)
        rep.outputs = {
            "p1": decimal_str(p1, args.places),
            "p1_exact": _fx(p1),
            "p2_log2": round(log2_fraction(p2), 6),
            "p2_exact": _fx(p2),
        }
        # p1 equals the product formula for invertible matrices
        prod = Fraction(1)
        for i in range(1, args.n + 1):
            prod *= 1 - Fraction(1, 2**i)
        rep.verdicts["p1 equals prod(1 - 2^-i)"] = prod == p1
        total = sum(count_matrices_of_rank(args.n, k) for k in range(args.n + 1))
        rep.verdicts["rank counts sum to 2^(n^2)"] = total == 1 << (args.n * args.n)
        return rep
    m = BitMatrix.from_text(_read(args.matrix))
    rep = RunReport(f"gf2 {args.action}", {"matrix": m.to_text()})
    r = rank(m)
    basis = kernel_basis(m)
    rep.outputs["rank"] = r
    if args.action == "kernel":
        rep.outputs["kernel"] = [v.to_str() for v in basis]
    rep.verdicts["rank + nullity = cols"] = r + len(basis) == m.cols
    rep.verdicts["kernel vectors annihilate every row"] = all(
        not m.row(i).dot(v) for v in basis for i in range(m.rows)
    )
    return rep


# ---------------------------------------------------------------- boolfun

def _affine_distance_nl(f) -> int:
    """Nonlinearity by direct distance to all affine functions."""
    n = f.n
    vals = [f(x) for x in range(1 << n)]
    best = 1 << n
    for a in range(1 << n):
        d = sum(vals[x] != (bin(a & x).count("1") & 1) for x in range(1 << n))
        best = min(best, d, (1 << n) - d)
    return best


def _load_function(args):
    from .boolfun import BooleanFunction

    if args.truth_table:
        return BooleanFunction.from_hex(args.truth_table, args.n)
    if args.poly:
        if args.n is None:
            raise UsageError("--poly needs --n")
        return BooleanFunction.from_polynomial(args.poly, args.n, args.index_base)
    raise UsageError("give --truth-table or --poly")


def _load_lut(args):
    from .boolfun import VectorialFunction

    if args.fixture:
        from importlib.resources import files

        tables = json.loads(files("cryptolab").joinpath("fixtures/v1/boolfun_luts.json").read_text())
        if args.fixture not in tables:
            raise UsageError(f"unknown fixture {args.fixture!r}; have {sorted(tables)}")
        return VectorialFunction.from_lut(tables[args.fixture])
    if args.lut:
        return VectorialFunction.parse_lut(_read(args.lut))
    raise UsageError("give --lut or --fixture")


def cmd_boolfun(args) -> RunReport:
    from .boolfun import (
        algebraic_degree,
        algebraic_immunity,
        component,
        component_algebraic_immunity,
        differential_uniformity,
        from_anf,
        is_permutation,
        nonlinearity,
        rotational_construction,
        to_anf,
        vectorial_nonlinearity,
    )

    if args.action == "ai":
        f = _load_function(args)
        rep = RunReport("boolfun ai", {"truth_table": f.to_hex(), "n": f.n})
        ai = algebraic_immunity(f)
        anf = to_anf(f)
        rep.outputs = {"ai": ai, "anf": anf.to_str(), "degree": f.degree(), "nonlinearity": nonlinearity(f)}
        rep.verdicts["ANF round-trips to the truth table"] = from_anf(anf) == f
        constant = f.truth_table.weight() in (0, 1 << f.n)
        rep.verdicts["AI within ceil(n/2) and deg(f)"] = ai == 0 if constant else ai <= min(f.degree(), (f.n + 1) // 2)
        rep.verdicts["nonlinearity matches affine distances"] = nonlinearity(f) == _affine_distance_nl(f)
        return rep
    if args.action == "rotational":
        f = _load_function(args)
        m = args.m or f.n
        F = rotational_construction(f, m)
        rep = RunReport("boolfun rotational", {"truth_table": f.to_hex(), "n": f.n, "m": m})
        rep.outputs = {"ai_comp": component_algebraic_immunity(F), "ai_f": algebraic_immunity(f),
                       "lut": list(F.table), "permutation": is_permutation(F)}
        rep.verdicts["AI_comp <= AI(f)"] = rep.outputs["ai_comp"] <= rep.outputs["ai_f"]
        return rep
    F = _load_lut(args)
    rep = RunReport("boolfun components", {"lut": list(F.table), "n": F.n, "m": F.m})
    ai = component_algebraic_immunity(F)
    rep.outputs = {
        "ai_comp": ai,
        "differential_uniformity": differential_uniformity(F),
        "nonlinearity": vectorial_nonlinearity(F),
        "algebraic_degree": algebraic_degree(F),
        "permutation": is_permutation(F),
    }
    comps = [component(F, v) for v in range(1, 1 << F.m)]
    rep.verdicts["AI_comp is the minimum component AI"] = ai == min(algebraic_immunity(c) for c in comps)
    rep.verdicts["nonlinearity matches affine distances"] = rep.outputs["nonlinearity"] == min(
        _affine_distance_nl(c) for c in comps
    )
    return rep


# ---------------------------------------------------------------- hadamard

def cmd_hadamard(args) -> RunReport:
    from .hadamard import BioKey, EncryptedTemplate, brute_force_decode, decode, encode, recover

    if args.action == "encode":
        key = BioKey(parse_bits(args.key))
        w = encode(key)
        rep = RunReport("hadamard encode", {"key": key.bits.to_str()})
        rep.outputs = {"codeword": w.to_str(4), "hex": w.to_hex() if w.length % 4 == 0 else None}
        rep.verdicts["codeword decodes to the key at distance 0"] = decode(w).key == key
        return rep
    if args.action == "decode":
        word = parse_bits(args.word)
        res = decode(word)
        rep = RunReport("hadamard decode", {"word": word.to_str()})
        rep.outputs = {
            "key": res.key.bits.to_str() if res.key else None,
            "key_hex": _key_hex(res.key),
            "distance": res.distance,
            "percent": round(100 * res.distance / word.length, 3),
            "candidates": [k.bits.to_str() for k in res.candidates],
        }
        rep.verdicts["distance equals brute-force nearest codeword"] = brute_force_decode(word) == res.distance
        return rep
    probe = parse_bits(args.probe)
    c = EncryptedTemplate(parse_bits(args.template, probe.length))
    frac = Fraction(args.max_fraction)
    res = recover(probe, c, frac)
    rep = RunReport("hadamard recover", {"probe": probe.to_str(), "template": c.c.to_str(), "max_fraction": str(frac)})
    rep.outputs = {
        "accepted": res.accepted,
        "key": res.key.bits.to_str() if res.key else None,
        "key_hex": _key_hex(res.key),
        "distance": res.distance,
        "percent": round(100 * float(res.fraction), 3),
    }
    rep.verdicts["distance equals brute-force nearest codeword"] = brute_force_decode(probe ^ c.c) == res.distance
    return rep


def _key_hex(key) -> str | None:
    if key is None:
        return None
    return format(key.bits.value, "x")


# ---------------------------------------------------------------- metric

def cmd_metric(args) -> RunReport:
    from .metric import (
        CubeSet,
        check_point,
        covering_radius,
        cryptosystem_check,
        distance_to_set,
        is_metrically_regular,
        metric_complement_with_radius,
        set_distance,
    )

    A = CubeSet.load(args.set)
    if args.action == "complement":
        comp = metric_complement_with_radius(A)
        rep = RunReport("metric complement", {"set": A.to_text()})
        rep.outputs = {"covering_radius": comp.covering_radius, "size": len(comp.members.members),
                       "complement": [v.to_str() for v in comp.members.vectors()],
                       "regular": is_metrically_regular(A)}
        rep.verdicts["members lie at the covering radius"] = all(
            distance_to_set(v, A) == comp.covering_radius for v in comp.members.vectors()
        )
        return rep
    B = CubeSet.load(args.other) if args.other else metric_complement_with_radius(A).members
    rep = RunReport("metric check", {"A": A.to_text(), "B": B.to_text(), "x": args.x})
    d = set_distance(A, B)
    rep.outputs["d(A,B)"] = d
    if args.x:
        x = parse_bits(args.x, A.n)
        ce = check_point(A, B, x)
        rep.outputs.update({"d(x,A)": ce.dist_a, "d(x,B)": ce.dist_b, "sum": ce.total, "holds": ce.total == d})
        brute = lambda X: min(bin(x.value ^ m).count("1") for m in X.members)
        rep.verdicts["distances match direct minimum"] = (brute(A), brute(B)) == (ce.dist_a, ce.dist_b)
        return rep
    report = cryptosystem_check(A)
    rep.outputs.update({"correct": report.correct, "violations": report.violations})
    if report.counterexample:
        ce = report.counterexample
        rep.outputs["counterexample"] = {"x": ce.x.to_str(), "d(x,A)": ce.dist_a, "d(x,B)": ce.dist_b}
    rep.verdicts["covering radius of A equals d(A, complement)"] = covering_radius(A) == report.d
    return rep


# ---------------------------------------------------------------- cipherlab

def cmd_cipherlab(args) -> RunReport:
    if args.action == "aes":
        from .cipherlab import AES256

        try:
            key, block = bytes.fromhex(args.key), bytes.fromhex(args.block)
        except ValueError as e:
            raise UsageError(str(e)) from e
        if len(key) != 32 or len(block) != 16:
            raise UsageError("AES-256 needs a 64-hex-digit key and a 32-hex-digit block")
        aes = AES256(key)
        out = aes.decrypt_block(block) if args.decrypt else aes.encrypt_block(block)
        back = aes.encrypt_block(out) if args.decrypt else aes.decrypt_block(out)
        rep = RunReport("cipherlab aes", {"key": args.key, "block": args.block, "decrypt": args.decrypt})
        rep.outputs = {"result": out.hex()}
        rep.verdicts["inverse operation restores the input"] = back == block
        return rep
    if args.action == "zerosum":
        from .cipherlab import AES0, find_zerosum
        from functools import reduce
        from operator import xor

        if args.count < 72:
            raise UsageError("zerosum search needs --count >= 72 (random kernel combinations weigh about pool/2)")
        blocks = find_zerosum(AES0, count=args.count, pool=max(256, 2 * args.count), seed=args.seed)
        rep = RunReport("cipherlab zerosum", {"count": args.count, "seed": args.seed, "key": "00" * 32})
        rep.outputs = {"blocks": [format(b, "032x") for b in blocks]}
        ins = reduce(xor, blocks, 0)
        outs = reduce(xor, (int.from_bytes(AES0.encrypt_block(b.to_bytes(16, "big")), "big") for b in blocks), 0)
        rep.outputs["xor"] = format(ins, "032x")
        rep.verdicts["blocks are distinct"] = len(set(blocks)) == len(blocks) == args.count
        rep.verdicts["XOR of inputs equals XOR of outputs"] = ins == outs
        return rep
    if args.action == "sequence":
        from .cipherlab import qf_ambiguity_witness, qf_generate

        w = qf_ambiguity_witness(args.n)
        L = args.n * args.n - args.n + 1
        u = qf_generate(w.f_u, w.init, L)
        v = qf_generate(w.f_v, w.init, L)
        rep = RunReport("cipherlab sequence", {"n": args.n})
        rep.outputs = {"u": "".join(map(str, u)), "v": "".join(map(str, v)), "agreement": w.agreement_length}
        rep.verdicts["agree on n^2-n bits then differ"] = u[:-1] == v[:-1] and u[-1] != v[-1]
        return rep
    if args.action == "equations":
        from .cipherlab.equations import assignment_str, key_system, solve_key_system

        sols = solve_key_system()
        rep = RunReport("cipherlab equations", {})
        rep.outputs = {"solutions": [assignment_str(s) for s in sols]}
        rep.verdicts["every solution satisfies the system"] = all(key_system(s) for s in sols)
        return rep
    from .cipherlab.labyrinth import (
        ShiftSchedule,
        load_labyrinth_fixture,
        progressive_caesar_decrypt,
        progressive_caesar_encrypt,
    )

    if args.ciphertext:
        if not args.shifts:
            raise UsageError("--ciphertext needs --shifts")
        ct = args.ciphertext
        sched = ShiftSchedule(tuple(int(s) for s in args.shifts.split(",")))
    else:
        ct, sched = load_labyrinth_fixture()
    try:
        pt = progressive_caesar_decrypt(ct, sched)
    except ValueError as e:
        raise UsageError(str(e)) from e
    rep = RunReport("cipherlab labyrinth", {"ciphertext": ct, "shifts": list(sched.shifts)})
    rep.outputs = {"plaintext": pt}
    rep.verdicts["re-encryption restores the ciphertext"] = progressive_caesar_encrypt(pt, sched) == ct
    return rep


# ---------------------------------------------------------------- protocol

def cmd_protocol(args) -> RunReport:
    from .protocol import GroupParams, Party, parse_scenario, simulate_attack

    if args.scenario:
        try:
            params, a, b, pairs = parse_scenario(_read(args.scenario))
            report = simulate_attack(params, a, b, pairs)
        except ValueError as e:
            raise UsageError(str(e)) from e
        rep = RunReport("protocol attack", {"p": params.p, "g": params.g, "sessions": len(pairs)})
        rep.outputs = {
            "session_keys": [s.K for s in report.sessions],
            "extracted_secret": report.secret,
            "predictions": list(report.predictions),
            "mismatches": report.mismatches,
        }
        truth = pow(params.g, a.alpha * b.alpha, params.p)
        rep.verdicts["extracted secret equals g^(alpha_a alpha_b)"] = report.secret == truth
        rep.verdicts["all later session keys predicted"] = report.mismatches == 0
        return rep
    rng = random.Random(args.seed)
    total = 0
    secrets_ok = True
    for _ in range(args.scenarios):
        params = GroupParams.generate(args.bits, rng)
        a, b = Party.random(params, rng), Party.random(params, rng)
        n = params.p - 1
        pairs = [(rng.randrange(n), rng.randrange(n)) for _ in range(args.sessions)]
        r = simulate_attack(params, a, b, pairs)
        total += r.mismatches
        secrets_ok &= r.secret == pow(params.g, a.alpha * b.alpha, params.p)
    rep = RunReport("protocol simulate", {"scenarios": args.scenarios, "bits": args.bits,
                                          "sessions": args.sessions, "seed": args.seed})
    rep.outputs = {"mismatches": total}
    rep.verdicts["extracted secrets are correct"] = secrets_ok
    rep.verdicts["zero prediction mismatches"] = total == 0
    return rep


# ---------------------------------------------------------------- latinsq

def cmd_latinsq(args) -> RunReport:
    from .latinsq import Challenge, LatinSquare, is_latin, reconstruct, respond, respond_by_composition

    try:
        L = LatinSquare.load(args.square)
    except (OSError, ValueError) as e:
        raise UsageError(str(e)) from e
    if args.action == "respond":
        try:
            q = Challenge.parse(args.challenge)
            q.validate(L.n)
        except ValueError as e:
            raise UsageError(str(e)) from e
        t = respond(L, q)
        rep = RunReport("latinsq respond", {"square": L.to_text(), "challenge": str(q)})
        rep.outputs = {"response": t}
        rep.verdicts["permutation composition gives the same response"] = respond_by_composition(L, q) == t
        return rep
    if args.oracle != "builtin":
        raise UsageError("only the builtin oracle is available")
    res = reconstruct(lambda q: respond(L, q), n=L.n, verification=args.verification, seed=args.seed or 0)
    rep = RunReport("latinsq attack", {"square": L.to_text(), "verification": args.verification, "seed": args.seed})
    rep.outputs = {
        "queries": len(res.queries),
        "relation_queries": res.relation_queries,
        "survivors": len(res.survivors),
        "square": res.square.to_text().splitlines() if res.square else None,
    }
    if args.log:
        Path(args.log).write_text("".join(f"{q} {t}\n" for q, t in res.queries), encoding="utf-8")
        rep.outputs["log"] = args.log
    rep.verdicts["reconstruction is a Latin square"] = res.square is not None and is_latin(
        [list(r) for r in res.square.cells]
    )
    rep.verdicts["reconstruction equals the hidden square"] = res.square == L
    return rep


# ---------------------------------------------------------------- nsucoin

def _history_from_args(args):
    from .nsucoin.fixtures import load_histories, parse_histories

    if args.history:
        sections = parse_histories(_read(args.history))
    else:
        sections = load_histories(corrected=not args.verbatim)
    if args.section not in sections:
        raise UsageError(f"unknown section {args.section!r}; have {sorted(sections)}")
    return sections[args.section]


def cmd_nsucoin(args) -> RunReport:
    from .nsucoin import (
        flower_ledger,
        mine_block,
        minimal_nonce,
        parse_block,
        parse_transaction,
        reduced_md5,
        validate_raw,
    )
    from .nsucoin.chain import parse_history
    from .nsucoin.wire import WireError

    if args.action == "hash":
        rep = RunReport("nsucoin hash", {"in": args.input})
        h = reduced_md5(args.input)
        rep.outputs = {"hash": h}
        rep.verdicts["agrees with hashlib MD5 prefix"] = hashlib.md5(args.input.encode()).hexdigest()[:8] == h
        return rep
    if args.action == "parse":
        rep = RunReport("nsucoin parse", {"tx": args.tx, "block": args.block})
        try:
            if args.tx:
                t = parse_transaction(args.tx)
                rep.outputs = {"tx_hash": t.tx_hash, "inputs": list(t.input_txs), "special": t.is_special,
                               "outputs": [[pk, v] for pk, v in t.outputs()]}
                rep.verdicts["re-serializes byte-exactly"] = str(t) == args.tx
            elif args.block:
                b = parse_block(args.block)
                rep.outputs = {"height": b.height, "prev_hash": b.prev_hash, "ctx_hash": b.ctx_hash,
                               "nonce": b.nonce, "hash": b.hash}
                rep.verdicts["re-serializes byte-exactly"] = str(b) == args.block
            else:
                raise UsageError("give --tx or --block")
        except WireError as e:
            rep.outputs = {"error": e.code, "message": str(e)}
            rep.verdicts["input parses"] = False
        return rep
    if args.action == "mine":
        txs = [h for h in args.txs.split(",") if h]
        try:
            b = mine_block(args.height, args.prev, txs, args.max_nonce)
        except ValueError as e:
            raise UsageError(str(e)) from e
        except RuntimeError as e:
            rep = RunReport("nsucoin mine", {"height": args.height, "prev": args.prev, "txs": txs})
            rep.outputs = {"error": str(e)}
            rep.verdicts["nonce found"] = False
            return rep
        rep = RunReport("nsucoin mine", {"height": args.height, "prev": args.prev, "txs": txs})
        rep.outputs = {"block": str(b), "hash": b.hash, "nonce": b.nonce}
        rep.verdicts["hash has the proof-of-work prefix"] = hashlib.md5(str(b).encode()).hexdigest().startswith("0000")
        rep.verdicts["no smaller nonce works"] = minimal_nonce(b.prefix(), b.nonce) == b.nonce
        return rep
    if args.action in ("verify", "ledger"):
        raw = _history_from_args(args)
        report = validate_raw(raw)
        name = f"nsucoin {args.action}"
        rep = RunReport(name, {"section": args.section, "verbatim": args.verbatim, "history": args.history})
        rep.outputs = {"blocks": len(raw), "issues": [str(i) for i in report.issues]}
        rep.verdicts["chain validates"] = report.ok
        if args.action == "ledger":
            history, _ = parse_history(raw)
            led = flower_ledger(history)
            rep.outputs["flowers"] = {name: led.flowers[name] for name in led.flowers}
            rep.outputs["coins"] = led.coins
            rep.outputs["flags"] = list(led.flags)
            rep.verdicts["coins match replayed balances"] = all(
                led.coins[led.economy.name_of(pk)] == v for pk, v in report.state.balances().items()
            )
            rep.verdicts["flower market rules respected"] = led.ok
        return rep
    return _cmd_search(args)


def _cmd_search(args) -> RunReport:
    from .nsucoin.chain import validate_chain
    from .nsucoin.search import HINT_EXAMPLE_BLOCK1, HINT_EXAMPLE_IN_BLOCK1, Bounds, Hints, history_search
    from .nsucoin.wire import WireError, parse_block

    hints = {"none": Hints(), "example-in-block1": HINT_EXAMPLE_IN_BLOCK1, "example-block1": HINT_EXAMPLE_BLOCK1}
    if args.target:
        try:
            target = parse_block(args.target)
        except WireError as e:
            raise UsageError(str(e)) from e
    else:
        from .nsucoin.fixtures import load_json

        target = parse_block(load_json("nsucoin_golden.json")["target_block"])
    bounds = Bounds(max_block_txs=args.max_block_txs)
    progress = (lambda s: print(s, file=sys.stderr, flush=True)) if args.progress else None
    res = history_search(target, hints[args.hint], bounds, progress=progress)
    rep = RunReport("nsucoin search", {"target": str(target), "hint": args.hint, "max_block_txs": args.max_block_txs})
    rep.outputs = {
        "chains": [[f"{b} | " + ",".join(t.tx_hash for t in txs) for b, txs in h] for h in res.chains],
        "count": res.count,
        "stats": res.stats,
    }
    rep.verdicts["every chain validates end to end"] = all(validate_chain(h).ok for h in res.chains)
    rep.verdicts["at least one history found"] = res.count > 0
    return rep


# ---------------------------------------------------------------- numbers

def cmd_numbers(args) -> RunReport:
    from .numtheory import access_puzzle, factor_check_f5, fermat, is_probable_prime, iter_fillings, pepin_test
    from .numtheory import seven_cubes

    g = args.group
    if args.action in ("fermat", "pepin"):
        try:
            F = fermat(args.k)
            verdict = pepin_test(args.k) if args.action == "pepin" or args.k <= 14 else None
        except ValueError as e:
            raise UsageError(str(e)) from e
        rep = RunReport(f"numbers {args.action}", {"k": args.k})
        rep.outputs = {"value": group_digits(F.value, g), "verdict": verdict}
        rep.verdicts["value equals 2^(2^k)+1"] = F.value == 2 ** (2**args.k) + 1
        if verdict is not None:
            rep.verdicts["Miller-Rabin agrees"] = is_probable_prime(F.value, rng=random.Random(args.seed)) == (
                verdict == "PRIME"
            )
        return rep
    if args.action == "f5":
        fc = factor_check_f5()
        rep = RunReport("numbers f5", {"p": fc.p, "q": fc.q})
        rep.outputs = {"F5": group_digits(fc.value, g), "product": group_digits(fc.p * fc.q, g)}
        rep.verdicts["641 * 6700417 = 2^32 + 1"] = fc.ok and fc.p * fc.q == 2**32 + 1
        return rep
    if args.action == "cubes":
        ck = seven_cubes(args.e)
        rep = RunReport("numbers cubes", {"e": args.e})
        rep.outputs = {"terms": [group_digits(t, g) for t in ck.terms], "target": group_digits(ck.target, g)}
        rep.verdicts["sum of cubes equals the target"] = sum(t**3 for t in ck.terms) == ck.target
        return rep
    sums = frozenset(int(s) for s in args.sums.split(","))
    totals = access_puzzle(args.cells, sums, args.allow_zero)
    rep = RunReport("numbers access", {"cells": args.cells, "sums": sorted(sums), "allow_zero": args.allow_zero})
    rep.outputs = {"totals": sorted(totals)}
    recount = {sum(k * v for k, v in f.items()) for f in iter_fillings(args.cells, sums, args.allow_zero)}
    rep.verdicts["totals agree with the filling enumeration"] = recount == totals
    return rep


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cryptolab", description="Cryptanalysis workbench.")
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.add_argument("--seed", type=int, default=None, help="seed for every randomized solver")
    p.add_argument("--threads", type=int, default=1, help="threads for compiled kernels (default 1)")
    p.add_argument("--group", action="store_true", help="group digits of big integers in threes")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gf2", help="GF(2) rank, kernel and sharing probabilities")
    ga = g.add_subparsers(dest="action", required=True)
    for name in ("rank", "kernel"):
        s = ga.add_parser(name)
        s.add_argument("--matrix", required=True, help="BitMatrix text file")
    s = ga.add_parser("sharing")
    s.add_argument("--n", type=int, default=32)
    s.add_argument("--attempts", type=int, default=23)
    s.add_argument("--places", type=int, default=6)

    b = sub.add_parser("boolfun", help="Boolean function analysis")
    ba = b.add_subparsers(dest="action", required=True)
    for name in ("ai", "rotational"):
        s = ba.add_parser(name)
        s.add_argument("--truth-table", help="hex value vector, most significant nibble first")
        s.add_argument("--poly", help="ANF such as 'x0+x1+x1x2'")
        s.add_argument("--n", type=int)
        s.add_argument("--index-base", type=int, default=1)
        if name == "rotational":
            s.add_argument("--m", type=int)
    s = ba.add_parser("components")
    s.add_argument("--lut", help="comma-separated lookup table file")
    s.add_argument("--fixture", help="bundled table: rotational_n5 or apn_permutation")

    h = sub.add_parser("hadamard", help="first-order Reed-Muller key binding")
    ha = h.add_subparsers(dest="action", required=True)
    s = ha.add_parser("encode")
    s.add_argument("--key", required=True)
    s = ha.add_parser("decode")
    s.add_argument("--word", required=True)
    s = ha.add_parser("recover")
    s.add_argument("--probe", required=True)
    s.add_argument("--template", required=True, help="encrypted template c")
    s.add_argument("--max-fraction", default="1/5")

    m = sub.add_parser("metric", help="metric complements on the Boolean cube")
    ma = m.add_subparsers(dest="action", required=True)
    s = ma.add_parser("complement")
    s.add_argument("--set", required=True)
    s = ma.add_parser("check")
    s.add_argument("--set", required=True, help="set A")
    s.add_argument("--other", help="set B (default: complement of A)")
    s.add_argument("--x", help="check a single vector")

    c = sub.add_parser("cipherlab", help="AES-256 zerosums, sequences, equations, labyrinth")
    ca = c.add_subparsers(dest="action", required=True)
    s = ca.add_parser("aes")
    s.add_argument("--key", required=True)
    s.add_argument("--block", required=True)
    s.add_argument("--decrypt", action="store_true")
    s = ca.add_parser("zerosum")
    s.add_argument("--count", type=int, default=128)
    s = ca.add_parser("sequence")
    s.add_argument("--n", type=int, required=True)
    ca.add_parser("equations")
    s = ca.add_parser("labyrinth")
    s.add_argument("--ciphertext")
    s.add_argument("--shifts", help="comma-separated shift per letter")

    pr = sub.add_parser("protocol", help="key-agreement attack simulation")
    pa = pr.add_subparsers(dest="action", required=True)
    s = pa.add_parser("attack")
    s.add_argument("--scenario", required=True, help="p, g, alpha_a, alpha_b, then R_a R_b lines")
    s = pa.add_parser("simulate")
    s.add_argument("--scenarios", type=int, default=100)
    s.add_argument("--bits", type=int, default=64)
    s.add_argument("--sessions", type=int, default=10)
    s.set_defaults(scenario=None)

    lq = sub.add_parser("latinsq", help="Latin-square challenge-response")
    la = lq.add_subparsers(dest="action", required=True)
    s = la.add_parser("respond")
    s.add_argument("--square", required=True)
    s.add_argument("--challenge", required=True, help="four digits a b c d")
    s = la.add_parser("attack")
    s.add_argument("--square", required=True, help="hidden square behind the oracle")
    s.add_argument("--oracle", default="builtin", choices=["builtin"])
    s.add_argument("--verification", type=int, default=20)
    s.add_argument("--log", help="write the query log here")

    nc = sub.add_parser("nsucoin", help="toy proof-of-work coin")
    na = nc.add_subparsers(dest="action", required=True)
    s = na.add_parser("hash")
    s.add_argument("--in", dest="input", required=True)
    s = na.add_parser("parse")
    s.add_argument("--tx")
    s.add_argument("--block")
    for name in ("verify", "ledger"):
        s = na.add_parser(name)
        s.add_argument("--history", help="history file (default: bundled fixture)")
        s.add_argument("--section", default="solution1")
        s.add_argument("--verbatim", action="store_true", help="use the uncorrected transcription")
    s = na.add_parser("mine")
    s.add_argument("--height", type=int, required=True)
    s.add_argument("--prev", required=True)
    s.add_argument("--txs", required=True, help="comma-separated tx hashes")
    s.add_argument("--max-nonce", type=int, default=40000)
    s = na.add_parser("search")
    s.add_argument("--target", help="target block wire string (default: bundled target)")
    s.add_argument("--hint", default="example-block1", choices=["none", "example-in-block1", "example-block1"])
    s.add_argument("--max-block-txs", type=int, default=4)
    s.add_argument("--progress", action="store_true")

    nu = sub.add_parser("numbers", help="Fermat numbers, cube keys, access puzzle")
    nua = nu.add_subparsers(dest="action", required=True)
    for name in ("fermat", "pepin"):
        s = nua.add_parser(name)
        s.add_argument("--k", type=int, required=True)
    nua.add_parser("f5")
    s = nua.add_parser("cubes")
    s.add_argument("--e", type=int, required=True)
    s = nua.add_parser("access")
    s.add_argument("--cells", type=int, default=20)
    s.add_argument("--sums", default="4,6,8")
    s.add_argument("--allow-zero", action="store_true")
    return p


COMMANDS: dict[str, Callable[[argparse.Namespace], RunReport]] = {
    "gf2": cmd_gf2,
    "boolfun": cmd_boolfun,
    "hadamard": cmd_hadamard,
    "metric": cmd_metric,
    "cipherlab": cmd_cipherlab,
    "protocol": cmd_protocol,
    "latinsq": cmd_latinsq,
    "nsucoin": cmd_nsucoin,
    "numbers": cmd_numbers,
}


def _set_threads(n: int) -> None:
    if n < 1:
        raise UsageError("--threads must be positive")
    if n == 1:
        return
    import numba

    numba.set_num_threads(min(n, numba.config.NUMBA_NUM_THREADS))


def run(args: argparse.Namespace) -> tuple[int, RunReport | None]:
    """Run a parsed command; usage/input errors give ``(2, None)``."""
    t0 = time.perf_counter()
    try:
        _set_threads(args.threads)
        report = COMMANDS[args.command](args)
    except (UsageError, ValueError, OSError) as e:
        # bad arguments, malformed input files and out-of-range parameters
        print(f"cryptolab: error: {e}", file=sys.stderr)
        return EXIT_USAGE, None
    report.elapsed = time.perf_counter() - t0
    return (EXIT_OK if report.ok else EXIT_VERIFY), report


def _parse(argv: Sequence[str] | None) -> tuple[int, argparse.Namespace | None]:
    try:
        return EXIT_OK, build_parser().parse_args(argv)
    except SystemExit as e:
        return (EXIT_OK if e.code == 0 else EXIT_USAGE), None


def dispatch(argv: Sequence[str] | None = None) -> tuple[int, RunReport | None]:
    """Parse ``argv``, run the subcommand and return ``(exit code, report)``."""
    code, args = _parse(argv)
    return (code, None) if args is None else run(args)


def main(argv: Sequence[str] | None = None) -> int:
    code, args = _parse(argv)
    if args is None:
        return code
    code, report = run(args)
    if report is not None:
        if args.json:
            print(json.dumps(report.to_json(), indent=2, default=str))
        else:
            print(report.to_text())
    return code


if __name__ == "__main__":
    raise SystemExit(main())
