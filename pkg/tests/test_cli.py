from __future__ import annotations

import json
import subprocess
import sys

import pytest

from cryptolab.cli import EXIT_OK, EXIT_USAGE, EXIT_VERIFY, dispatch, group_digits, main, parse_bits


def ok(argv):
    code, rep = dispatch(argv)
    assert code == EXIT_OK, rep and rep.to_text()
    assert rep.ok and rep.verdicts
    return rep


def test_helpers():
    assert group_digits(1234567, True) == "1 234 567"
    assert group_digits(1234567, False) == "1234567"
    assert parse_bits("0x0f", 8).to_str() == "00001111"
    assert parse_bits("1010", None).to_str() == "1010"


def test_gf2(tmp_path):
    m = tmp_path / "m.txt"
    m.write_text("3 3\n110\n011\n101\n")
    assert ok(["gf2", "rank", "--matrix", str(m)]).outputs["rank"] == 2
    assert ok(["gf2", "kernel", "--matrix", str(m)]).outputs["kernel"] == ["111"]
    rep = ok(["gf2", "sharing"])
    assert "0.288788" in json.dumps(rep.outputs)


def test_boolfun():
    rep = ok(["boolfun", "ai", "--poly", "x1x2+x3x4", "--n", "4"])
    assert rep.outputs["ai"] == 2 and rep.outputs["nonlinearity"] == 6
    rep = ok(["boolfun", "rotational", "--poly", "x0+x1+x1x2", "--n", "3", "--index-base", "0"])
    assert rep.outputs["ai_comp"] == 2
    rep = ok(["boolfun", "components", "--fixture", "apn_permutation"])
    assert rep.outputs["ai_comp"] == 3 and rep.outputs["differential_uniformity"] == 2


def test_hadamard():
    rep = ok(["hadamard", "decode", "--word", "1000011111010000"])
    assert rep.outputs["key"] == "11000" and rep.outputs["distance"] == 3
    rep = ok(["hadamard", "encode", "--key", "101"])
    assert rep.outputs["codeword"].replace(" ", "") == "1100"


def test_metric(fixture_dir):
    A = str(fixture_dir / "metric_A.txt")
    rep = ok(["metric", "complement", "--set", A])
    assert rep.outputs["covering_radius"] == 8 and rep.outputs["regular"]
    rep = dispatch(["metric", "check", "--set", A, "--x", "0000000000010111"])[1]
    assert rep.outputs["d(x,A)"] == 4 and rep.outputs["d(x,B)"] == 6 and not rep.outputs["holds"]


def test_cipherlab():
    rep = ok(["cipherlab", "aes", "--key", bytes(range(32)).hex(), "--block", "00112233445566778899aabbccddeeff"])
    assert rep.outputs["result"] == "8ea2b7ca516745bfeafc49904b496089"
    assert ok(["cipherlab", "labyrinth"]).outputs["plaintext"].endswith("CLAUDESHANNON")
    assert len(ok(["cipherlab", "equations"]).outputs["solutions"]) == 6
    assert ok(["cipherlab", "sequence", "--n", "5"]).outputs["agreement"] == 20
    assert dispatch(["cipherlab", "zerosum", "--count", "8"])[0] == EXIT_USAGE


def test_protocol(tmp_path):
    sc = tmp_path / "s.txt"
    sc.write_text("23\n5\n3\n7\n4 9\n1 2\n10 11\n")
    ok(["protocol", "attack", "--scenario", str(sc)])
    assert ok(["--seed", "1", "protocol", "simulate", "--scenarios", "3"]).outputs["mismatches"] == 0


def test_latinsq(fixture_dir, tmp_path):
    sq = str(fixture_dir / "latin_square.txt")
    ok(["latinsq", "respond", "--square", sq, "--challenge", "0123"])
    log = tmp_path / "log.txt"
    ok(["latinsq", "attack", "--square", sq, "--log", str(log)])
    assert log.read_text().strip()


def test_nsucoin():
    assert ok(["nsucoin", "hash", "--in", "teststring"]).outputs["hash"] == "d67c5cbf"
    ok(["nsucoin", "parse", "--block", "height:2;prevHash:0000593b;ctxHash:8fef76cb;nonce:17052"])
    assert dispatch(["nsucoin", "parse", "--tx", "txHash:zz"])[0] == EXIT_VERIFY
    rep = ok(["nsucoin", "ledger", "--section", "solution1"])
    assert rep.outputs["coins"] == {"Alice": 6, "Bob": 8, "Caroline": 18, "Daniel": 8}
    assert dispatch(["nsucoin", "verify", "--section", "solution2", "--verbatim"])[0] == EXIT_VERIFY
    rep = ok(["nsucoin", "mine", "--height", "1", "--prev", "00003cc0",
              "--txs", "98e93fd5,c16d8b22,b782c145,e1e2c554"])
    assert rep.outputs["hash"] == "0000593b"


def test_numbers():
    assert ok(["numbers", "pepin", "--k", "5"]).outputs["verdict"] == "COMPOSITE"
    ok(["numbers", "f5"])
    ok(["numbers", "cubes", "--e", "4"])
    assert ok(["numbers", "access"]).outputs["totals"] == list(range(44, 77, 2))
    assert dispatch(["numbers", "cubes", "--e", "2"])[0] == EXIT_USAGE


def test_usage_errors():
    assert dispatch(["bogus"])[0] == EXIT_USAGE
    assert dispatch(["--threads", "0", "numbers", "f5"])[0] == EXIT_USAGE
    assert dispatch(["hadamard", "decode", "--word", "101"])[0] == EXIT_USAGE
    assert dispatch(["metric", "complement", "--set", "/nonexistent"])[0] == EXIT_USAGE


def test_json_output(capsys):
    assert main(["--json", "nsucoin", "hash", "--in", "teststring"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert set(data) == {"name", "inputs", "inputs_digest", "outputs", "verdicts", "elapsed"}
    assert data["outputs"]["hash"] == "d67c5cbf"
    assert all(data["verdicts"].values())


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "cryptolab", "numbers", "f5"], capture_output=True, text=True)
    assert out.returncode == 0 and "PASS" in out.stdout
