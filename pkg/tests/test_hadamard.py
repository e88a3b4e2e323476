from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cryptolab.gf2 import BitVector
from cryptolab.hadamard import (
    BioKey,
    brute_force_decode,
    decode,
    encode,
    enroll,
    odd_parity,
    recover,
    spectrum,
    synth_bank_fixture,
    word_at_distance,
)


def keys(min_n=1, max_n=6):
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.integers(0, (1 << (n + 1)) - 1).map(lambda v: BioKey(BitVector(v, n + 1)))
    )


def test_encode_small_key():
    # key 101 -> x1 + 1 over inputs 00, 01, 10, 11
    assert encode(BioKey.from_str("101")).to_str() == "1100"
    assert encode(BioKey.from_str("011")).to_str() == "1010"


@given(keys(), keys())
def test_codewords_are_far_apart(k1, k2):
    if k1.n != k2.n or k1 == k2:
        return
    d = encode(k1).distance(encode(k2))
    size = 1 << k1.n
    # complementary keys differ everywhere, all others by half the length
    assert d == (size if k1.bits.value ^ k2.bits.value == 1 else size // 2)


@given(keys(2, 6), st.integers(0, 2**31))
def test_decode_corrects_below_quarter_length(key, seed):
    size = 1 << key.n
    rng = random.Random(seed)
    d = rng.randrange(0, (size + 3) // 4)
    word = word_at_distance(encode(key), d, rng)
    res = decode(word)
    assert res.key == key and res.distance == d


@given(st.integers(1, 6).flatmap(lambda n: st.integers(0, (1 << (1 << n)) - 1).map(lambda v: BitVector(v, 1 << n))))
def test_fast_decode_distance_matches_codeword_listing(word):
    res = decode(word)
    assert res.distance == brute_force_decode(word)
    for k in res.candidates:
        assert word.distance(encode(k)) == res.distance


def test_spectrum_of_codeword():
    key = BioKey.from_str("10110")
    w = spectrum(encode(key))
    assert w[0b1011] == 16 and sum(abs(int(v)) for v in w) == 16


def test_example_16_bit_probe():
    res = decode(BitVector.from_str("1000 0111 1101 0000"))
    assert str(res.key) == "11000" and res.distance == 3


def test_ties_are_reported():
    res = decode(BitVector.from_str("1000"))
    assert res.key is None and res.ambiguous and len(res.candidates) == 4 and res.distance == 1


def test_key_filter_restricts_candidates():
    res = decode(BitVector.from_str("1000"), key_filter=odd_parity)
    assert all(odd_parity(k) for k in res.candidates)
    with pytest.raises(ValueError):
        decode(BitVector.from_str("1000"), key_filter=lambda k: False)


def test_bad_lengths():
    with pytest.raises(ValueError):
        decode(BitVector.from_str("101"))
    with pytest.raises(ValueError):
        enroll(BitVector.from_str("1010"), BioKey.from_str("1011"))


@pytest.mark.parametrize("seed", range(3))
def test_bank_fixture_accept_and_reject(seed):
    key = BioKey.from_str("11011010")
    fx = synth_bank_fixture(key, 25, 49, seed=seed)
    c = enroll(fx["template"], key)
    assert c.c == fx["c"]
    good = recover(fx["b_genuine"], c)
    assert good.accepted and good.key == key and good.distance == 25
    assert good.fraction <= Fraction(1, 5)
    bad = recover(fx["b_impostor"], c)
    assert not bad.accepted and bad.key is None and bad.distance == 49


def test_threshold_is_inclusive():
    key = BioKey.from_str("11011010")
    rng = random.Random(5)
    tmpl = BitVector(rng.getrandbits(128), 128)
    c = enroll(tmpl, key)
    # 25/128 <= 1/5 < 26/128
    probe = tmpl ^ encode(key) ^ word_at_distance(encode(key), 25, rng)
    assert recover(probe, c).accepted
    assert not recover(probe, c, max_fraction=Fraction(24, 128)).accepted


def test_constant_bit_flips_spectrum_sign():
    w = spectrum(encode(BioKey.from_str("10111")))
    assert w[0b1011] == -16
