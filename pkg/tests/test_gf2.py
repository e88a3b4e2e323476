from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cryptolab.gf2 import (
    BitMatrix,
    BitVector,
    count_matrices_of_rank,
    decimal_str,
    has_nontrivial_kernel,
    kernel_basis,
    log2_fraction,
    rank,
    secret_sharing_probabilities,
)


def matrices(max_rows=7, max_cols=7):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.integers(0, (1 << c) - 1), min_size=r, max_size=r).map(
                lambda rows: BitMatrix(r, c, tuple(rows))
            )
        )
    )


def brute_rank(m: BitMatrix) -> int:
    """Row-space size by closure under XOR, then log2."""
    span = {0}
    for r in m.data:
        span |= {s ^ r for s in span}
    return len(span).bit_length() - 1


# --- BitVector ---------------------------------------------------------------

def test_bitvector_string_round_trip():
    v = BitVector.from_str("1110 0010")
    assert v.length == 8 and v.value == 0xE2
    assert v.to_str(4) == "1110 0010"
    assert v.to_hex() == "e2"
    assert BitVector.from_hex("e2") == v


def test_bitvector_rejects_bad_input():
    with pytest.raises(ValueError):
        BitVector.from_str("10201")
    with pytest.raises(ValueError):
        BitVector(4, 2)
    with pytest.raises(ValueError):
        BitVector.from_str("10") ^ BitVector.from_str("101")


@given(st.integers(0, 64).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, (1 << n) - 1))))
def test_xor_with_self_is_zero(nv):
    n, value = nv
    v = BitVector(value, n)
    assert (v ^ v) == BitVector.zeros(n)
    assert v.distance(v) == 0
    assert len(v.bits()) == n


@given(st.integers(1, 40).flatmap(lambda n: st.tuples(st.integers(0, (1 << n) - 1), st.integers(0, (1 << n) - 1), st.just(n))))
def test_distance_is_weight_of_xor(t):
    a, b, n = t
    u, v = BitVector(a, n), BitVector(b, n)
    assert u.distance(v) == (u ^ v).weight() == sum(x != y for x, y in zip(u, v))


# --- BitMatrix ---------------------------------------------------------------

def test_matrix_text_round_trip():
    text = "2 3\n101\n011\n"
    m = BitMatrix.from_text(text)
    assert m.to_text() == text
    assert m.column(0) == BitVector.from_str("10")
    assert m.transpose().transpose() == m


@pytest.mark.parametrize("text", ["", "2\n10\n", "2 2\n10\n", "1 2\n102\n", "1 3\n10\n"])
def test_matrix_text_rejects_malformed(text):
    with pytest.raises(ValueError):
        BitMatrix.from_text(text)


@given(matrices())
def test_rank_matches_span_closure(m):
    r = rank(m)
    assert r == brute_rank(m)
    assert 0 <= r <= min(m.rows, m.cols)


@given(matrices())
def test_kernel_basis_is_annihilated_and_complete(m):
    basis = kernel_basis(m)
    assert len(basis) == m.cols - rank(m)
    for v in basis:
        assert m.mul_vec(v) == BitVector.zeros(m.rows)
    # basis vectors are independent
    assert rank(BitMatrix.from_rows(basis, m.cols)) == len(basis) if basis else True
    assert has_nontrivial_kernel(m.data, m.cols) == bool(basis)


@given(matrices())
def test_rank_of_transpose(m):
    assert rank(m) == rank(m.transpose())


def test_identity_and_zero():
    assert rank(BitMatrix.identity(9)) == 9
    assert kernel_basis(BitMatrix.identity(5)) == []
    assert len(kernel_basis(BitMatrix.zeros(3, 4))) == 4


# --- rank counts and the sharing probabilities ------------------------------

@pytest.mark.parametrize("n", [1, 2, 3])
def test_rank_counts_match_enumeration(n):
    counts = [0] * (n + 1)
    for rows in itertools.product(range(1 << n), repeat=n):
        counts[brute_rank(BitMatrix(n, n, rows))] += 1
    assert counts == [count_matrices_of_rank(n, k) for k in range(n + 1)]


@pytest.mark.parametrize("n", [1, 4, 10, 32])
def test_rank_counts_sum_to_all_matrices(n):
    assert sum(count_matrices_of_rank(n, k) for k in range(n + 1)) == 1 << (n * n)


def test_rank_count_rejects_bad_rank():
    with pytest.raises(ValueError):
        count_matrices_of_rank(3, 4)


def test_invertible_probability_is_product_formula():
    p1, _ = secret_sharing_probabilities(32, 23)
    prod = Fraction(1)
    for i in range(1, 33):
        prod *= 1 - Fraction(1, 2**i)
    assert p1 == prod


def test_sharing_probabilities_small_case_by_enumeration():
    # n = 3, attempts = 2: rank <= 1 allowed
    p1, p2 = secret_sharing_probabilities(3, 2)
    full = sum(1 for rows in itertools.product(range(8), repeat=3) if brute_rank(BitMatrix(3, 3, rows)) == 3)
    low = sum(1 for rows in itertools.product(range(8), repeat=3) if brute_rank(BitMatrix(3, 3, rows)) <= 1)
    assert p1 == Fraction(full, 512) and p2 == Fraction(low, 512)


def test_sharing_probabilities_reference_values():
    p1, p2 = secret_sharing_probabilities()
    assert decimal_str(p1, 6) == "0.288788"
    assert abs(log2_fraction(p2) - (log2_fraction(Fraction(13, 8)) - 783)) < 0.01


def test_decimal_str_rounding():
    assert decimal_str(Fraction(1, 3), 3) == "0.333"
    assert decimal_str(Fraction(2, 3), 3) == "0.667"
    assert decimal_str(Fraction(-1, 8), 2) == "-0.13"
    assert decimal_str(Fraction(5, 2), 0) == "3"


def test_log2_fraction_rejects_non_positive():
    with pytest.raises(ValueError):
        log2_fraction(Fraction(0))
