from __future__ import annotations

import itertools
import json

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cryptolab.boolfun import (
    AnfForm,
    BooleanFunction,
    VectorialFunction,
    algebraic_degree,
    algebraic_immunity,
    component,
    component_algebraic_immunity,
    differential_uniformity,
    from_anf,
    is_permutation,
    nonlinearity,
    parse_polynomial,
    rotate_left,
    rotational_construction,
    to_anf,
    vectorial_nonlinearity,
    walsh_spectrum,
)
from cryptolab.gf2 import BitVector


def functions(min_n=1, max_n=5):
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.integers(0, (1 << (1 << n)) - 1).map(lambda v: BooleanFunction(n, BitVector(v, 1 << n)))
    )


def naive_anf(f: BooleanFunction) -> list[int]:
    """Coefficient of monomial m = XOR of f over inputs x contained in m."""
    size = 1 << f.n
    return [sum(f(x) for x in range(size) if x & m == x) & 1 for m in range(size)]


def naive_ai(f: BooleanFunction) -> int:
    """Smallest d admitting a nonzero g of degree <= d with f g = 0 or (f+1) g = 0."""
    n = f.n
    size = 1 << n
    for d in range(n + 1):
        mons = [m for m in range(size) if bin(m).count("1") <= d]
        for coeffs in range(1, 1 << len(mons)):
            g = [0] * size
            for i, m in enumerate(mons):
                if coeffs >> i & 1:
                    for x in range(size):
                        if x & m == m:
                            g[x] ^= 1
            if all(not (f(x) and g[x]) for x in range(size)) or all(not ((1 - f(x)) and g[x]) for x in range(size)):
                return d
    raise AssertionError("unreachable")


def naive_nl(f: BooleanFunction) -> int:
    size = 1 << f.n
    best = size
    for a in range(size):
        d = sum(f(x) != bin(a & x).count("1") % 2 for x in range(size))
        best = min(best, d, size - d)
    return best


def load_tables() -> dict[str, list[int]]:
    from importlib.resources import files

    return json.loads(files("cryptolab").joinpath("fixtures/v1/boolfun_luts.json").read_text())


# --- representation ---------------------------------------------------------

def test_hex_truth_table_with_whitespace():
    f = BooleanFunction.from_hex("ffff ffff 0000 0000")
    assert f.n == 6 and f.weight() == 32
    assert f.to_hex() == "ffffffff00000000"
    assert f(0) == 1 and f(63) == 0


def test_input_bit_order():
    # x_1 is the most significant input bit
    f = BooleanFunction.from_polynomial("x1", 3)
    assert [f(x) for x in range(8)] == [0, 0, 0, 0, 1, 1, 1, 1]
    g = BooleanFunction.from_polynomial("x0", 3, index_base=0)
    assert f == g


def test_polynomial_parser():
    a = parse_polynomial("x1x2 + x3 + 1", 3)
    assert AnfForm(3, a).to_str() == "1+x1x2+x3"
    assert parse_polynomial("x_1 ⊕ x_2", 2) == parse_polynomial("x1+x2", 2)
    for bad in ("x4", "x1++x2", "y1"):
        with pytest.raises(ValueError):
            parse_polynomial(bad, 3)


def test_zero_polynomial():
    assert BooleanFunction.from_polynomial("0", 2).weight() == 0


@given(functions())
def test_anf_matches_subset_sums(f):
    assert list(to_anf(f).coefficients) == naive_anf(f)


@given(functions())
def test_anf_round_trip(f):
    assert from_anf(to_anf(f)) == f


# --- algebraic immunity ------------------------------------------------------

@given(functions(1, 3))
def test_ai_matches_exhaustive_annihilator_search(f):
    assert algebraic_immunity(f) == naive_ai(f)


@pytest.mark.parametrize("seed", range(4))
def test_ai_matches_exhaustive_search_n4(seed):
    rng = np.random.default_rng(seed)
    f = BooleanFunction.from_values(rng.integers(0, 2, 16))
    assert algebraic_immunity(f) == naive_ai(f)


@given(functions())
def test_ai_bounds_and_complement_symmetry(f):
    ai = algebraic_immunity(f)
    assert ai <= (f.n + 1) // 2
    assert ai == algebraic_immunity(f.complement())
    if 0 < f.weight() < 1 << f.n:
        assert 1 <= ai <= f.degree()
    else:
        assert ai == 0


def test_majority_has_optimal_ai():
    f = BooleanFunction.from_callable(5, lambda b: int(sum(b) >= 3))
    assert algebraic_immunity(f) == 3


# --- spectrum ----------------------------------------------------------------

@given(functions())
def test_parseval(f):
    w = walsh_spectrum(f)
    assert int((w * w).sum()) == 1 << (2 * f.n)


@given(functions(1, 4))
def test_nonlinearity_matches_affine_distances(f):
    assert nonlinearity(f) == naive_nl(f)


def test_bent_function_nonlinearity():
    f = BooleanFunction.from_polynomial("x1x2+x3x4", 4)
    assert nonlinearity(f) == 6
    assert set(np.abs(walsh_spectrum(f)).tolist()) == {4}


# --- vectorial functions ------------------------------------------------------

def test_lut_parsing_and_validation():
    F = VectorialFunction.parse_lut("(0, 1, 3, 2)")
    assert F.n == 2 and F.m == 2 and is_permutation(F)
    with pytest.raises(ValueError):
        VectorialFunction.from_lut([0, 1, 2])
    with pytest.raises(ValueError):
        component(F, 0)


@pytest.mark.parametrize("seed", range(3))
def test_differential_uniformity_by_counting(seed):
    rng = np.random.default_rng(seed)
    lut = rng.permutation(16).tolist()
    F = VectorialFunction.from_lut(lut)
    naive = max(
        sum(lut[x] ^ lut[x ^ a] == b for x in range(16)) for a in range(1, 16) for b in range(16)
    )
    assert differential_uniformity(F) == naive


def test_component_is_inner_product():
    F = VectorialFunction.from_lut([3, 1, 2, 0])
    c = component(F, 0b11)
    assert [c(x) for x in range(4)] == [0, 1, 1, 0]
    assert F.coordinate(0) == component(F, 0b10)


def test_bundled_tables():
    tables = load_tables()
    G = VectorialFunction.from_lut(tables["rotational_n5"])
    assert component_algebraic_immunity(G) == 3 and is_permutation(G)
    F = VectorialFunction.from_lut(tables["apn_permutation"])
    assert component_algebraic_immunity(F) == 3
    assert differential_uniformity(F) == 2
    assert vectorial_nonlinearity(F) == 12
    assert algebraic_degree(F) == 3
    assert is_permutation(F)


def test_component_ai_is_minimum_over_components():
    F = VectorialFunction.from_lut(load_tables()["apn_permutation"])
    assert component_algebraic_immunity(F) == min(algebraic_immunity(component(F, v)) for v in range(1, 32))


# --- rotational construction ---------------------------------------------------

def test_rotate_left():
    assert rotate_left(0b1000, 4) == 0b0001
    assert rotate_left(0b0110, 4, 2) == 0b1001
    assert rotate_left(0b101, 3, 3) == 0b101


@pytest.mark.parametrize(
    "n, poly, expected",
    [
        (3, "x0+x1+x1x2", 2),
        (4, "x0x1x2+x0x1+x3", 2),
        (5, "x0x1x2x3+x0x1x2+x0x1x3+x0+x1x3+x2x4+x4", 3),
    ],
)
def test_rotational_examples(n, poly, expected):
    f = BooleanFunction.from_polynomial(poly, n, index_base=0)
    assert algebraic_immunity(f) == (n + 1) // 2
    assert component_algebraic_immunity(rotational_construction(f, n)) == expected


def test_rotational_n5_reproduces_bundled_table():
    # the bundled table reads its input with x0 as the least significant bit
    f = BooleanFunction.from_polynomial("x0x1x2x3+x0x1x2+x0x1x3+x0+x1x3+x2x4+x4", 5, index_base=0)
    F = rotational_construction(f, 5)
    rev = [int(format(x, "05b")[::-1], 2) for x in range(32)]
    assert [F.table[rev[x]] for x in range(32)] == load_tables()["rotational_n5"]


def test_rotational_coordinates_are_rotations():
    f = BooleanFunction.from_polynomial("x1x2+x3", 3)
    F = rotational_construction(f, 3)
    for j in range(3):
        cj = F.coordinate(j)
        assert all(cj(x) == f(rotate_left(x, 3, j)) for x in range(8))


def test_rotational_rejects_bad_m():
    f = BooleanFunction.from_polynomial("x1", 3)
    with pytest.raises(ValueError):
        rotational_construction(f, 4)
    with pytest.raises(ValueError):
        rotational_construction(f, 0)


def test_value_vector_in_lexicographic_order():
    f = BooleanFunction.from_polynomial("x3+x4+1", 4)
    assert f.truth_table.to_str() == "1001100110011001"
    g = BooleanFunction.from_polynomial("x4+1", 4)
    assert g.truth_table.to_str() == "1010101010101010"
