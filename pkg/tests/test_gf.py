import itertools

import numpy as np
import pytest

from lrcpir.errors import DivisionByZero, FieldMismatch, NotPrime, ReduciblePolynomial, ZeroElement
from lrcpir.gf import (
    CONWAY_LIKE_BINARY,
    FieldSpec,
    arith,
    default_field,
    element_order,
    is_irreducible,
    make_field,
    parse_poly,
)

from oracles import clmul_mod, gf2_poly_mul, poly_int


def test_make_field_examples(gf8):
    assert gf8.q == 8 and gf8.p == 2 and gf8.m == 3
    f2 = make_field(2, 1, [1, 1])
    assert f2.q == 2
    with pytest.raises(ReduciblePolynomial):
        make_field(2, 3, [1, 1, 1, 1])
    with pytest.raises(NotPrime):
        make_field(4, 2, [1, 1, 1])


def test_reducible_by_trial_division_oracle():
    # every product of two lower-degree binary polynomials is reducible
    for da in (1, 2):
        for a_tail in itertools.product((0, 1), repeat=da):
            for b_tail in itertools.product((0, 1), repeat=4 - da):
                prod = gf2_poly_mul([1, *a_tail], [1, *b_tail])
                assert not is_irreducible(2, prod)
    assert is_irreducible(2, [1, 0, 1, 1]) and is_irreducible(2, [1, 1, 0, 1])


def test_arith_examples(gf8):
    z = gf8.z()
    assert z * z**2 == z**3 == z + 1
    assert z**3 * z == z**2 + z
    for a in gf8.elements():
        assert a + a == gf8.zero
    assert arith(z, z**2, "mul") == z**3
    assert arith(z**3, z, "div") == z**2
    assert arith(z, z, "sub") == gf8.zero


def test_arith_errors(gf8):
    with pytest.raises(DivisionByZero):
        arith(gf8.one, gf8.zero, "div")
    other = make_field(2, 3, [1, 1, 0, 1])
    with pytest.raises(FieldMismatch):
        gf8.one + other.one


def test_element_order(gf8):
    assert element_order(gf8.one) == 1
    assert element_order(gf8.z()) == 7
    assert element_order(gf8.z() + 1) == 7
    with pytest.raises(ZeroElement):
        element_order(gf8.zero)


@pytest.mark.parametrize("m", sorted(CONWAY_LIKE_BINARY))
def test_multiplication_matches_carryless_oracle(m):
    F = default_field(2, m)
    poly = poly_int(F.poly)
    a, b = np.meshgrid(np.arange(F.q), np.arange(F.q))
    expect = np.vectorize(lambda x, y: clmul_mod(int(x), int(y), poly, m))(a, b)
    assert np.array_equal(F.mul(a, b), expect)


@pytest.mark.parametrize("m", range(1, 7))
def test_frobenius_exhaustive(m):
    F = default_field(2, m)
    a, b = np.meshgrid(np.arange(F.q), np.arange(F.q))
    assert np.array_equal(F.power(F.add(a, b), 2), F.add(F.power(a, 2), F.power(b, 2)))


def test_frobenius_odd_characteristic():
    F = make_field(3, 2, [1, 0, 1])  # x^2 + 1 over GF(3)
    a, b = np.meshgrid(np.arange(9), np.arange(9))
    assert np.array_equal(F.power(F.add(a, b), 3), F.add(F.power(a, 3), F.power(b, 3)))
    G = make_field(5, 1, [1, 0])
    assert int(G.mul(3, 4)) == 2 and int(G.inv(2)) == 3


@pytest.mark.parametrize("m", range(1, 9))
def test_field_axioms(m):
    F = default_field(2, m)
    rng = np.random.default_rng(m)
    a, b, c = (rng.integers(0, F.q, 4000) for _ in range(3))
    assert np.array_equal(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)))
    assert np.array_equal(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)))
    nz = a[a != 0]
    assert np.all(F.mul(nz, F.inv(nz)) == 1)


@pytest.mark.parametrize("m", range(1, 9))
def test_log_round_trip(m):
    F = default_field(2, m)
    i = np.arange(F.q - 1)
    assert np.array_equal(F.log(F.exp(i)), i)
    assert sorted(F.exp(i).tolist()) == list(range(1, F.q))


def test_literals_round_trip(gf8):
    assert gf8.literal == "GF(2^3):poly=[1,0,1,1]"
    assert FieldSpec.parse(gf8.literal) == gf8
    assert FieldSpec.parse("GF(16)") == default_field(2, 4)
    for v in range(8):
        assert gf8.parse_element(gf8.format_element(v)) == v
    assert gf8.format_element(0) == "0" and gf8.format_element(1) == "1"
    assert gf8.format_element(gf8.z(3).value) == "z^3"
    assert parse_poly("x^3+x+1", 2) == (1, 0, 1, 1)
