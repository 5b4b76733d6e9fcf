"""Field arithmetic: axioms on every small field, plus pinned table facts."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mtcodes import field
from mtcodes.errors import ParseError
from mtcodes.gf import Field, default_modulus

from helpers import f9_mod221


FIELDS = [field(2), field(3), field(5), field(2, 2), field(2, 3), field(3, 2)]


@pytest.mark.parametrize("f", FIELDS, ids=lambda f: f"q{f.q}")
def test_axioms_exhaustive(f):
    els = list(f.elements())
    assert len(els) == f.q
    for a in els:
        assert f.add(a, 0) == a
        assert f.mul(a, 1) == a
        assert f.add(a, f.neg(a)) == 0
        if a != 0:
            assert f.mul(a, f.inv(a)) == 1
        for b in els:
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
            for c in els:
                assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
                assert f.add(a, f.add(b, c)) == f.add(f.add(a, b), c)


@pytest.mark.parametrize("f", FIELDS, ids=lambda f: f"q{f.q}")
def test_frobenius_is_automorphism(f):
    els = list(f.elements())
    for k in range(f.e + 1):
        for a in els:
            assert f.frobenius(a, k) == f.pow(a, f.p**k)
            for b in els:
                assert f.frobenius(f.add(a, b), k) == f.add(f.frobenius(a, k), f.frobenius(b, k))
                assert f.frobenius(f.mul(a, b), k) == f.mul(f.frobenius(a, k), f.frobenius(b, k))
    for a in els:
        assert f.frobenius(a, f.e) == a


def test_f4_multiplication_table():
    f = field(2, 2)
    w = 2
    assert f.mul(w, w) == 3  # w^2 = w + 1
    assert f.mul(w, 3) == 1  # w * w^2 = 1
    assert f.add(w, 3) == 1
    assert f.inv(w) == 3


def test_f9_mod221_modulus_powers():
    f = f9_mod221()
    w = f.parse_element("w")
    assert f.pow(w, 2) == f.parse_element("1 + w") == 4
    assert f.pow(w, 4) == 2
    assert f.pow(w, 6) == f.parse_element("2 + 2*w")
    assert f.neg(f.pow(w, 2)) == f.pow(w, 6)
    assert f.mult_order(w) == 8


def test_default_modulus_is_least_irreducible():
    # lexicographically least monic irreducible, low-degree-first coeff order
    assert default_modulus(2, 2) == (1, 1, 1)
    assert default_modulus(2, 3) == (1, 0, 1, 1)  # x^3 + x^2 + 1 precedes x^3 + x + 1
    assert default_modulus(3, 2) == (1, 0, 1)


def test_pow_handles_negative_exponents():
    f = field(3, 2)
    w = 3  # any nonzero element works; 3 encodes w in the default basis
    assert f.mul(f.pow(w, -1), w) == 1
    assert f.pow(w, -2) == f.inv(f.pow(w, 2))
    assert f.pow(0, 0) == 1
    with pytest.raises(ZeroDivisionError):
        f.pow(0, -1)


def test_element_text_round_trip():
    for f in FIELDS:
        for a in f.elements():
            assert f.parse_element(f.format_element(a)) == a


def test_parse_element_forms():
    f = field(2, 2)
    assert f.parse_element("w") == 2
    assert f.parse_element("w^2") == 3
    assert f.parse_element("1+w") == 3
    assert f.parse_element("0") == 0
    g = field(7)
    assert g.parse_element("6") == 6
    with pytest.raises(ParseError):
        g.parse_element("7")
    with pytest.raises(ParseError):
        f.parse_element("b")


def test_field_constructor_validation():
    with pytest.raises(ValueError):
        Field(4)  # not prime
    with pytest.raises(ValueError):
        Field(2, 0)
    with pytest.raises(ValueError):
        Field(2, 2, modulus=(1, 0, 1))  # x^2 + 1 reducible over F_2
    with pytest.raises(ValueError):
        Field.of_order(12)


def test_field_identity_cache():
    assert field(2, 2) is field(2, 2)
    assert field(3, 2, modulus=(2, 2, 1)) is field(3, 2, modulus=(2, 2, 1))
    assert field(3, 2) is not field(3, 2, modulus=(2, 2, 1))


def test_header_round_trips_modulus():
    f = f9_mod221()
    assert f.header() == "GF(3^2) mod 2 2 1"
    assert field(5).header() == "GF(5)"


@given(st.integers(0, 8), st.integers(0, 8), st.integers(0, 8))
@settings(max_examples=200)
def test_f9_associativity_property(a, b, c):
    f = f9_mod221()
    assert f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c)
    assert f.mul(a, f.sub(b, c)) == f.sub(f.mul(a, b), f.mul(a, c))


def test_mult_order_divides_group_order():
    for f in FIELDS:
        for a in f.elements():
            if a == 0:
                continue
            t = f.mult_order(a)
            assert (f.q - 1) % t == 0
            assert f.pow(a, t) == 1
