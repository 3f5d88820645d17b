"""Field arithmetic and sesqui-morphism tests."""

import random

import pytest

from sesquimat.errors import NonPrimeCharacteristic, NotInvolution, ReducibleModulus
from sesquimat.field import (
    Field,
    field_make,
    identity_sesqui,
    sesqui_make,
    sesqui_morphisms,
)


def test_prime_field_arithmetic():
    f = field_make(7)
    assert f.add(3, 5) == 1
    assert f.mul(3, 5) == 1
    assert f.neg(2) == 5
    assert f.inv(3) == 5
    assert f.sub(2, 5) == 4
    assert f.div(1, 3) == 5


def test_gf4_tables():
    f = field_make(2, 2)
    # encoding: 0, 1, a = 2, a^2 = 3 with a^2 = a + 1
    assert f.modulus == (1, 1, 1)
    assert f.mul(2, 2) == 3
    assert f.mul(2, 3) == 1
    assert f.mul(3, 3) == 2
    assert f.add(2, 1) == 3
    assert f.add(2, 3) == 1
    assert f.inv(2) == 3
    assert f.pow(2, 3) == 1


def test_gf8_and_gf9_moduli():
    f8 = field_make(2, 3)
    assert f8.modulus == (1, 1, 0, 1)  # x^3 + x + 1
    assert f8.mul(2, 2) == 4  # a * a = a^2
    assert f8.mul(2, 4) == 3  # a^3 = a + 1
    f9 = field_make(3, 2)
    assert f9.modulus == (1, 0, 1)  # x^2 + 1
    assert f9.mul(3, 3) == 2  # a^2 = -1


def test_field_axioms_sampled():
    rng = random.Random(11)
    for q_args in ((2,), (5,), (2, 2), (3, 2), (2, 3)):
        f = field_make(*q_args)
        for _ in range(60):
            a, b, c = (rng.randrange(f.q) for _ in range(3))
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
            assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
            assert f.add(a, f.neg(a)) == 0
            if a:
                assert f.mul(a, f.inv(a)) == 1


def test_invalid_fields_rejected():
    with pytest.raises(NonPrimeCharacteristic):
        field_make(4)
    with pytest.raises(ReducibleModulus):
        field_make(2, 2, (1, 0, 1))  # x^2 + 1 = (x + 1)^2 over GF(2)
    with pytest.raises(ValueError):
        field_make(2, 10)  # order 1024 over the cap


def test_element_text_roundtrip():
    f4 = field_make(2, 2)
    assert f4.parse_element("a") == 2
    assert f4.parse_element("a2") == 3
    assert f4.parse_element("a^2") == 3
    assert f4.format_element(2) == "a"
    assert f4.format_element(3) == "a2"
    f9 = field_make(3, 2)
    assert f9.parse_element("poly:2,1") == 5
    assert f9.format_element(5) == "poly:2,1"
    f5 = field_make(5)
    assert f5.parse_element("4") == 4
    assert f5.format_element(4) == "4"
    with pytest.raises(ValueError):
        f5.parse_element("5")
    with pytest.raises(ValueError):
        f4.parse_element("b")


@pytest.mark.parametrize(
    "args,count",
    [((2,), 1), ((3,), 2), ((5,), 2), ((7,), 2), ((2, 2), 4), ((2, 3), 1), ((3, 2), 6)],
)
def test_sesqui_counts(args, count):
    assert len(sesqui_morphisms(field_make(*args))) == count


def test_sesqui_morphism_structure():
    f = field_make(2, 2)
    sig = sesqui_make(f, 1, 2)  # x -> a * x^2
    # involution
    for x in f.elements():
        assert sig(sig(x)) == x
    # twisted additivity / multiplicativity of s^-1 * sigma
    s_inv = f.inv(2)
    tilde = lambda x: f.mul(s_inv, sig(x))
    for x in f.elements():
        for y in f.elements():
            assert tilde(f.add(x, y)) == f.add(tilde(x), tilde(y))
            assert tilde(f.mul(x, y)) == f.mul(tilde(x), tilde(y))


def test_sesqui_rejects_non_involution():
    f = field_make(3, 2)
    # j = 1 needs s^4 = 1; a + 1 generates the order-8 unit group, so it fails
    with pytest.raises(NotInvolution):
        sesqui_make(f, 1, 4)


def test_identity_sesqui_and_fixed_elements():
    f = field_make(5)
    sig = identity_sesqui(f)
    assert [sig(x) for x in f.elements()] == list(f.elements())
    assert sig.fixed_elements() == tuple(f.elements())
    neg = sesqui_make(f, 0, 4)  # x -> -x
    assert neg.fixed_elements() == (0,)


def test_quotient_form():
    # every sesqui-morphism value sigma(x) equals s * x^(p^j)
    for args in ((3,), (2, 2), (3, 2)):
        f = field_make(*args)
        for sig in sesqui_morphisms(f):
            for x in f.elements():
                assert sig(x) == f.mul(sig.s, f.frob(x, sig.j))
