import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eewt import galois
from eewt.errors import DivisionByZero, FieldMismatch, ReducibleModulus, UnsupportedSize, UsageError
from eewt.galois import field_new, format_field, parse_field, primitive_element


def clmul_mod(a, b, modulus):
    """Carry-less multiply then long division by the modulus (GF(2) oracle)."""
    prod = 0
    for i in range(b.bit_length()):
        if (b >> i) & 1:
            prod ^= a << i
    deg = modulus.bit_length() - 1
    while prod.bit_length() - 1 >= deg:
        prod ^= modulus << (prod.bit_length() - 1 - deg)
    return prod


def test_construction_examples():
    f = field_new(2, 3, [1, 1, 0, 1])
    assert f.q == 8 and f.modulus_int == 0xB
    assert field_new(2, 8, 0x11D).q == 256
    with pytest.raises(ReducibleModulus):
        field_new(2, 2, 0b101)
    with pytest.raises(UnsupportedSize):
        field_new(2, 17)
    with pytest.raises(UsageError):
        field_new(4, 1)
    with pytest.raises(UsageError):
        field_new(2, 3, 0x1B)  # degree 4, not 3


def test_oracle_values(gf8, gf256):
    assert clmul_mod(0b010, 0b100, 0xB) == 0b011
    assert gf8.mul(0b010, 0b100) == 0b011
    assert clmul_mod(0x80, 0x02, 0x11D) == 0x1D
    assert gf256.mul(0x80, 0x02) == 0x1D
    assert gf8.add(5, 5) == 0


@pytest.mark.parametrize("m, modulus", [(3, 0xB), (4, 0x13), (8, 0x11D), (8, 0x11B)])
def test_tables_match_polynomial_multiplication(m, modulus):
    f = field_new(2, m, modulus)
    a, b = np.meshgrid(np.arange(f.q), np.arange(f.q), indexing="ij")
    table = f.mul(a, b)
    reduced = np.array([[f.mul_poly(x, y) for y in range(f.q)] for x in range(f.q)])
    assert np.array_equal(table, reduced)
    oracle = np.array([[clmul_mod(x, y, modulus) for y in range(f.q)] for x in range(f.q)])
    assert np.array_equal(table, oracle)


@pytest.mark.parametrize("p, m", [(2, 1), (2, 2), (2, 4), (3, 2), (5, 1), (7, 1), (3, 1)])
def test_field_axioms_exhaustive(p, m):
    f = field_new(p, m)
    q = f.q
    a, b, c = np.meshgrid(np.arange(q), np.arange(q), np.arange(q), indexing="ij")
    assert np.array_equal(f.add(a, b), f.add(b, a))
    assert np.array_equal(f.mul(a, b), f.mul(b, a))
    assert np.array_equal(f.add(f.add(a, b), c), f.add(a, f.add(b, c)))
    assert np.array_equal(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)))
    assert np.array_equal(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)))
    x = np.arange(q)
    assert np.array_equal(f.add(x, f.neg(x)), np.zeros(q))
    assert np.array_equal(f.sub(f.add(a, b), b), a)
    nz = np.arange(1, q)
    assert np.all(f.mul(nz, f.inv(nz)) == 1)
    if m > 1:
        # multiplication agrees with the reduction oracle for odd characteristic too
        assert all(f.mul(int(u), int(v)) == f.mul_poly(int(u), int(v)) for u in x for v in x)


@pytest.mark.parametrize("p, m, expected", [(2, 3, 0b010), (2, 1, 1), (2, 8, 0x02)])
def test_primitive_element(p, m, expected):
    f = field_new(p, m, 0xB if (p, m) == (2, 3) else None)
    g = primitive_element(f)
    assert g.value == expected
    assert g.order() == f.q - 1
    # smallest such element
    assert all(f(v).order() < f.q - 1 for v in range(1, expected))


@pytest.mark.parametrize("p, m", [(2, 3), (2, 8), (3, 4), (2, 12), (13, 2)])
def test_primitive_order_brute(p, m):
    f = field_new(p, m)
    g = primitive_element(f)
    assert (g ** (f.q - 1)).value == 1
    q1 = f.q - 1
    for d in range(1, q1):
        if q1 % d == 0:
            assert (g**d).value != 1


@settings(max_examples=200, deadline=None)
@given(a=st.integers(0, 65535), b=st.integers(0, 65535), c=st.integers(0, 65535))
def test_gf65536_random_axioms(a, b, c):
    f = field_new(2, 16)
    assert f.mul(a, b) == f.mul_poly(a, b) == clmul_mod(a, b, f.modulus_int)
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    if a:
        assert f.mul(a, f.inv(a)) == 1


@settings(max_examples=100, deadline=None)
@given(a=st.integers(0, 242), b=st.integers(0, 242), e=st.integers(-300, 300))
def test_gf243_pow_and_mul(a, b, e):
    f = field_new(3, 5)
    assert f.mul(a, b) == f.mul_poly(a, b)
    if a:
        expected = 1
        base = a if e >= 0 else f.inv(a)
        for _ in range(abs(e)):
            expected = f.mul_poly(expected, base)
        assert f.pow(a, e) == expected


def test_element_errors(gf8, gf16):
    with pytest.raises(DivisionByZero):
        gf8.inv(0)
    with pytest.raises(DivisionByZero):
        galois.inv(gf8(0))
    with pytest.raises(ZeroDivisionError):
        gf8(3) / gf8(0)
    with pytest.raises(FieldMismatch):
        galois.add(gf8(1), gf16(1))
    with pytest.raises(FieldMismatch):
        gf8(1) * gf16(1)
    with pytest.raises(FieldMismatch):
        gf8(8)


def test_element_api(gf8):
    a = primitive_element(gf8)
    assert galois.mul(a, a**2) == a**3 == gf8(0b011)
    assert galois.add(a, a) == gf8(0)
    assert galois.pow(a, 7) == gf8(1)
    assert galois.inv(a) * a == gf8(1)
    assert int(a + 1) == 3
    assert field_new(2, 3, 0xB) == gf8 and hash(field_new(2, 3, 0xB)) == hash(gf8)


@pytest.mark.parametrize(
    "text, p, m, modulus",
    [
        ("gf(2^8, modulus=0x11D)", 2, 8, 0x11D),
        ("gf(2^8,modulus=0x11D)", 2, 8, 0x11D),
        ("gf(2^3)", 2, 3, 0xB),
        ("gf(7)", 7, 1, 7),
        ("gf(3^2, modulus=17)", 3, 2, 17),
    ],
)
def test_parse_format_round_trip(text, p, m, modulus):
    f = parse_field(text)
    assert (f.p, f.m, f.modulus_int) == (p, m, modulus)
    assert parse_field(format_field(f)) == f


def test_parse_rejects_garbage():
    with pytest.raises(UsageError):
        parse_field("GF256")


def test_default_moduli_are_irreducible_and_primitive():
    for m in range(1, 17):
        f = field_new(2, m)
        if m > 1:
            assert f.generator == 2  # x itself is primitive for the tabulated moduli
