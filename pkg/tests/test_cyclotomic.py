import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kleinian.cyclotomic import (
    CyclotomicInteger,
    IncompatibleRingError,
    cyclotomic_polynomial,
    totient,
    zeta_power,
)

ORDERS = [3, 4, 7, 13, 19, 31]


def z(m, k):
    return zeta_power(m, k)


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


@pytest.mark.parametrize("m,coeffs", [
    (1, (-1, 1)),
    (2, (1, 1)),
    (3, (1, 1, 1)),
    (4, (1, 0, 1)),
    (6, (1, -1, 1)),
    (7, (1,) * 7),
    (12, (1, 0, -1, 0, 1)),
])
def test_cyclotomic_polynomial(m, coeffs):
    assert cyclotomic_polynomial(m).coefficients == coeffs


@pytest.mark.parametrize("m", range(1, 40))
def test_product_over_divisors(m):
    prod = [1]
    for d in range(1, m + 1):
        if m % d == 0:
            prod = poly_mul(prod, cyclotomic_polynomial(d).coefficients)
    assert prod == [-1] + [0] * (m - 1) + [1]
    phi = sum(1 for k in range(1, m + 1) if math.gcd(k, m) == 1)
    assert totient(m) == phi


@pytest.mark.parametrize("m", [p for p in range(2, 40) if all(p % d for d in range(2, p))])
def test_prime_order(m):
    assert cyclotomic_polynomial(m).coefficients == (1,) * m


def test_zeta_power_examples():
    assert z(3, 0) == CyclotomicInteger(3, [1])
    assert z(3, 2).coeffs == (-1, -1)
    assert z(7, 13).coeffs == (-1, -1, -1, -1, -1, -1)
    assert z(7, -1) == z(7, 6)


def test_add_mul_examples():
    assert z(3, 1) + z(3, 2) == CyclotomicInteger(3, [-1])
    assert z(3, 1) * z(3, 2) == CyclotomicInteger(3, [1])


def test_m7_product_with_float_oracle():
    prod = (1 + z(7, 1)) * (1 + z(7, 6))
    assert prod.coeffs == (1, 0, -1, -1, -1, -1)
    zeta = cmath.exp(2j * cmath.pi / 7)
    assert abs(prod.evaluate() - (1 + zeta) * (1 + zeta ** 6)) < 1e-9
    assert abs(prod.evaluate() - (2 + 2 * math.cos(2 * math.pi / 7))) < 1e-9


def test_as_rational_integer():
    assert CyclotomicInteger(3, [-1]).as_rational_integer() == -1
    assert z(3, 1).as_rational_integer() is None
    assert (1 + z(3, 1) + z(3, 2)).as_rational_integer() == 0


def test_mismatched_orders():
    with pytest.raises(IncompatibleRingError):
        z(3, 1) + z(4, 1)
    with pytest.raises(IncompatibleRingError):
        z(3, 1) * z(7, 1)


@pytest.mark.parametrize("m", ORDERS + [2, 5, 6, 8, 9])
def test_sum_of_all_powers_vanishes(m):
    total = CyclotomicInteger.zero(m)
    for k in range(m):
        total = total + z(m, k)
    assert total == CyclotomicInteger.zero(m)
    assert CyclotomicInteger.from_residue_counts(m, [1] * m) == CyclotomicInteger.zero(m)


@pytest.mark.parametrize("m", ORDERS)
def test_galois_pair_is_real(m):
    for k in range(m):
        pair = z(m, k) + z(m, m - k)
        assert abs(pair.evaluate().imag) < 1e-9
        assert abs(pair.evaluate().real - 2 * math.cos(2 * math.pi * k / m)) < 1e-9
        assert pair.conjugate() == pair


@pytest.mark.parametrize("m", ORDERS)
def test_power_consistency(m):
    assert z(m, 1) ** m == CyclotomicInteger.one(m)
    for a in range(m):
        for b in range(0, m, 3):
            assert z(m, a) * z(m, b) == z(m, a + b)


def elements(m):
    phi = totient(m)
    return st.lists(st.integers(-50, 50), min_size=phi, max_size=phi).map(lambda c: CyclotomicInteger(m, c))


@st.composite
def triples(draw):
    m = draw(st.sampled_from(ORDERS))
    return m, draw(elements(m)), draw(elements(m)), draw(elements(m))


@settings(max_examples=150, deadline=None)
@given(triples())
def test_ring_axioms(data):
    m, a, b, c = data
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a - a == CyclotomicInteger.zero(m)
    assert a * CyclotomicInteger.one(m) == a


@settings(max_examples=100, deadline=None)
@given(triples())
def test_multiplication_matches_complex_values(data):
    m, a, b, _ = data
    assert abs((a * b).evaluate() - a.evaluate() * b.evaluate()) < 1e-6 * (1 + abs(a.evaluate() * b.evaluate()))


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(ORDERS), st.lists(st.integers(-3, 3), min_size=1, max_size=70))
def test_unreduced_input_is_reduced(m, coeffs):
    # constructor reduction agrees with summing zeta powers
    expected = CyclotomicInteger.zero(m)
    for k, c in enumerate(coeffs):
        expected = expected + z(m, k) * c
    got = CyclotomicInteger(m, coeffs)
    assert got == expected
    assert len(got.coeffs) == totient(m)


def test_json_roundtrip():
    big = CyclotomicInteger(7, [10 ** 30, -3, 0, 0, 0, 2])
    doc = big.to_json()
    assert doc == {"m": 7, "coeffs": [str(10 ** 30), "-3", "0", "0", "0", "2"]}
    assert CyclotomicInteger.from_json(doc) == big
