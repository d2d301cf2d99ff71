"""Totient / divisor / cyclotomic checks against brute-force oracles."""

import math

import pytest

from cyclolcm import (
    DivisorSetKind,
    cyclotomic_poly,
    cyclotomic_value,
    divisor_count,
    divisor_set,
    divisors,
    log_big,
    totient,
    totient_sieve,
)
from cyclolcm.cyclotomic import mobius


def brute_totient(n):
    return sum(1 for k in range(1, n + 1) if math.gcd(n, k) == 1)


def brute_divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def test_totient_examples():
    assert totient(1) == 1
    assert totient(12) == 4
    assert totient(10) == 4
    with pytest.raises(ValueError):
        totient(0)


def test_totient_against_brute_count():
    for n in range(1, 400):
        assert totient(n) == brute_totient(n)


def test_totient_sieve_matches_totient():
    phi = totient_sieve(3000)
    assert phi[0] == 0
    for n in range(1, 3001):
        assert int(phi[n]) == totient(n)


def test_totient_divisor_sum_identity():
    # sum of phi over divisors of n equals n
    for n in range(1, 10_001):
        assert sum(totient(d) for d in divisors(n)) == n


def test_divisor_count():
    assert divisor_count(1) == 1
    assert divisor_count(12) == 6
    assert divisor_count(36) == 9
    for n in range(1, 300):
        assert divisor_count(n) == len(brute_divisors(n))
    with pytest.raises(ValueError):
        divisor_count(0)


def test_divisor_set_examples():
    assert divisor_set(3, DivisorSetKind.MINUS) == [1, 3]
    assert divisor_set(3, DivisorSetKind.PLUS) == [2, 6]
    assert divisor_set(4, DivisorSetKind.PLUS) == [8]
    # bare shift values are accepted
    assert divisor_set(3, -1) == [1, 3]
    assert divisor_set(3, 1) == [2, 6]


def test_divisor_set_structure():
    for k in range(1, 500):
        minus = divisor_set(k, -1)
        plus = divisor_set(k, 1)
        assert minus == brute_divisors(k)
        assert plus == [d for d in brute_divisors(2 * k) if 2 * k % d == 0 and k % d]
        assert all(d % 2 == 0 for d in plus)
        assert not set(minus) & set(plus)


def test_mobius_small():
    expected = {1: 1, 2: -1, 3: -1, 4: 0, 5: -1, 6: 1, 12: 0, 30: -1, 210: 1}
    for n, mu in expected.items():
        assert mobius(n) == mu


def test_cyclotomic_poly_small():
    assert cyclotomic_poly(1).coeffs == (-1, 1)
    assert cyclotomic_poly(2).coeffs == (1, 1)
    assert cyclotomic_poly(6).coeffs == (1, -1, 1)
    for n in range(1, 60):
        poly = cyclotomic_poly(n)
        assert poly.degree == totient(n)
        assert poly.coeffs[-1] == 1


def test_cyclotomic_105_has_coefficient_minus_two():
    poly = cyclotomic_poly(105)
    outside = [i for i, c in enumerate(poly.coeffs) if abs(c) > 1]
    assert outside, "some coefficient must leave {-1, 0, 1}"
    assert poly.coeffs[outside[0]] == -2


def _poly_mul(f, g):
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] += a * b
    return out


@pytest.mark.parametrize("n", [1, 2, 6, 12, 30, 105])
def test_cyclotomic_product_recovers_x_power_minus_one(n):
    # independent check by polynomial multiplication
    prod = [1]
    for d in divisors(n):
        prod = _poly_mul(prod, list(cyclotomic_poly(d).coeffs))
    expected = [0] * (n + 1)
    expected[0] = -1
    expected[n] = 1
    assert prod == expected


def test_cyclotomic_value_examples():
    assert cyclotomic_value(1, 2) == 1
    assert cyclotomic_value(6, 2) == 3
    prod = math.prod(cyclotomic_value(d, 2) for d in divisor_set(6, -1))
    assert prod == 63
    with pytest.raises(ValueError):
        cyclotomic_value(6, 1)


def test_cyclotomic_value_matches_polynomial_evaluation():
    for a in (2, 3, 10):
        for n in range(1, 41):
            assert cyclotomic_value(n, a) == cyclotomic_poly(n)(a)


@pytest.mark.parametrize("a", [2, 3, 10])
def test_shifted_power_factorizations(a):
    for n in range(1, 80):
        assert math.prod(cyclotomic_value(d, a) for d in divisor_set(n, -1)) == a**n - 1
        assert math.prod(cyclotomic_value(d, a) for d in divisor_set(n, 1)) == a**n + 1


@pytest.mark.parametrize("a", [2, 3])
def test_cyclotomic_gcd_divides_larger_index(a):
    values = {n: cyclotomic_value(n, a) for n in range(1, 81)}
    for m in range(2, 81):
        for n in range(1, m):
            assert m % math.gcd(values[m], values[n]) == 0


@pytest.mark.parametrize("a", [2, 3, 10])
def test_log_cyclotomic_tracks_totient(a):
    # |log phi_n(a) - phi(n) log a| stays below 1 nat at desk scale
    log_a = math.log(a)
    for n in range(2, 501):
        assert abs(log_big(cyclotomic_value(n, a)) - totient(n) * log_a) <= 1.0
