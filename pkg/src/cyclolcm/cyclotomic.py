"""Multiplicative number theory: totients, divisors, cyclotomic polynomials.

Provides the Euler totient, divisor counting, the divisor sets carried by
a^n - 1 and a^n + 1, and exact cyclotomic polynomials / values.  The two
divisor sets are

    minus(n) = all divisors of n,
    plus(n)  = divisors of 2n that do not divide n   (all even),

so that a^n - 1 factors over minus(n) and a^n + 1 over plus(n) as products
of cyclotomic values.

Factorizations are obtained by trial division and memoized in a module
cache; the cache is only ever appended to under the GIL, so concurrent
callers see the same results as serial ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

__all__ = [
    "DivisorSetKind",
    "CycloPoly",
    "totient",
    "totient_sieve",
    "divisor_list_sieve",
    "divisor_count",
    "divisors",
    "divisor_set",
    "mobius",
    "cyclotomic_poly",
    "cyclotomic_value",
]


class DivisorSetKind(Enum):
    """Which divisor set a shift selects: -1 -> MINUS, +1 -> PLUS."""

    MINUS = -1
    PLUS = 1


_factor_cache: dict[int, dict[int, int]] = {}


def _factorize(n: int) -> dict[int, int]:
    """Prime factorization {p: exponent} by cached trial division."""
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    cached = _factor_cache.get(n)
    if cached is not None:
        return cached
    m = n
    fac: dict[int, int] = {}
    for p in (2, 3):
        while m % p == 0:
            fac[p] = fac.get(p, 0) + 1
            m //= p
    p = 5
    while p * p <= m:
        while m % p == 0:
            fac[p] = fac.get(p, 0) + 1
            m //= p
        p += 2 if p % 6 == 5 else 4  # skip multiples of 2 and 3
    if m > 1:
        fac[m] = fac.get(m, 0) + 1
    _factor_cache[n] = fac
    return fac


def totient(n: int) -> int:
    """Euler's phi: count of 1 <= k <= n coprime to n."""
    if n < 1:
        raise ValueError(f"totient requires n >= 1, got {n}")
    result = n
    for p in _factorize(n):
        result = result // p * (p - 1)
    return result


def totient_sieve(limit: int) -> np.ndarray:
    """Array phi with phi[n] = totient(n) for 0 <= n <= limit (phi[0] = 0)."""
    if limit < 1:
        raise ValueError(f"totient_sieve requires limit >= 1, got {limit}")
    phi = np.arange(limit + 1, dtype=np.int64)
    for p in range(2, limit + 1):
        if phi[p] == p:  # p is prime: no smaller prime touched it
            phi[p::p] -= phi[p::p] // p
    phi[0] = 0
    return phi


def divisor_list_sieve(limit: int) -> list[list[int]]:
    """divs[j] = sorted divisors of j for 0 <= j <= limit (divs[0] = [])."""
    if limit < 1:
        raise ValueError(f"divisor_list_sieve requires limit >= 1, got {limit}")
    divs: list[list[int]] = [[] for _ in range(limit + 1)]
    for d in range(1, limit + 1):
        for j in range(d, limit + 1, d):
            divs[j].append(d)
    return divs


def divisor_count(n: int) -> int:
    """tau(n), the number of positive divisors."""
    if n < 1:
        raise ValueError(f"divisor_count requires n >= 1, got {n}")
    result = 1
    for e in _factorize(n).values():
        result *= e + 1
    return result


def divisors(n: int) -> list[int]:
    """Sorted list of positive divisors of n."""
    divs = [1]
    for p, e in _factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def mobius(n: int) -> int:
    """Moebius mu(n): 0 on non-squarefree n, else (-1)^(#prime factors)."""
    fac = _factorize(n)
    if any(e > 1 for e in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


def divisor_set(k: int, kind: DivisorSetKind | int) -> list[int]:
    """Sorted divisor set of the shifted power a^k + u.

    MINUS (u = -1) gives the divisors of k; PLUS (u = +1) gives the
    divisors of 2k that do not divide k.  A bare shift value of -1 or +1
    is accepted in place of the enum.
    """
    if k < 1:
        raise ValueError(f"divisor_set requires k >= 1, got {k}")
    kind = DivisorSetKind(kind) if not isinstance(kind, DivisorSetKind) else kind
    if kind is DivisorSetKind.MINUS:
        return divisors(k)
    dk = set(divisors(k))
    return [d for d in divisors(2 * k) if d not in dk]


@dataclass(frozen=True)
class CycloPoly:
    """Cyclotomic polynomial of index n, coefficients in ascending degree."""

    index: int
    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def _poly_mul(f: list[int], g: list[int]) -> list[int]:
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return out


def _poly_divmod_monic(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Divide by a monic polynomial; quotient and remainder stay integral."""
    assert den[-1] == 1, "divisor must be monic"
    rem = list(num)
    qdeg = len(num) - len(den)
    quot = [0] * (qdeg + 1)
    for i in range(qdeg, -1, -1):
        c = rem[i + len(den) - 1]
        quot[i] = c
        if c:
            for j, b in enumerate(den):
                rem[i + j] -= c * b
    while len(rem) > 1 and rem[-1] == 0:
        rem.pop()
    return quot, rem


def _x_power_minus_one(e: int) -> list[int]:
    poly = [0] * (e + 1)
    poly[0] = -1
    poly[e] = 1
    return poly


def cyclotomic_poly(n: int) -> CycloPoly:
    """Exact coefficients of the n-th cyclotomic polynomial.

    Built as the quotient of products of (X^(n/d) - 1) split by the sign
    of mu(d); both products are monic so the division is exact over the
    integers.
    """
    if n < 1:
        raise ValueError(f"cyclotomic_poly requires n >= 1, got {n}")
    num: list[int] = [1]
    den: list[int] = [1]
    for d in divisors(n):
        mu = mobius(d)
        if mu == 1:
            num = _poly_mul(num, _x_power_minus_one(n // d))
        elif mu == -1:
            den = _poly_mul(den, _x_power_minus_one(n // d))
    quot, rem = _poly_divmod_monic(num, den)
    assert rem == [0], f"cyclotomic quotient not exact for n={n}"
    assert len(quot) - 1 == totient(n)
    return CycloPoly(n, tuple(quot))


def cyclotomic_value(n: int, a: int) -> int:
    """Value of the n-th cyclotomic polynomial at an integer a >= 2.

    Evaluates prod_{d|n} (a^(n/d) - 1)^mu(d) as a quotient of two big
    integer products instead of materializing coefficients; the division
    is exact and there is no coefficient blowup.
    """
    if n < 1:
        raise ValueError(f"cyclotomic_value requires n >= 1, got {n}")
    if a <= 1:
        raise ValueError(f"cyclotomic_value requires a >= 2, got {a}")
    num = 1
    den = 1
    for d in divisors(n):
        mu = mobius(d)
        if mu == 1:
            num *= a ** (n // d) - 1
        elif mu == -1:
            den *= a ** (n // d) - 1
    value, rem = divmod(num, den)
    assert rem == 0, f"cyclotomic value not integral for n={n}, a={a}"
    return value
