"""Arbitrary-precision integer and exact rational primitives.

Python's built-in ``int`` is the arbitrary-precision integer used throughout
(sign + magnitude, canonical zero), and ``fractions.Fraction`` is the exact
rational (reduced, positive denominator).  This module adds the few
operations the rest of the package needs on top of them, most notably a
logarithm that stays accurate for multi-megabit integers.

All values are immutable and every function here is pure, so concurrent
callers are safe.
"""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = ["BigRat", "gcd", "lcm", "valuation", "log_big"]

# Exact rational type used across the package.
BigRat = Fraction

_LN2 = math.log(2.0)


def gcd(x: int, y: int) -> int:
    """Nonnegative greatest common divisor; gcd(0, 0) == 0."""
    return math.gcd(x, y)


def lcm(x: int, y: int) -> int:
    """Least common multiple of two positive integers."""
    if x < 1 or y < 1:
        raise ValueError(f"lcm requires positive operands, got ({x}, {y})")
    return x // math.gcd(x, y) * y


def valuation(p: int, x: int) -> int:
    """Largest v with p**v dividing x.  p must be prime, x nonzero."""
    if p < 2:
        raise ValueError(f"valuation needs a prime base, got {p}")
    if x == 0:
        raise ValueError("valuation of 0 is undefined")
    x = abs(x)
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def log_big(x: int) -> float:
    """Natural log of a positive integer, relative error below 1e-12.

    Works from the bit length plus the top 64 bits, so it never converts
    the full integer to a float; plain float(x) overflows once x exceeds
    ~2**1024, far below the lcm accumulators produced here.
    """
    if x <= 0:
        raise ValueError(f"log_big requires x >= 1, got {x}")
    nbits = x.bit_length()
    if nbits <= 64:
        return math.log(x)
    shift = nbits - 64
    # Truncation drops at most 2**-63 in relative terms; negligible next
    # to float rounding of the two summands.
    return math.log(x >> shift) + shift * _LN2
