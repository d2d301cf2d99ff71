"""Exact growth constants and the dilogarithm quantities of the random model.

The density constant

    c(r, m) = (1/m) * prod_{p | m, p | r} (1 + 1/p)^-1
                    * prod_{p | m, p not | r} (1 - 1/p^2)^-1

governs totient sums over the progression r mod m.  For a periodic sign
pattern with cover {(t, theta_t) mod 2m}, the growth constant is the exact
rational

    C = 3 * sum_t c(t, 2m) * theta_t^2 ,

and log lcm(a + s_1, ..., a^n + s_n) grows like C * (log a / pi^2) * n^2.
For uniformly random shifts the constant is 6 * Li2(1/2) instead, where
Li2(1/2) = (pi^2 - 6 log^2 2) / 12.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cover import ProgressionCover, pattern_cover
from .cyclotomic import _factorize
from .patterns import SignPattern

__all__ = [
    "DensityConstant",
    "GrowthConstant",
    "density_c",
    "growth_constant",
    "dilog",
    "random_model_constant",
]


@dataclass(frozen=True)
class DensityConstant:
    r: int
    m: int
    value: Fraction


@dataclass(frozen=True)
class GrowthConstant:
    """Exact constant C for a pattern, with its cover kept as provenance."""

    pattern: SignPattern
    C: Fraction
    cover: ProgressionCover

    def to_json_obj(self) -> dict:
        return {
            "pattern": str(self.pattern),
            "C": {"num": self.C.numerator, "den": self.C.denominator},
            "C_float": float(self.C),
            "cover": self.cover.to_json_obj(),
        }


def density_c(r: int, m: int) -> Fraction:
    """Exact density constant c(r, m) as a reduced rational in (0, 1]."""
    if r < 1 or m < 1:
        raise ValueError(f"density_c requires r, m >= 1, got ({r}, {m})")
    value = Fraction(1, m)
    for p in _factorize(m):
        if r % p == 0:
            value *= Fraction(p, p + 1)
        else:
            value *= Fraction(p * p, p * p - 1)
    return value


def growth_constant(pattern: SignPattern) -> GrowthConstant:
    """Exact rational growth constant for a periodic pattern.

    Assembled purely from the pattern's progression cover so that the
    constant inherits whatever trust the oracle-tested cover has; no
    per-pattern shortcuts.  The value does not depend on the base a.
    """
    cover = pattern_cover(pattern)
    total = Fraction(0)
    for t, theta in cover.slopes.items():
        total += density_c(t, cover.modulus) * theta * theta
    return GrowthConstant(pattern, 3 * total, cover)


def dilog(z: float) -> float:
    """Dilogarithm sum_{k>=1} z^k / k^2 for 0 <= z <= 1/2.

    Plain series summation: on this range terms shrink at least
    geometrically with ratio 1/2, so ~60 terms give absolute error well
    under 1e-14.  Terms are accumulated smallest-first to keep rounding
    noise below the requested tolerance.
    """
    if not 0.0 <= z <= 0.5:
        raise ValueError(f"dilog implemented only on [0, 1/2], got {z}")
    if z == 0.0:
        return 0.0
    terms = []
    power = 1.0
    for k in range(1, 200):
        power *= z
        term = power / (k * k)
        terms.append(term)
        if term < 1e-20:
            break
    return math.fsum(reversed(terms))


def random_model_constant() -> float:
    """The random-shift growth constant 6 * Li2(1/2) ~= 3.4934431587900."""
    return 6.0 * dilog(0.5)
