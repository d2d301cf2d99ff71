"""Self-verification suites with independent oracles.

Four named suites, each a list of named checks that either pass or fail:

* ``table1``           -- growth_constant against the bundled reference
                          table of exact constants for every primitive
                          sign word of period <= 5 (52 entries).
* ``cover-oracle``     -- progression covers against the brute-force
                          divisor-set union, every nonempty word of
                          period <= 5 (62 words), every n <= 500, exact
                          set equality.
* ``cyclotomic``       -- product identities prod phi_d(a) = a^n -/+ 1
                          for n <= 200, a in {2, 3, 10}, and the pairwise
                          gcd divisibility (phi_m(a), phi_n(a)) | m for
                          n < m <= 120, a in {2, 3}.
* ``stochastic-oracle``-- the expectation formulas (single and pairwise)
                          against exhaustive enumeration of all 2^n shift
                          words for n <= 12, exact rational equality.

The CLI front end prints one PASS/FAIL line per check and exits nonzero
on any failure; tests call the suite functions directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .cover import pattern_cover
from .cyclotomic import cyclotomic_value, divisor_set
from .constants import growth_constant
from .patterns import SignPattern, parse_pattern
from .stochastic import exhaustive_indicator_tables, indicator_expectation, pair_expectation

__all__ = [
    "CheckResult",
    "REFERENCE_CONSTANTS",
    "all_sign_words",
    "suite_table1",
    "suite_cover_oracle",
    "suite_cyclotomic",
    "suite_stochastic_oracle",
    "SUITES",
]


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _frac(num: int, den: int = 1) -> Fraction:
    return Fraction(num, den)


# Exact growth constants for all 52 primitive sign words of period <= 5
# (words that are repetitions of a shorter word are omitted; their
# constants equal the primitive ones).
REFERENCE_CONSTANTS: dict[str, Fraction] = {
    "-": _frac(3),
    "+": _frac(4),
    "-+": _frac(4),
    "+-": _frac(3),
    "--+": _frac(13, 4),
    "-+-": _frac(105, 32),
    "-++": _frac(173, 48),
    "+--": _frac(105, 32),
    "+-+": _frac(173, 48),
    "++-": _frac(47, 12),
    "---+": _frac(7, 2),
    "--+-": _frac(3),
    "--++": _frac(7, 2),
    "-+--": _frac(27, 8),
    "-++-": _frac(125, 36),
    "-+++": _frac(38, 9),
    "+---": _frac(3),
    "+--+": _frac(7, 2),
    "+-++": _frac(7, 2),
    "++--": _frac(125, 36),
    "++-+": _frac(38, 9),
    "+++-": _frac(27, 8),
    "----+": _frac(19, 6),
    "---+-": _frac(101, 32),
    "---++": _frac(319, 96),
    "--+--": _frac(101, 32),
    "--+-+": _frac(319, 96),
    "--++-": _frac(487, 144),
    "--+++": _frac(7687, 2160),
    "-+---": _frac(101, 32),
    "-+--+": _frac(319, 96),
    "-+-+-": _frac(487, 144),
    "-+-++": _frac(7687, 2160),
    "-++--": _frac(733, 216),
    "-++-+": _frac(769, 216),
    "-+++-": _frac(2123, 576),
    "-++++": _frac(2219, 576),
    "+----": _frac(101, 32),
    "+---+": _frac(319, 96),
    "+--+-": _frac(733, 216),
    "+--++": _frac(769, 216),
    "+-+--": _frac(487, 144),
    "+-+-+": _frac(7687, 2160),
    "+-++-": _frac(2123, 576),
    "+-+++": _frac(2219, 576),
    "++---": _frac(487, 144),
    "++--+": _frac(7687, 2160),
    "++-+-": _frac(2123, 576),
    "++-++": _frac(2219, 576),
    "+++--": _frac(2123, 576),
    "+++-+": _frac(2219, 576),
    "++++-": _frac(39, 10),
}


def all_sign_words(max_period: int) -> list[str]:
    """Every nonempty '-'/'+' word of length <= max_period, sorted.

    Lexicographic with '-' before '+' (the numeric order of the shifts),
    shorter words first.
    """
    words = []
    for length in range(1, max_period + 1):
        for bits in range(1 << length):
            words.append(
                "".join("+" if (bits >> i) & 1 else "-" for i in range(length))
            )
    return sorted(words, key=lambda w: (len(w), [c == "+" for c in w]))


def suite_table1() -> list[CheckResult]:
    """Exact equality against the period <= 5 reference constants."""
    results = []
    for word, expected in REFERENCE_CONSTANTS.items():
        got = growth_constant(parse_pattern(word)).C
        results.append(
            CheckResult(
                f"constant {word}",
                got == expected,
                f"expected {expected}, got {got}",
            )
        )
    return results


def _cover_matches_oracle(pattern: SignPattern, n_max: int) -> tuple[bool, str]:
    """Exact set equality cover vs oracle at every 1 <= n <= n_max.

    Both sides grow monotonically, so each is maintained incrementally;
    the comparison at each n is still a literal set equality.
    """
    cover = pattern_cover(pattern)
    classes = [
        (t, theta.numerator, theta.denominator, t)
        for t, theta in sorted(cover.slopes.items())
    ]
    cover_set: set[int] = set()
    oracle_set: set[int] = set()
    next_d = {t: t for t, _, _, _ in classes}
    for n in range(1, n_max + 1):
        for t, num, den, _ in classes:
            lim = num * n // den
            d = next_d[t]
            while d <= lim:
                cover_set.add(d)
                d += cover.modulus
            next_d[t] = d
        oracle_set.update(divisor_set(n, pattern.shift_at(n)))
        if cover_set != oracle_set:
            extra = sorted(cover_set - oracle_set)[:5]
            missing = sorted(oracle_set - cover_set)[:5]
            return False, f"n={n}: cover-only {extra}, oracle-only {missing}"
    return True, ""


def suite_cover_oracle(n_max: int = 500, max_period: int = 5) -> list[CheckResult]:
    """Cover calculus vs brute force for all words of period <= 5."""
    results = []
    for word in all_sign_words(max_period):
        ok, detail = _cover_matches_oracle(parse_pattern(word), n_max)
        results.append(CheckResult(f"cover {word} n<={n_max}", ok, detail))
    return results


def suite_cyclotomic(
    n_max: int = 200, bases: tuple[int, ...] = (2, 3, 10), gcd_max: int = 120
) -> list[CheckResult]:
    """Product identities and pairwise gcd divisibility, all exact."""
    results = []
    for a in bases:
        values = {d: cyclotomic_value(d, a) for d in range(1, 2 * n_max + 1)}
        for sign, label in ((-1, "a^n-1"), (1, "a^n+1")):
            ok = True
            detail = ""
            for n in range(1, n_max + 1):
                prod = math.prod(values[d] for d in divisor_set(n, sign))
                if prod != a**n + sign:
                    ok = False
                    detail = f"first failure n={n}"
                    break
            results.append(
                CheckResult(f"product {label} a={a} n<={n_max}", ok, detail)
            )
    for a in (2, 3):
        ok = True
        detail = ""
        values = {d: cyclotomic_value(d, a) for d in range(1, gcd_max + 1)}
        for m in range(2, gcd_max + 1):
            for n in range(1, m):
                if m % math.gcd(values[m], values[n]):
                    ok = False
                    detail = f"first failure (m, n)=({m}, {n})"
                    break
            if not ok:
                break
        results.append(
            CheckResult(f"gcd(phi_m, phi_n) | m a={a} m<={gcd_max}", ok, detail)
        )
    return results


def suite_stochastic_oracle(n_max: int = 12) -> list[CheckResult]:
    """Expectation formulas vs exhaustive enumeration, exact rationals."""
    results = []
    for n in range(1, n_max + 1):
        singles, pairs = exhaustive_indicator_tables(n)
        ok = True
        detail = ""
        for d in range(1, 2 * n + 1):
            if singles[d] != indicator_expectation(n, d):
                ok = False
                detail = f"single d={d}: enum {singles[d]} vs formula {indicator_expectation(n, d)}"
                break
        if ok:
            for (d1, d2), enum in pairs.items():
                formula = pair_expectation(n, d1, d2)
                if enum != formula:
                    ok = False
                    detail = f"pair ({d1}, {d2}): enum {enum} vs formula {formula}"
                    break
        results.append(CheckResult(f"expectations n={n} all d<= {2*n}", ok, detail))
    return results


SUITES: dict[str, Callable[[], list[CheckResult]]] = {
    "table1": suite_table1,
    "cover-oracle": suite_cover_oracle,
    "cyclotomic": suite_cyclotomic,
    "stochastic-oracle": suite_stochastic_oracle,
}
