"""Random-shift model: exact expectations, variance bound, Monte Carlo.

With shifts drawn independently and uniformly from {-1, +1}, the chance
that an index d has NOT entered the divisor-set union after n steps is
2^-(number of k <= n with d | 2k) = 2^-floor(n*gcd(2,d)/d), so

    E[indicator(n, d)] = 1 - 2^-floor(n*gcd(2,d)/d)

exactly, with a matching product formula for pairs that depends on whether
the joint index set is empty ([d1,d2] > 2n) and on the 2-adic valuations.
The totient-weighted sum X = sum_{d<=2n} phi(d) * indicator(n, d) then has
E[X] ~ (6/pi^2) * Li2(1/2) * n^2 and variance O(n^3), which Chebyshev
turns into concentration.

Everything here is either an exact rational (Fraction, denominators powers
of two) or a reproducible seeded simulation.  For n <= 12 the module can
enumerate all 2^n shift words outright; that exhaustive oracle is what the
tests use to adjudicate the expectation formulas, floors and all.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .constants import random_model_constant
from .cyclotomic import divisor_list_sieve, totient_sieve
from .patterns import random_shifts, subseed

__all__ = [
    "EXACT_EXPECTATION_CAP",
    "EXHAUSTIVE_CAP",
    "IndicatorExpectation",
    "TrialResult",
    "MonteCarloSummary",
    "indicator_expectation",
    "pair_expectation",
    "expected_X",
    "variance_bound",
    "gcd_pair_sum",
    "gcd_pair_sum_bruteforce",
    "x_value",
    "monte_carlo",
    "exhaustive_trials",
    "exhaustive_indicator_tables",
]

EXACT_EXPECTATION_CAP = 2000
EXHAUSTIVE_CAP = 20


@dataclass(frozen=True)
class IndicatorExpectation:
    """Record of E[indicator(n, d)]; denominator is a power of two.

    The value vanishes exactly when no k <= n has d | 2k, i.e. for odd
    d > n and for even d > 2n.
    """

    n: int
    d: int
    value: Fraction


@dataclass(frozen=True)
class TrialResult:
    seed: int
    trial_index: int
    n: int
    X: int
    ratio: float  # pi^2 * X / n^2, the base-independent normalized value


@dataclass(frozen=True)
class MonteCarloSummary:
    n: int
    trials: int
    mean_X: float
    var_X: float | None  # sample variance; None for a single trial
    mean_ratio: float
    theory_ratio: float
    abs_gap: float

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "trials": self.trials,
            "mean_X": self.mean_X,
            "var_X": self.var_X,
            "mean_ratio": self.mean_ratio,
            "theory_ratio": self.theory_ratio,
            "abs_gap": self.abs_gap,
        }


def _floor_exponent(n: int, d: int) -> int:
    """floor(n * gcd(2, d) / d) = #{k <= n : d | 2k}."""
    return n * math.gcd(2, d) // d


def indicator_expectation(n: int, d: int) -> Fraction:
    """Exact probability that d lies in the random divisor-set union."""
    if n < 1 or d < 1:
        raise ValueError(f"indicator_expectation requires n, d >= 1, got ({n}, {d})")
    e = _floor_exponent(n, d)
    return 1 - Fraction(1, 2**e)


def pair_expectation(n: int, d1: int, d2: int) -> Fraction:
    """Exact expectation of the product of two membership indicators.

    Case split: if [d1, d2] <= 2n and the 2-adic valuations differ, some
    single shift forces one of d1, d2 into the union, so the joint-miss
    probability vanishes.  Otherwise the misses behave like a product over
    the union of the two index sets, giving the explicit power of two.
    """
    if n < 1 or d1 < 1 or d2 < 1:
        raise ValueError(
            f"pair_expectation requires n, d1, d2 >= 1, got ({n}, {d1}, {d2})"
        )
    e1 = _floor_exponent(n, d1)
    e2 = _floor_exponent(n, d2)
    lcm12 = d1 // math.gcd(d1, d2) * d2
    base = 1 - Fraction(1, 2**e1) - Fraction(1, 2**e2)
    nu1 = (d1 & -d1).bit_length() - 1
    nu2 = (d2 & -d2).bit_length() - 1
    if lcm12 <= 2 * n and nu1 != nu2:
        return base
    e12 = _floor_exponent(n, lcm12)
    return base + Fraction(1, 2 ** (e1 + e2 - e12))


def expected_X(n: int, mode: str = "exact") -> Fraction | float:
    """E[X] = sum_{d <= 2n} phi(d) * (1 - 2^-floor(n*gcd(2,d)/d)).

    mode="exact" returns the Fraction (denominator a power of two up to
    2^n, hence the cap); mode="float" sums in float64 and scales to any n.
    """
    if n < 1:
        raise ValueError(f"expected_X requires n >= 1, got {n}")
    if mode not in ("exact", "float"):
        raise ValueError(f"mode must be 'exact' or 'float', got {mode!r}")
    phi = totient_sieve(2 * n)
    if mode == "float":
        total = 0.0
        for d in range(1, 2 * n + 1):
            total += float(phi[d]) * (1.0 - 2.0 ** (-_floor_exponent(n, d)))
        return total
    if n > EXACT_EXPECTATION_CAP:
        raise ValueError(
            f"exact mode limited to n <= {EXACT_EXPECTATION_CAP} (denominators "
            f"reach 2^n); requested n={n}, use mode='float'"
        )
    # Group by exponent so the Fraction sum has one shared denominator.
    phi_by_exp: dict[int, int] = {}
    phi_total = 0
    for d in range(1, 2 * n + 1):
        e = _floor_exponent(n, d)
        phi_by_exp[e] = phi_by_exp.get(e, 0) + int(phi[d])
        phi_total += int(phi[d])
    emax = max(phi_by_exp)
    numerator = sum(w << (emax - e) for e, w in phi_by_exp.items())
    return phi_total - Fraction(numerator, 1 << emax)


def _coprime_pairs_upto(limit: int):
    """Yield ordered coprime pairs (a1, a2), a1*a2 <= limit, a1 <= a2."""
    for a1 in range(1, limit + 1):
        if a1 * a1 > limit:
            break
        for a2 in range(a1, limit // a1 + 1):
            if math.gcd(a1, a2) == 1:
                yield a1, a2


def variance_bound(n: int) -> float:
    """Explicit upper bound for Var[X].

    Sums d1*d2 * 2^-(e1+e2-e12) * (1 - 2^-e12) over ordered pairs with
    [d1, d2] <= 2n, enumerated through gcd d and coprime cofactors so the
    pair count stays near-linear in n (times log^2).
    """
    if n < 1:
        raise ValueError(f"variance_bound requires n >= 1, got {n}")
    two_n = 2 * n
    total = 0.0
    for d in range(1, two_n + 1):
        lim = two_n // d
        for a1, a2 in _coprime_pairs_upto(lim):
            d1 = d * a1
            d2 = d * a2
            e1 = _floor_exponent(n, d1)
            e2 = _floor_exponent(n, d2)
            e12 = _floor_exponent(n, d * a1 * a2)
            term = d1 * d2 * 2.0 ** (e12 - e1 - e2) * (1.0 - 2.0 ** (-e12))
            total += term if a1 == a2 else 2.0 * term
    return total


def gcd_pair_sum(n: int) -> int:
    """S(n) = sum of gcd(d1, d2) over ordered pairs with [d1, d2] <= n.

    Decomposed as sum_d d * #{coprime (a1, a2) : a1*a2 <= n/d}; grows
    like n^2.
    """
    if n < 1:
        raise ValueError(f"gcd_pair_sum requires n >= 1, got {n}")
    total = 0
    for d in range(1, n + 1):
        lim = n // d
        count = 0
        for a1, a2 in _coprime_pairs_upto(lim):
            count += 1 if a1 == a2 else 2
        total += d * count
    return total


def gcd_pair_sum_bruteforce(n: int) -> int:
    """Independent oracle for gcd_pair_sum: literal double loop."""
    if n < 1:
        raise ValueError(f"gcd_pair_sum requires n >= 1, got {n}")
    total = 0
    for d1 in range(1, n + 1):
        for d2 in range(1, n + 1):
            g = math.gcd(d1, d2)
            if d1 * d2 <= n * g:  # lcm <= n
                total += g
    return total


def _union_flags(shifts: Sequence[int], n: int, divs: list[list[int]]) -> bytearray:
    """Membership flags of the divisor-set union L(n) over d = 0..2n."""
    flags = bytearray(2 * n + 1)
    for k in range(1, n + 1):
        if shifts[k - 1] == -1:
            for d in divs[k]:
                flags[d] = 1
        else:
            for d in divs[2 * k]:
                if k % d:
                    flags[d] = 1
    return flags


def x_value(shifts: Sequence[int], n: int, phi=None, divs=None) -> int:
    """X = sum of phi(d) over the realized union L(n), for one shift word."""
    if n < 1:
        raise ValueError(f"x_value requires n >= 1, got {n}")
    if len(shifts) < n:
        raise ValueError(f"need at least {n} shifts, got {len(shifts)}")
    if phi is None:
        phi = totient_sieve(2 * n)
    if divs is None:
        divs = divisor_list_sieve(2 * n)
    flags = _union_flags(shifts, n, divs)
    return int(phi[np.frombuffer(flags, dtype=np.uint8).astype(bool)].sum())


def _summarize(results: list[TrialResult], n: int) -> MonteCarloSummary:
    xs = np.array([r.X for r in results], dtype=np.float64)
    mean_x = float(xs.mean())
    var_x = float(xs.var(ddof=1)) if len(xs) > 1 else None
    mean_ratio = float(np.mean([r.ratio for r in results]))
    theory = random_model_constant()
    return MonteCarloSummary(
        n=n,
        trials=len(results),
        mean_X=mean_x,
        var_X=var_x,
        mean_ratio=mean_ratio,
        theory_ratio=theory,
        abs_gap=abs(mean_ratio - theory),
    )


def monte_carlo(
    a: int,
    n: int,
    trials: int,
    seed: int,
    workers: int | None = None,
) -> tuple[list[TrialResult], MonteCarloSummary]:
    """Seeded Monte Carlo estimate of X over independent shift words.

    Trial t uses the stream seeded with subseed(seed, t), so results are
    reproducible bit-for-bit regardless of worker count or execution
    order.  The base a only matters for provenance: X and the normalized
    ratio pi^2 * X / n^2 are base-free.
    """
    if a < 2:
        raise ValueError(f"base a must be >= 2, got {a}")
    if n < 1 or trials < 1:
        raise ValueError(f"n and trials must be >= 1, got ({n}, {trials})")
    if workers is None:
        workers = int(os.environ.get("CYCLOLCM_THREADS", "1") or "1")
    phi = totient_sieve(2 * n)
    divs = divisor_list_sieve(2 * n)
    norm = math.pi**2 / (n * n)

    def run_trial(t: int) -> TrialResult:
        s = subseed(seed, t)
        x = x_value(random_shifts(s, n), n, phi, divs)
        return TrialResult(s, t, n, x, x * norm)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_trial, range(trials)))
    else:
        results = [run_trial(t) for t in range(trials)]
    return results, _summarize(results, n)


def _all_words(n: int) -> list[list[int]]:
    """All 2^n shift words; bit k-1 of the word index set means s_k = +1."""
    return [
        [1 if (w >> (k - 1)) & 1 else -1 for k in range(1, n + 1)]
        for w in range(1 << n)
    ]


def exhaustive_trials(n: int) -> tuple[list[int], Fraction]:
    """X for every one of the 2^n shift words, plus the exact mean.

    The enumeration oracle behind the expectation formulas; limited to
    n <= EXHAUSTIVE_CAP.
    """
    if not 1 <= n <= EXHAUSTIVE_CAP:
        raise ValueError(f"exhaustive mode requires 1 <= n <= {EXHAUSTIVE_CAP}")
    phi = totient_sieve(2 * n)
    divs = divisor_list_sieve(2 * n)
    xs = [x_value(word, n, phi, divs) for word in _all_words(n)]
    return xs, Fraction(sum(xs), len(xs))


def exhaustive_indicator_tables(
    n: int,
) -> tuple[dict[int, Fraction], dict[tuple[int, int], Fraction]]:
    """Exact E[indicator] and pairwise products by full enumeration.

    Returns ({d: E[I(n,d)]}, {(d1,d2): E[I(n,d1)*I(n,d2)]}) for all
    d, d1, d2 <= 2n, each an exact count over the 2^n words.
    """
    if not 1 <= n <= EXHAUSTIVE_CAP:
        raise ValueError(f"exhaustive mode requires 1 <= n <= {EXHAUSTIVE_CAP}")
    divs = divisor_list_sieve(2 * n)
    words = _all_words(n)
    member = np.zeros((len(words), 2 * n + 1), dtype=np.int64)
    for w, word in enumerate(words):
        flags = _union_flags(word, n, divs)
        member[w] = np.frombuffer(flags, dtype=np.uint8)
    denom = len(words)
    single_counts = member.sum(axis=0)
    pair_counts = member.T @ member
    singles = {d: Fraction(int(single_counts[d]), denom) for d in range(1, 2 * n + 1)}
    pairs = {
        (d1, d2): Fraction(int(pair_counts[d1, d2]), denom)
        for d1 in range(1, 2 * n + 1)
        for d2 in range(1, 2 * n + 1)
    }
    return singles, pairs
