"""Empirical growth of log lcm(a + s_1, a^2 + s_2, ..., a^n + s_n).

Two engines:

* the exact engine folds lcm over arbitrary-precision shifted powers,
  keeping the running accumulator exact and also tracking the totient-sum
  surrogate sum_{d in L(n)} phi(d) * log a over the literal divisor-set
  union (the surrogate dominates the exact value; the difference is the
  small-prime slack, O(n^2 / log n));

* the cover-based surrogate evaluates the same totient sum through the
  pattern's progression cover and a sieve, which scales to n ~ 10^6 where
  the exact engine cannot go.

Normalized ratios divide by (log a / pi^2) * n^2, so they converge to the
pattern's growth constant.  The exact accumulator reaches roughly
C * (log a / pi^2) * n^2 nats (~5 Mbit at a=2, n=4000) and each step costs
a gcd against it, so runtime grows like n^3 with a large constant; the
engine refuses n beyond a default cap of 2000 unless overridden.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import IO, Iterator, Sequence

import numpy as np

from .constants import GrowthConstant
from .cover import pattern_cover
from .cyclotomic import divisor_list_sieve, totient_sieve
from .exact_arith import log_big
from .patterns import SignPattern

__all__ = [
    "EXACT_ENGINE_CAP",
    "GROWTH_CSV_HEADER",
    "GrowthSample",
    "ConvergenceReport",
    "exact_lcm_stream",
    "exact_log_lcm_series",
    "surrogate_series",
    "convergence_report",
    "write_growth_csv",
]

EXACT_ENGINE_CAP = 2000

GROWTH_CSV_HEADER = "n,log_lcm,phi_sum,ratio_exact,ratio_surrogate"


@dataclass(frozen=True)
class GrowthSample:
    """One checkpoint of a growth series.

    log_lcm / ratio_exact are None when only the surrogate engine ran;
    phi_sum carries the log a factor (nats).
    """

    n: int
    log_lcm: float | None
    phi_sum: float | None
    ratio_exact: float | None
    ratio_surrogate: float | None


@dataclass(frozen=True)
class ConvergenceReport:
    constant: float
    n_final: int
    final_ratio_exact: float | None
    final_ratio_surrogate: float | None
    gap_exact: float | None
    gap_surrogate: float | None
    gaps_nonincreasing_exact: bool | None
    gaps_nonincreasing_surrogate: bool | None


def _resolve_shifts(shifts: SignPattern | Sequence[int], n: int) -> list[int]:
    if isinstance(shifts, SignPattern):
        return shifts.shifts(n)
    if len(shifts) < n:
        raise ValueError(f"need at least {n} shifts, got {len(shifts)}")
    return list(shifts[:n])


def exact_lcm_stream(
    a: int, shifts: SignPattern | Sequence[int], n_max: int
) -> Iterator[tuple[int, int]]:
    """Yield (k, lcm(a + s_1, ..., a^k + s_k)) for k = 1..n_max, exactly."""
    if a < 2:
        raise ValueError(f"base a must be >= 2, got {a}")
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    seq = _resolve_shifts(shifts, n_max)
    acc = 1
    power = 1
    for k in range(1, n_max + 1):
        power *= a
        term = power + seq[k - 1]
        acc = acc // math.gcd(acc, term) * term
        yield k, acc


def _checkpoints(n_max: int, step: int) -> set[int]:
    pts = set(range(step, n_max + 1, step))
    pts.add(n_max)
    return pts


def exact_log_lcm_series(
    a: int,
    shifts: SignPattern | Sequence[int],
    n_max: int,
    step: int = 1,
    override_cap: bool = False,
) -> list[GrowthSample]:
    """Exact growth series with samples at n ≡ 0 (mod step) and at n_max.

    Each sample carries both log of the exact lcm and the totient-sum
    surrogate over the literal divisor-set union, so the two normalized
    ratios can be compared directly.
    """
    if step < 1:
        raise ValueError(f"step must be >= 1, got {step}")
    if n_max > EXACT_ENGINE_CAP and not override_cap:
        raise ValueError(
            f"exact engine capped at n_max <= {EXACT_ENGINE_CAP} "
            f"(requested {n_max}); pass override_cap=True to force, or use "
            "the surrogate engine for large n"
        )
    log_a = math.log(a)
    phi = totient_sieve(2 * n_max)
    divs = divisor_list_sieve(2 * n_max)
    seq = _resolve_shifts(shifts, n_max)
    # Incremental divisor-set union: in_union flags d in L(n), phi_total
    # accumulates phi(d) as each d first appears.
    in_union = bytearray(2 * n_max + 1)
    phi_total = 0
    want = _checkpoints(n_max, step)
    samples = []
    for k, acc in exact_lcm_stream(a, seq, n_max):
        if seq[k - 1] == -1:
            candidates = divs[k]
        else:
            candidates = [d for d in divs[2 * k] if k % d]
        for d in candidates:
            if not in_union[d]:
                in_union[d] = 1
                phi_total += int(phi[d])
        if k in want:
            norm = log_a / math.pi**2 * k * k
            log_lcm = log_big(acc)
            phi_sum = phi_total * log_a
            samples.append(
                GrowthSample(k, log_lcm, phi_sum, log_lcm / norm, phi_sum / norm)
            )
    return samples


def surrogate_series(
    a: int, pattern: SignPattern, n_max: int, step: int = 1
) -> list[GrowthSample]:
    """Cover-based totient-sum series; no exact lcm, so it scales far.

    One sieve up to 2*n_max turns every sample into arithmetic-progression
    array sums over the pattern's cover classes.
    """
    if a < 2:
        raise ValueError(f"base a must be >= 2, got {a}")
    if n_max < 1 or step < 1:
        raise ValueError(f"n_max and step must be >= 1, got ({n_max}, {step})")
    log_a = math.log(a)
    cover = pattern_cover(pattern)
    phi = totient_sieve(max(2 * n_max, cover.modulus))
    samples = []
    for n in sorted(_checkpoints(n_max, step)):
        phi_total = 0
        for t, theta in cover.slopes.items():
            limit = theta.numerator * n // theta.denominator
            phi_total += int(phi[t : limit + 1 : cover.modulus].sum())
        phi_sum = phi_total * log_a
        norm = log_a / math.pi**2 * n * n
        samples.append(GrowthSample(n, None, phi_sum, None, phi_sum / norm))
    return samples


def _doubling_gaps(
    samples: list[GrowthSample], constant: float, field: str
) -> tuple[float | None, bool | None]:
    """Gap at the final n and whether gaps shrink over n_f/4, n_f/2, n_f."""
    present = [s for s in samples if getattr(s, field) is not None]
    if not present:
        return None, None
    final = present[-1]
    gaps = []
    for target in (final.n / 4, final.n / 2, final.n):
        nearest = min(present, key=lambda s: abs(s.n - target))
        gaps.append(abs(getattr(nearest, field) - constant))
    nonincreasing = gaps[0] >= gaps[1] >= gaps[2]
    return abs(getattr(final, field) - constant), nonincreasing


def convergence_report(
    samples: Sequence[GrowthSample], constant: float | GrowthConstant
) -> ConvergenceReport:
    """Summarize how close the normalized ratios are to the constant."""
    if len(samples) < 3:
        raise ValueError(f"need at least 3 samples, got {len(samples)}")
    samples = sorted(samples, key=lambda s: s.n)
    c = float(constant.C) if isinstance(constant, GrowthConstant) else float(constant)
    final = samples[-1]
    gap_exact, mono_exact = _doubling_gaps(list(samples), c, "ratio_exact")
    gap_sur, mono_sur = _doubling_gaps(list(samples), c, "ratio_surrogate")
    return ConvergenceReport(
        constant=c,
        n_final=final.n,
        final_ratio_exact=final.ratio_exact,
        final_ratio_surrogate=final.ratio_surrogate,
        gap_exact=gap_exact,
        gap_surrogate=gap_sur,
        gaps_nonincreasing_exact=mono_exact,
        gaps_nonincreasing_surrogate=mono_sur,
    )


def write_growth_csv(samples: Sequence[GrowthSample], out: IO[str]) -> None:
    """Emit the growth CSV; missing exact fields become empty columns."""
    out.write(GROWTH_CSV_HEADER + "\n")
    for s in samples:
        fields = [
            str(s.n),
            "" if s.log_lcm is None else repr(s.log_lcm),
            "" if s.phi_sum is None else repr(s.phi_sum),
            "" if s.ratio_exact is None else repr(s.ratio_exact),
            "" if s.ratio_surrogate is None else repr(s.ratio_surrogate),
        ]
        out.write(",".join(fields) + "\n")
