"""Shift sequences: periodic sign patterns and seeded random +-1 streams.

A periodic pattern is a nonempty word over {-1, +1}, written externally as
a string of '-' and '+' characters ("-++" means s1=-1, s2=+1, s3=+1,
repeating with period 3).

Random shifts come from SplitMix64, chosen because it is a named, widely
specified 64-bit generator that is trivial to reproduce bit-for-bit on any
platform.  Shift i is +1 when the top bit of the i-th SplitMix64 output is
set, else -1.  Independent per-trial streams are derived as

    sub_seed(seed, trial) = seed XOR mix64(trial)

where mix64 is the SplitMix64 output function (golden-gamma increment
followed by the xor-multiply finalizer); this keeps parallel Monte Carlo
trials reproducible regardless of execution order.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "MAX_PERIOD",
    "SignPattern",
    "parse_pattern",
    "shift_at",
    "PatternError",
    "RandomShiftStream",
    "random_shifts",
    "subseed",
]

# Cover calculus enumerates residues mod 2m, so keep 2m <= 128.
MAX_PERIOD = 64

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


class PatternError(ValueError):
    """Raised for malformed sign pattern strings."""


@dataclass(frozen=True)
class SignPattern:
    """Nonempty periodic word over {-1, +1}."""

    word: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.word:
            raise PatternError("pattern must be nonempty")
        if len(self.word) > MAX_PERIOD:
            raise PatternError(
                f"pattern length {len(self.word)} exceeds limit {MAX_PERIOD}"
            )
        if any(s not in (-1, 1) for s in self.word):
            raise PatternError(f"pattern entries must be -1 or +1, got {self.word}")

    @property
    def period(self) -> int:
        return len(self.word)

    def shift_at(self, n: int) -> int:
        """Shift s_n of the periodic extension, for n >= 1."""
        if n < 1:
            raise ValueError(f"shift index must be >= 1, got {n}")
        return self.word[(n - 1) % len(self.word)]

    def shifts(self, n: int) -> list[int]:
        """First n shifts s_1..s_n."""
        return [self.shift_at(k) for k in range(1, n + 1)]

    def __str__(self) -> str:
        return "".join("+" if s == 1 else "-" for s in self.word)


def parse_pattern(text: str) -> SignPattern:
    """Parse a '-'/'+' word; errors name the first offending position."""
    if not text:
        raise PatternError("empty pattern")
    if len(text) > MAX_PERIOD:
        raise PatternError(
            f"pattern too long at position {MAX_PERIOD + 1}: "
            f"length {len(text)} exceeds limit {MAX_PERIOD}"
        )
    word = []
    for pos, ch in enumerate(text, start=1):
        if ch == "-":
            word.append(-1)
        elif ch == "+":
            word.append(1)
        else:
            raise PatternError(f"invalid character {ch!r} at position {pos}")
    return SignPattern(tuple(word))


def shift_at(pattern: SignPattern, n: int) -> int:
    """Module-level alias for SignPattern.shift_at."""
    return pattern.shift_at(n)


def _mix64(x: int) -> int:
    """SplitMix64 output function applied to a raw 64-bit state."""
    x = (x + _GOLDEN) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def subseed(seed: int, trial_index: int) -> int:
    """Per-trial sub-seed: seed XOR mix64(trial_index)."""
    return (seed ^ _mix64(trial_index & _MASK64)) & _MASK64


class RandomShiftStream:
    """Deterministic stream of +-1 shifts from a 64-bit seed.

    Single-owner: parallel consumers must derive their own streams via
    subseed(seed, trial_index), never share one instance.
    """

    def __init__(self, seed: int):
        if not 0 <= seed <= _MASK64:
            raise ValueError(f"seed must fit in 64 bits, got {seed}")
        self.seed = seed
        self._state = seed

    def next_shift(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        z ^= z >> 31
        return 1 if z >> 63 else -1

    def take(self, n: int) -> list[int]:
        return [self.next_shift() for _ in range(n)]


def random_shifts(seed: int, n: int) -> list[int]:
    """First n shifts of the stream seeded with `seed`."""
    if n < 1:
        raise ValueError(f"random_shifts requires n >= 1, got {n}")
    return RandomShiftStream(seed).take(n)
