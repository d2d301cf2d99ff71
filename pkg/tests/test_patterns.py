"""Sign pattern parsing and the reproducible random shift stream."""

import math

import pytest

from cyclolcm import RandomShiftStream, parse_pattern, random_shifts, subseed
from cyclolcm.patterns import MAX_PERIOD, PatternError, shift_at


def test_parse_examples():
    assert parse_pattern("-").word == (-1,)
    assert parse_pattern("-++").word == (-1, 1, 1)
    assert parse_pattern("-++").period == 3
    assert str(parse_pattern("+-+")) == "+-+"


def test_parse_errors_name_position():
    with pytest.raises(PatternError, match="position 2"):
        parse_pattern("+?")
    with pytest.raises(PatternError, match="empty"):
        parse_pattern("")
    with pytest.raises(PatternError, match=f"position {MAX_PERIOD + 1}"):
        parse_pattern("-" * (MAX_PERIOD + 1))
    with pytest.raises(PatternError):
        parse_pattern("+-0-")


def test_shift_at_wraps_periodically():
    p = parse_pattern("-++")
    assert shift_at(p, 1) == -1
    assert shift_at(p, 4) == -1
    assert shift_at(p, 6) == 1
    for n in range(1, 200):
        assert p.shift_at(n + p.period) == p.shift_at(n)


def test_shifts_prefix():
    p = parse_pattern("+-")
    assert p.shifts(5) == [1, -1, 1, -1, 1]


def test_random_shifts_deterministic():
    for seed in (0, 1, 42, 2**64 - 1):
        assert random_shifts(seed, 5) == random_shifts(seed, 5)
    # a stream consumed incrementally matches the one-shot call
    stream = RandomShiftStream(987654321)
    assert [stream.next_shift() for _ in range(64)] == random_shifts(987654321, 64)


def test_random_shifts_values_and_mean():
    shifts = random_shifts(12345, 10**5)
    assert set(shifts) == {-1, 1}
    assert abs(sum(shifts)) / 10**5 <= 4 / math.sqrt(10**5)


def test_distinct_seeds_give_distinct_streams():
    for i in range(100):
        assert random_shifts(2 * i, 64) != random_shifts(2 * i + 1, 64)


def test_subseed_spreads_trials():
    subs = {subseed(0x5EEDC0DE, t) for t in range(1000)}
    assert len(subs) == 1000
    assert subseed(7, 3) == subseed(7, 3)


def test_pattern_word_validation():
    with pytest.raises(PatternError):
        parse_pattern("x")
    with pytest.raises(ValueError):
        parse_pattern("-").shift_at(0)
    with pytest.raises(ValueError):
        RandomShiftStream(2**64)
