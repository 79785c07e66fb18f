import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from euclid_kit.anthyphairesis import (
    gcd_anthyphairesis,
    gcd_division,
    quotient_sequence,
    same_ratio,
    subtract_trace,
)
from euclid_kit.errors import DomainError


def brute_gcd(x: int, y: int) -> int:
    return max(d for d in range(1, min(x, y) + 1) if x % d == 0 and y % d == 0)


def common_divisors(x: int, y: int, limit: int = 1000):
    return [d for d in range(1, min(x, y, limit) + 1) if x % d == 0 and y % d == 0]


def test_trace_paper_instances():
    trace = subtract_trace(15, 54)
    assert trace.terminal == 3
    assert trace.quotients == (3, 1, 1, 2)

    trace = subtract_trace(7, 7)
    assert trace.terminal == 7
    assert len(trace.steps) == 1 and trace.steps[0].quotient == 1

    trace = subtract_trace(12, 41)
    remainders = [s.remainder for s in trace.steps]
    assert remainders == [5, 2, 1, 0]
    assert trace.terminal == 1


def test_trace_structure_invariants():
    trace = subtract_trace(1071, 462)
    for step in trace.steps:
        assert step.larger == step.quotient * step.smaller + step.remainder
        assert 0 <= step.remainder < step.smaller
        assert step.quotient >= 1
    for prev, nxt in zip(trace.steps, trace.steps[1:]):
        assert (nxt.larger, nxt.smaller) == (prev.smaller, prev.remainder)
    assert trace.terminal == trace.steps[-1].smaller
    assert 1071 % trace.terminal == 0 and 462 % trace.terminal == 0


def test_trace_rendering():
    text = subtract_trace(15, 54).render()
    assert text.splitlines()[0] == "54 = 3*15 + 9"
    assert text.splitlines()[-1] == "gcd = 3"
    records = subtract_trace(15, 54).to_records()
    assert records[0] == {"larger": 54, "smaller": 15, "quotient": 3, "remainder": 9}


def test_quotient_sequence_examples():
    assert quotient_sequence(54, 15) == (3, 1, 1, 2)
    assert quotient_sequence(36, 10) == (3, 1, 1, 2)
    assert quotient_sequence(5, 1) == (5,)
    assert quotient_sequence(7, 7) == (1,)
    # orientation: always max : min
    assert quotient_sequence(15, 54) == quotient_sequence(54, 15)


@given(st.integers(1, 10**4), st.integers(1, 10**4))
def test_quotient_sequence_is_canonical(x, y):
    qs = quotient_sequence(x, y)
    assert all(c >= 1 for c in qs)
    assert len(qs) == 1 or qs[-1] >= 2


def test_gcd_examples():
    assert gcd_anthyphairesis(15, 54) == 3
    assert gcd_anthyphairesis(12, 41) == 1
    assert gcd_anthyphairesis(10**6, 10**6) == 10**6


@pytest.mark.parametrize("fn", [gcd_anthyphairesis, gcd_division])
def test_gcd_rejects_nonpositive(fn):
    for bad in [(0, 5), (5, 0), (-3, 5), (5, -3)]:
        with pytest.raises(DomainError):
            fn(*bad)


def test_gcd_against_trial_division():
    for x in range(1, 60):
        for y in range(1, 60):
            assert gcd_anthyphairesis(x, y) == brute_gcd(x, y)


@given(st.integers(1, 10**4), st.integers(1, 10**4))
def test_gcd_matches_stdlib(x, y):
    g = gcd_anthyphairesis(x, y)
    assert g == gcd_division(x, y) == math.gcd(x, y)


@given(st.integers(1, 10**6), st.integers(1, 10**6))
def test_porism_every_common_divisor_divides_terminal(x, y):
    g = gcd_anthyphairesis(x, y)
    for d in common_divisors(x, y):
        assert g % d == 0


@given(st.integers(1, 10**4), st.integers(1, 10**4))
def test_prop1_terminal_unit_iff_coprime(x, y):
    terminal = subtract_trace(x, y).terminal
    coprime = common_divisors(x, y) == [1]
    assert (terminal == 1) == coprime


def test_same_ratio_examples():
    assert same_ratio(15, 54, 10, 36)
    assert same_ratio(1, 2, 2, 1)
    assert not same_ratio(2, 3, 3, 5)


@given(*(st.integers(1, 300) for _ in range(4)))
def test_same_ratio_is_cross_multiplication(x1, y1, x2, y2):
    expected = max(x1, y1) * min(x2, y2) == max(x2, y2) * min(x1, y1)
    assert same_ratio(x1, y1, x2, y2) == expected
