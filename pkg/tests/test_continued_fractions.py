import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from euclid_kit.continued_fractions import (
    ContinuedFraction,
    cf_from_rational,
    cf_value,
    convergents,
    interval_quotients,
    lagrange_solution,
)
from euclid_kit.errors import DomainError

# 30 correct digits, enough to sandwich the circle ratio exactly.
PI_30 = 3141592653589793238462643383279
PI_LO_30 = Fraction(PI_30, 10**30)
PI_HI_30 = Fraction(PI_30 + 1, 10**30)


def fold_value(quotients) -> Fraction:
    """Right-fold oracle, independent of the convergent recurrence."""
    value = Fraction(quotients[-1])
    for c in reversed(quotients[:-1]):
        value = c + 1 / value
    return value


def test_type_validation():
    with pytest.raises(DomainError):
        ContinuedFraction(())
    with pytest.raises(DomainError):
        ContinuedFraction((-1, 2))
    with pytest.raises(DomainError):
        ContinuedFraction((3, 0, 2))
    assert ContinuedFraction((0, 2)).quotients == (0, 2)


def test_canonical_folding():
    assert not ContinuedFraction((3, 7, 15, 1)).is_canonical
    assert ContinuedFraction((3, 7, 15, 1)).canonical().quotients == (3, 7, 16)
    assert ContinuedFraction((5,)).is_canonical
    assert ContinuedFraction((1,)).is_canonical
    # the non-canonical twin evaluates to the same value
    assert cf_value((3, 7, 15, 1)) == cf_value((3, 7, 16))


def test_expansion_examples():
    assert cf_from_rational(Fraction(54, 15)).quotients == (3, 1, 1, 2)
    assert cf_from_rational(Fraction(5)).quotients == (5,)
    assert cf_from_rational(Fraction(41, 12)).quotients == (3, 2, 2, 2)
    assert cf_from_rational(Fraction(2, 5)).quotients == (0, 2, 2)
    with pytest.raises(DomainError):
        cf_from_rational(Fraction(0))
    with pytest.raises(DomainError):
        cf_from_rational(Fraction(-3, 7))


def test_value_examples():
    assert cf_value(ContinuedFraction((3, 1, 1, 2))) == Fraction(18, 5) == Fraction(54, 15)
    assert cf_value(ContinuedFraction((7,))) == 7
    assert cf_value(ContinuedFraction((3, 7, 15, 1))) == Fraction(355, 113)


@given(st.integers(1, 1000), st.integers(1, 1000))
def test_round_trip_and_canonical(p, q):
    r = Fraction(p, q)
    cf = cf_from_rational(r)
    assert cf.is_canonical
    assert cf_value(cf) == r
    assert fold_value(cf.quotients) == r


def test_convergents_paper_sequence():
    convs = convergents(ContinuedFraction((3, 7, 15, 1, 292)))
    assert [(c.p, c.q) for c in convs] == [
        (3, 1), (22, 7), (333, 106), (355, 113), (103993, 33102)
    ]
    assert convergents(ContinuedFraction((5,)))[0][1:] == (5, 1)
    convs = convergents(ContinuedFraction((3, 2, 2, 2)))
    assert [(c.p, c.q) for c in convs] == [(3, 1), (7, 2), (17, 5), (41, 12)]


@given(st.integers(1, 1000), st.integers(1, 1000))
def test_convergent_invariants(p, q):
    r = Fraction(p, q)
    convs = convergents(cf_from_rational(r))
    prev_p, prev_q = 1, 0
    for conv in convs:
        assert conv.p * prev_q - prev_p * conv.q == (-1) ** (conv.n + 1)
        assert math.gcd(conv.p, conv.q) == 1
        prev_p, prev_q = conv.p, conv.q
    assert convs[-1].value == r
    for conv in convs:
        if conv.n % 2 == 0:
            assert conv.value <= r
        else:
            assert conv.value >= r


def test_lagrange_examples():
    assert lagrange_solution(41, 12) == (17, 5, 1)
    assert lagrange_solution(2, 1) == (1, 0, -1)
    r, s, sign = lagrange_solution(7, 5)
    assert (r, s) == (3, 2) and 7 * s - 5 * r == sign == -1


def test_lagrange_rejects_common_factor():
    with pytest.raises(DomainError, match="not coprime"):
        lagrange_solution(54, 15)
    with pytest.raises(DomainError):
        lagrange_solution(0, 5)


def test_lagrange_identity_small_grid():
    for a in range(1, 120):
        for b in range(1, 120):
            if math.gcd(a, b) != 1:
                continue
            r, s, sign = lagrange_solution(a, b)
            length = len(cf_from_rational(Fraction(a, b)))
            assert a * s - b * r == sign == (-1) ** (length - 1 + 1)


def test_interval_pinned_prefixes():
    lo = Fraction(314159265358979, 10**14)
    hi = Fraction(314159265358980, 10**14)
    assert PI_LO_30 <= hi and lo <= PI_HI_30  # the bounds do bracket the ratio
    assert interval_quotients(lo, hi, 5) == (3, 7, 15, 1, 292)

    assert interval_quotients(Fraction(18, 5), Fraction(18, 5), 99) == (3, 1, 1, 2)

    glo, ghi = Fraction(16180339, 10**7), Fraction(16180340, 10**7)
    assert interval_quotients(glo, ghi, 10) == (1,) * 10


def test_interval_edge_behaviour():
    # endpoint integer parts disagree: nothing is certain
    assert interval_quotients(Fraction(3, 2), Fraction(2), 10) == ()
    # lower endpoint terminates after the shared quotient
    assert interval_quotients(Fraction(2), Fraction(9, 4), 10) == (2,)
    with pytest.raises(DomainError):
        interval_quotients(Fraction(0), Fraction(1), 5)
    with pytest.raises(DomainError):
        interval_quotients(Fraction(3), Fraction(2), 5)
    with pytest.raises(DomainError):
        interval_quotients(Fraction(1), Fraction(2), 0)


@given(
    st.fractions(min_value=Fraction(1, 10**4), max_value=10**4),
    st.fractions(min_value=0, max_value=Fraction(1, 2)),
    st.integers(1, 12),
)
def test_interval_prefix_of_every_member(lo, width, max_terms):
    hi = lo + width
    prefix = interval_quotients(lo, hi, max_terms)
    assert len(prefix) <= max_terms
    for x in (lo, hi, (2 * lo + hi) / 3):
        full = cf_from_rational(x).quotients
        assert full[: len(prefix)] == prefix
