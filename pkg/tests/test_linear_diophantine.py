import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from euclid_kit.errors import DomainError
from euclid_kit.linear_diophantine import (
    BezoutCertificate,
    all_solutions_in_box,
    canonicalize,
    euclid_form,
    extended_gcd,
    gauss_inverse,
    ideal_equality_check,
    solve_linear,
)

nonzero = st.integers(-10**6, 10**6).filter(bool)


def test_extended_gcd_paper_instances():
    cert = extended_gcd(12, 41)
    assert (cert.g, cert.m, cert.n) == (1, -17, 5)
    assert 12 * cert.m + 41 * cert.n == 1

    cert = extended_gcd(7, 7)
    assert cert.g == 7 and 7 * cert.m + 7 * cert.n == 7

    cert = extended_gcd(15, 54)
    assert (cert.g, cert.m, cert.n) == (3, -7, 2)


def test_extended_gcd_rejects_zero():
    for a, b in [(0, 5), (5, 0), (0, 0)]:
        with pytest.raises(DomainError):
            extended_gcd(a, b)


@given(nonzero, nonzero)
def test_extended_gcd_identity_and_value(a, b):
    cert = extended_gcd(a, b)
    assert a * cert.m + b * cert.n == cert.g
    assert cert.g == math.gcd(a, b)


@given(st.integers(1, 2**256), st.integers(1, 2**256), st.booleans(), st.booleans())
def test_extended_gcd_large_signed(ma, mb, fa, fb):
    a = -ma if fa else ma
    b = -mb if fb else mb
    cert = extended_gcd(a, b)
    assert a * cert.m + b * cert.n == cert.g == math.gcd(a, b)


def test_certificate_validation():
    with pytest.raises(DomainError):
        BezoutCertificate(12, 41, 1, m=1, n=1)  # identity broken
    with pytest.raises(DomainError):
        BezoutCertificate(12, 41, 2, m=0, n=0)  # g not a common divisor


def test_canonicalize_examples():
    cert = canonicalize(BezoutCertificate(12, 41, 1, -17, 5))
    assert (cert.m, cert.n) == (24, -7)
    assert 12 * 24 + 41 * (-7) == 1

    # b = 1 forces the representative m = 0
    assert canonicalize(BezoutCertificate(1, 1, 1, 1, 0)).m == 0
    # already in range: unchanged
    cert = BezoutCertificate(1, 5, 1, 1, 0)
    assert canonicalize(cert) == cert


@given(nonzero, nonzero)
def test_canonicalize_is_idempotent_and_in_range(a, b):
    cert = canonicalize(extended_gcd(a, b))
    assert 0 <= cert.m < abs(b) // cert.g
    assert a * cert.m + b * cert.n == cert.g
    assert canonicalize(cert) == cert


def test_euclid_form_examples():
    form = euclid_form(12, 41)
    assert (form.m, form.n) == (17, 5)
    assert abs(12 * 17 - 41 * 5) == 1 and form.sign == -1

    form = euclid_form(6, 3)
    assert form.m >= 0 and form.n >= 0
    assert abs(6 * form.m - 3 * form.n) == 3

    form = euclid_form(15, 54)
    assert (form.m, form.n) == (7, 2)
    assert abs(15 * 7 - 54 * 2) == 3


def test_euclid_form_exhaustive_small():
    for x in range(1, 301):
        for y in range(1, 301):
            form = euclid_form(x, y)
            assert form.m >= 0 and form.n >= 0
            assert form.m * x - form.n * y == form.sign * math.gcd(x, y)


def test_gauss_inverse_examples():
    assert gauss_inverse(41, 12, method="scan") == 5
    assert gauss_inverse(41, 12, method="euclid") == 5
    assert gauss_inverse(1, 97) == 1
    assert gauss_inverse(7, 10, method="scan") == 3


def test_gauss_inverse_errors():
    with pytest.raises(DomainError, match="not invertible"):
        gauss_inverse(6, 9, method="scan")
    with pytest.raises(DomainError, match="not invertible"):
        gauss_inverse(6, 9, method="euclid")
    with pytest.raises(DomainError, match="scan too large"):
        gauss_inverse(3, 10**7 + 1, method="scan")
    with pytest.raises(DomainError):
        gauss_inverse(3, 1)
    with pytest.raises(DomainError):
        gauss_inverse(3, 10, method="sieve")


def test_gauss_inverse_accepts_negative_and_large_a():
    assert (-5) * gauss_inverse(-5, 13) % 13 == 1
    assert 54 * gauss_inverse(54, 41) % 41 == 1


@given(st.integers(2, 3000))
def test_gauss_inverse_methods_agree(b):
    for a in range(1, b + 1):
        if math.gcd(a, b) == 1:
            m_scan = gauss_inverse(a, b, method="scan")
            assert m_scan == gauss_inverse(a, b, method="euclid")
            assert 1 <= m_scan <= b and a * m_scan % b == 1
            # any two first coordinates of a*t + b*u = 1 agree mod b
            assert (extended_gcd(a, b).m - m_scan) % b == 0
            break


def test_solve_linear_examples():
    family = solve_linear(15, 54, 3)
    assert (family.x0, family.y0) == (-7, 2)
    assert (family.dx, family.dy) == (18, -5)
    assert 15 * family.x0 + 54 * family.y0 == 3

    assert solve_linear(15, 54, 5) is None

    family = solve_linear(12, 41, 1)
    assert 12 * family.x0 + 41 * family.y0 == 1
    with pytest.raises(DomainError):
        solve_linear(0, 4, 2)


@given(nonzero, nonzero, st.integers(-10**6, 10**6), st.integers(-10, 10))
def test_solve_linear_family_identity(a, b, c, k):
    family = solve_linear(a, b, c)
    if family is None:
        assert c % math.gcd(a, b) != 0
    else:
        x, y = family.solution(k)
        assert a * x + b * y == c


def test_box_examples():
    assert [x for x, _ in all_solutions_in_box(15, 54, 3, 60)] == [-43, -25, -7, 11, 29, 47]
    assert all_solutions_in_box(1, 1, 0, 2) == [(-2, 2), (-1, 1), (0, 0), (1, -1), (2, -2)]
    assert all_solutions_in_box(15, 54, 5, 60) == []


def test_box_bounds_checked():
    with pytest.raises(DomainError):
        all_solutions_in_box(10**4 + 1, 3, 1, 10)
    with pytest.raises(DomainError):
        all_solutions_in_box(3, 4, 1, 10**4 + 1)
    with pytest.raises(DomainError):
        all_solutions_in_box(3, 4, 1, 0)
    with pytest.raises(DomainError):
        all_solutions_in_box(3, 0, 1, 10)


@settings(max_examples=300)
@given(
    st.integers(-50, 50).filter(bool),
    st.integers(-50, 50).filter(bool),
    st.integers(-50, 50),
)
def test_family_matches_box_enumeration(a, b, c):
    family = solve_linear(a, b, c)
    from_family = family.solutions_in_box(100) if family else []
    assert from_family == all_solutions_in_box(a, b, c, 100)


def test_ideal_equality_examples():
    assert ideal_equality_check(12, 41, 100)
    assert ideal_equality_check(15, 54, 100)
    assert ideal_equality_check(2, 4, 10)
    assert ideal_equality_check(-9, 6, 50)
    with pytest.raises(DomainError):
        ideal_equality_check(12, 41, 10**4 + 1)
    with pytest.raises(DomainError):
        ideal_equality_check(0, 41, 10)


def test_ideal_equality_reachable_set_is_right_by_double_loop():
    # tiny instance checked against a dumb full double enumeration
    a, b, window = 6, 10, 30
    reachable = {
        a * s + b * t
        for s in range(-window, window + 1)
        for t in range(-window, window + 1)
        if abs(a * s + b * t) <= window
    }
    multiples = {k * 2 for k in range(-window // 2, window // 2 + 1)}
    assert reachable == multiples
    assert ideal_equality_check(a, b, window)
