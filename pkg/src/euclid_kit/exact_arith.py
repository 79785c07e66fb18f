"""Exact numeric substrate: arbitrary-precision integers and reduced rationals.

Integers are built-in ``int``; rationals are ``fractions.Fraction``, which
already guarantees the invariants the rest of the package relies on: stored
reduced, positive denominator, one representation per value. This module
adds strict string parsing/formatting and the exact integer k-th root.
"""

from __future__ import annotations

import re
from fractions import Fraction

from euclid_kit.errors import DomainError

Integer = int
Rational = Fraction

_INT_RE = re.compile(r"[+-]?[0-9]+\Z")


def parse_integer(text: str) -> int:
    """Parse an optional-sign decimal string; anything else is rejected."""
    if not _INT_RE.match(text.strip()):
        raise DomainError(f"not a decimal integer: {text!r}")
    return int(text)


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" with decimal integer parts."""
    text = text.strip()
    num, sep, den = text.partition("/")
    if not sep:
        return Fraction(parse_integer(num))
    return normalize_rational(parse_integer(num), parse_integer(den))


def format_rational(r: Fraction) -> str:
    """Render as "p/q", or "p" for integral values; inverse of parse_rational."""
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def normalize_rational(num: int, den: int) -> Fraction:
    """Reduced fraction with positive denominator equal to num/den."""
    if den == 0:
        raise DomainError("zero denominator")
    return Fraction(num, den)


def integer_kth_root(n: int, k: int) -> tuple[int, bool]:
    """floor(n**(1/k)) and whether the root is exact.

    Binary search on the root magnitude, so the result is exact at any
    precision. Requires n >= 0 and k >= 1.
    """
    if n < 0 or k < 1:
        raise DomainError("integer_kth_root needs n >= 0 and k >= 1")
    if k == 1 or n < 2:
        return n, True
    # 2**ceil(bits/k) is already an upper bound; keep one spare doubling.
    hi = 1 << ((n.bit_length() + k - 1) // k + 1)
    lo = 1
    while lo < hi - 1:
        mid = (lo + hi) // 2
        if mid**k <= n:
            lo = mid
        else:
            hi = mid
    return lo, lo**k == n
