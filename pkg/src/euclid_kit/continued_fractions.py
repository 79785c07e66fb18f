"""Continued fractions of positive rationals and their convergents.

Covers expansion, exact evaluation, the convergent recurrence with its
determinant identity, the unit-equation solution read off the truncated
expansion, and certified quotient prefixes for values known only as an
interval.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from euclid_kit import _kernels
from euclid_kit.errors import DomainError


@dataclass(frozen=True)
class ContinuedFraction:
    """Finite continued fraction [c0; c1, ..., cl] of a positive rational.

    Well-formed means c0 >= 0 and every later quotient >= 1. The canonical
    form additionally bans a trailing 1 (fold [..., c, 1] into [..., c+1])
    so each positive rational has exactly one representative; non-canonical
    twins are still accepted and evaluate correctly.
    """

    quotients: tuple[int, ...]

    def __post_init__(self) -> None:
        qs = tuple(self.quotients)
        object.__setattr__(self, "quotients", qs)
        if not qs:
            raise DomainError("continued fraction needs at least one quotient")
        if qs[0] < 0:
            raise DomainError("first quotient must be >= 0")
        if any(c < 1 for c in qs[1:]):
            raise DomainError("quotients after the first must be >= 1")

    def __len__(self) -> int:
        return len(self.quotients)

    @property
    def is_canonical(self) -> bool:
        return len(self.quotients) == 1 or self.quotients[-1] >= 2

    def canonical(self) -> "ContinuedFraction":
        """Fold a trailing 1 away; identity on already-canonical input."""
        if self.is_canonical:
            return self
        qs = self.quotients
        return ContinuedFraction(qs[:-2] + (qs[-2] + 1,))


class Convergent(NamedTuple):
    n: int
    p: int
    q: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.p, self.q)


def _quotients_of(cf: ContinuedFraction | Iterable[int]) -> tuple[int, ...]:
    if isinstance(cf, ContinuedFraction):
        return cf.quotients
    return ContinuedFraction(tuple(cf)).quotients


def cf_from_rational(r: Fraction) -> ContinuedFraction:
    """Canonical continued fraction of a positive rational."""
    if r <= 0:
        raise DomainError("continued fractions are taken of positive values")
    return ContinuedFraction(tuple(_kernels.cf_quotients(r.numerator, r.denominator)))


def cf_value(cf: ContinuedFraction | Iterable[int]) -> Fraction:
    """Exact value of a continued fraction, folded from the innermost term.

    Inverse of cf_from_rational on canonical input; non-canonical twins
    evaluate to the same rational.
    """
    qs = _quotients_of(cf)
    value = Fraction(qs[-1])
    for c in reversed(qs[:-1]):
        value = c + 1 / value
    return value


def convergents(cf: ContinuedFraction | Iterable[int]) -> list[Convergent]:
    """Convergents p_n/q_n of every prefix, via the matrix recurrence.

    Seeded with (p_-1, q_-1) = (1, 0); successive pairs satisfy
    p_n*q_{n-1} - p_{n-1}*q_n = (-1)**(n+1), which also forces each
    convergent to be in lowest terms.
    """
    qs = _quotients_of(cf)
    return [Convergent(n, p, q) for n, (p, q) in enumerate(_kernels.convergent_pairs(qs))]


def lagrange_solution(a: int, b: int) -> tuple[int, int, int]:
    """Solve the unit equation for coprime a, b by truncating the expansion.

    Returns (r, s, sign) where r/s is the value of [c0; ..., c_{l-1}] (the
    expansion of a/b cut before its last quotient, with r/s = 1/0 for a
    single-term expansion) and a*s - b*r = sign = (-1)**(l+1).
    """
    if a <= 0 or b <= 0:
        raise DomainError("inputs must be positive")
    quotients = _kernels.cf_quotients(a, b)
    pairs = _kernels.convergent_pairs(quotients)
    if pairs[-1] != (a, b):
        # The final convergent reproduces a/b exactly only in lowest terms.
        raise DomainError("not coprime")
    r, s = pairs[-2] if len(pairs) >= 2 else (1, 0)
    sign = -1 if len(quotients) % 2 else 1
    return r, s, sign


def interval_quotients(lo: Fraction, hi: Fraction, max_terms: int) -> tuple[int, ...]:
    """Quotients certain for every real in [lo, hi], at most max_terms of them.

    At each stage the integer parts of both endpoints are compared: on
    agreement that quotient is emitted and both endpoints recurse on the
    reciprocal fractional part (which swaps their roles); on disagreement,
    or once either endpoint terminates, no further quotient is certain and
    the prefix stops. Equal endpoints therefore yield the plain expansion
    of that rational.
    """
    if lo <= 0:
        raise DomainError("interval must be positive")
    if hi < lo:
        raise DomainError("interval is empty")
    if max_terms < 1:
        raise DomainError("max_terms must be >= 1")
    out: list[int] = []
    while len(out) < max_terms:
        floor_lo = lo.numerator // lo.denominator
        floor_hi = hi.numerator // hi.denominator
        if floor_lo != floor_hi:
            break
        out.append(floor_lo)
        frac_lo = lo - floor_lo
        frac_hi = hi - floor_hi
        if frac_lo == 0 or frac_hi == 0:
            break
        lo, hi = 1 / frac_hi, 1 / frac_lo
    return tuple(out)
