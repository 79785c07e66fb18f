"""Two-variable linear Diophantine machinery.

Bezout certificates in the signed and the non-negative (historical) form,
the residue-scan inverse with its division-free method, complete solution
families for a*x + b*y = c, and desk-scale enumeration checks of the
generated-set equality {a*s + b*t} = {multiples of g}.
"""

from __future__ import annotations

from dataclasses import dataclass

from euclid_kit import _kernels
from euclid_kit.errors import DomainError

SCAN_LIMIT = 10**7
BOX_LIMIT = 10**4


def _sign(v: int) -> int:
    return -1 if v < 0 else 1


def _ceil_div(p: int, q: int) -> int:
    return -((-p) // q)


@dataclass(frozen=True)
class BezoutCertificate:
    """Witness (g, m, n) that a*m + b*n = g = gcd(a, b)."""

    a: int
    b: int
    g: int
    m: int
    n: int

    def __post_init__(self) -> None:
        if self.a == 0 or self.b == 0:
            raise DomainError("inputs must be non-zero")
        if self.g <= 0 or self.a % self.g or self.b % self.g:
            raise DomainError("g must be a positive common divisor")
        if self.a * self.m + self.b * self.n != self.g:
            raise DomainError("certificate identity does not hold")


@dataclass(frozen=True)
class EuclidForm:
    """Non-negative coefficients with |m*x - n*y| = gcd(x, y).

    sign is +1 when the m*x side is the larger one, so that
    m*x - n*y = sign * gcd(x, y).
    """

    x: int
    y: int
    m: int
    n: int
    sign: int


@dataclass(frozen=True)
class SolutionFamily:
    """All solutions of a*x + b*y = c: (x0 + k*dx, y0 + k*dy) for k in Z."""

    a: int
    b: int
    c: int
    x0: int
    y0: int
    dx: int
    dy: int

    def solution(self, k: int) -> tuple[int, int]:
        return self.x0 + k * self.dx, self.y0 + k * self.dy

    def solutions_in_box(self, bound: int) -> list[tuple[int, int]]:
        """Members with |x| <= bound, ascending in x."""
        if self.dx > 0:
            k_lo = _ceil_div(-bound - self.x0, self.dx)
            k_hi = (bound - self.x0) // self.dx
        else:
            k_lo = _ceil_div(bound - self.x0, self.dx)
            k_hi = (-bound - self.x0) // self.dx
        sols = [self.solution(k) for k in range(k_lo, k_hi + 1)]
        sols.sort()
        return sols


def extended_gcd(a: int, b: int) -> BezoutCertificate:
    """Certificate from the remainder chain, coefficients by back-substitution.

    Negative arguments are handled on magnitudes, with the matching
    coefficient's sign flipped so the identity stays exact.
    """
    if a == 0 or b == 0:
        raise DomainError("inputs must be non-zero")
    g, m, n = _kernels.ext_gcd(abs(a), abs(b))
    return BezoutCertificate(a, b, g, m * _sign(a), n * _sign(b))


def canonicalize(cert: BezoutCertificate) -> BezoutCertificate:
    """The unique equivalent certificate with 0 <= m < |b|/g."""
    step = abs(cert.b) // cert.g
    m = cert.m % step
    n = (cert.g - cert.a * m) // cert.b
    return BezoutCertificate(cert.a, cert.b, cert.g, m, n)


def euclid_form(x: int, y: int) -> EuclidForm:
    """Non-negative coefficient form for positive x, y."""
    if x <= 0 or y <= 0:
        raise DomainError("inputs must be positive")
    g, m, n = _kernels.ext_gcd(x, y)
    if n <= 0:
        return EuclidForm(x, y, m, -n, 1)
    return EuclidForm(x, y, -m, n, -1)


def gauss_inverse(a: int, b: int, method: str = "euclid") -> int:
    """The m in [1, b] with a*m = 1 (mod b), for a coprime to b > 1.

    method="scan" walks the complete residue system a*1, a*2, ..., a*b
    looking for residue 1 (division-free, bounded to b <= 10**7);
    method="euclid" reduces a Bezout coefficient into range. Both agree.
    """
    if b <= 1:
        raise DomainError("modulus must be at least 2")
    if method == "scan":
        if b > SCAN_LIMIT:
            raise DomainError("scan too large")
        for m in range(1, b + 1):
            if a * m % b == 1:
                return m
        raise DomainError("not invertible")
    if method == "euclid":
        reduced = a % b
        if reduced == 0:
            raise DomainError("not invertible")
        g, m, _ = _kernels.ext_gcd(reduced, b)
        if g != 1:
            raise DomainError("not invertible")
        return m % b
    raise DomainError(f"unknown method: {method!r}")


def solve_linear(a: int, b: int, c: int) -> SolutionFamily | None:
    """Solution family of a*x + b*y = c, or None when g = gcd(a,b) misses c."""
    cert = extended_gcd(a, b)
    if c % cert.g:
        return None
    scale = c // cert.g
    return SolutionFamily(
        a, b, c,
        x0=cert.m * scale, y0=cert.n * scale,
        dx=b // cert.g, dy=-(a // cert.g),
    )


def all_solutions_in_box(a: int, b: int, c: int, bound: int) -> list[tuple[int, int]]:
    """Exhaustive-scan solutions of a*x + b*y = c with |x| <= bound.

    Brute force by construction: tries every x in range and keeps the ones
    where b divides c - a*x. Coefficients and bound are capped at 10**4 to
    keep the scan at desk scale.
    """
    if a == 0 or b == 0:
        raise DomainError("inputs must be non-zero")
    if abs(a) > BOX_LIMIT or abs(b) > BOX_LIMIT:
        raise DomainError("coefficients exceed enumeration bound")
    if not 0 < bound <= BOX_LIMIT:
        raise DomainError("bound exceeded")
    return _kernels.box_solutions(a, b, c, bound)


def ideal_equality_check(a: int, b: int, window: int) -> bool:
    """Enumerate {a*s + b*t} inside [-window, window] and compare with
    the multiples of g there.

    Every value a*s + b*t in the window has a representation with
    0 <= s < |b|/g, so scanning s over [-|b|/g, |b|/g] (and, per s, exactly
    the t values that keep the sum inside the window) reaches the whole
    intersection.
    """
    if a == 0 or b == 0:
        raise DomainError("inputs must be non-zero")
    if abs(a) > BOX_LIMIT or abs(b) > BOX_LIMIT or not 0 < window <= BOX_LIMIT:
        raise DomainError("bound exceeded")
    g = _kernels.gcd_divide(abs(a), abs(b))
    reachable = set()
    span = abs(b) // g
    for s in range(-span, span + 1):
        base = a * s
        if b > 0:
            t_lo = _ceil_div(-window - base, b)
            t_hi = (window - base) // b
        else:
            t_lo = _ceil_div(window - base, b)
            t_hi = (-window - base) // b
        for t in range(t_lo, t_hi + 1):
            reachable.add(base + b * t)
    multiples = {k * g for k in range(-(window // g), window // g + 1)}
    return reachable == multiples
