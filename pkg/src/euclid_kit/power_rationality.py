"""k-th power rationality: n**(1/k) is rational only when it is an integer.

The reduced-fraction argument behind the theorem: if (b/a)**k = n with
gcd(a, b) = 1, then b**k / a**k is already reduced, so a**k = 1 and
b**k = n. rational_kth_root relies on the theorem and searches integers
only; reduced_power_check tests the reduced-fraction statement directly so
the theorem itself stays observable.
"""

from __future__ import annotations

from euclid_kit.errors import DomainError
from euclid_kit.exact_arith import integer_kth_root


class TheoremViolation(RuntimeError):
    """A reduced fraction with denominator > 1 produced an integer power.

    Unreachable for correct arithmetic; exists as a tripwire for the
    property suite (a broken build raises instead of silently returning).
    """


def rational_kth_root(n: int, k: int) -> int | None:
    """The integer b with b**k = n, or None (certifying n**(1/k) irrational)."""
    if n < 1 or k < 2:
        raise DomainError("rational_kth_root needs n >= 1 and k >= 2")
    root, exact = integer_kth_root(n, k)
    return root if exact else None


def reduced_power_check(a: int, b: int, k: int, n: int) -> bool:
    """Whether (b/a)**k equals n, for a reduced fraction b/a.

    Decided by cross-multiplication: b**k == n * a**k. Requires
    gcd(a, b) = 1; a true result with a > 1 would contradict the theorem
    and raises TheoremViolation.
    """
    if a < 1 or b < 1 or k < 2 or n < 1:
        raise DomainError("arguments must be positive with k >= 2")
    r0, r1 = a, b
    while r1:
        r0, r1 = r1, r0 % r1
    if r0 != 1:
        raise DomainError("fraction is not reduced")
    is_power = b**k == n * a**k
    if is_power and a > 1:
        raise TheoremViolation(f"({b}/{a})**{k} = {n} with denominator {a} > 1")
    return is_power
