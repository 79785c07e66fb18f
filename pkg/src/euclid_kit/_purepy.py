"""Pure-Python remainder-chain kernels.

These are the hot inner loops of the package: gcd in both historical forms,
the extended-gcd coefficient recurrence, continued-fraction quotient
expansion, the convergent recurrence, and the exhaustive box enumeration.
``euclid_kit._core`` is a compiled drop-in replacement; callers import
whichever is active through ``euclid_kit._kernels``.

All functions assume already-validated arguments (positivity and bound
checks live in the public modules).
"""

from __future__ import annotations


def gcd_divide(x: int, y: int) -> int:
    """Division-form gcd of two positive integers (modern remainder loop)."""
    while y:
        x, y = y, x % y
    return x


def gcd_subtract(x: int, y: int) -> int:
    """Subtraction-form gcd: remove the smaller from the larger until equal.

    Removals are batched (the smaller is taken out as many times as it
    fits), so the loop is linear in the number of quotients rather than in
    their size.
    """
    while x != y:
        if x < y:
            x, y = y, x
        x = x - (x // y) * y
        if x == 0:
            return y
    return x


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd of positive integers: (g, m, n) with a*m + b*n = g.

    The coefficient recurrence reproduces exactly the coefficients obtained
    by back-substituting through the remainder chain.
    """
    r0, r1 = a, b
    m0, m1 = 1, 0
    n0, n1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        m0, m1 = m1, m0 - q * m1
        n0, n1 = n1, n0 - q * n1
    return r0, m0, n0


def cf_quotients(p: int, q: int) -> list[int]:
    """Partial quotients of p/q (both positive) via the remainder chain.

    The first quotient is 0 when p < q; the final quotient is >= 2 unless
    the expansion has a single term, so the result is always in canonical
    form.
    """
    out = []
    while q:
        c = p // q
        out.append(c)
        p, q = q, p - c * q
    return out


def convergent_pairs(quotients) -> list[tuple[int, int]]:
    """Numerator/denominator pairs (p_n, q_n) for each quotient prefix.

    Seeds (p_-1, q_-1) = (1, 0) and (p_-2, q_-2) = (0, 1); each step is
    p_n = c_n*p_{n-1} + p_{n-2}, q_n = c_n*q_{n-1} + q_{n-2}.
    """
    p0, q0, p1, q1 = 1, 0, 0, 1
    out = []
    for c in quotients:
        p0, q0, p1, q1 = c * p0 + p1, c * q0 + q1, p0, q0
        out.append((p0, q0))
    return out


def box_solutions(a: int, b: int, c: int, bound: int) -> list[tuple[int, int]]:
    """All integer (x, y) with a*x + b*y = c and |x| <= bound, ascending in x.

    Exhaustive scan over x; deliberately ignorant of the gcd structure so it
    can serve as an independent check on the solution-family formula.
    """
    out = []
    for x in range(-bound, bound + 1):
        num = c - a * x
        if num % b == 0:
            out.append((x, num // b))
    return out
