# cython: language_level=3, cdivision=True
"""Compiled remainder-chain kernels.

Drop-in replacement for ``euclid_kit._purepy`` with identical signatures and
results. Values that fit in a C ``long long`` run as plain C loops; larger
values run object arithmetic and drop into the C loop once the chain has
shrunk far enough.
"""

from cpython.long cimport PyLong_AsLongLongAndOverflow

# Pairs below this bound multiply without overflowing long long.
cdef long long SMALL = <long long>1 << 31
_SMALL_INT = 1 << 31


cdef inline bint _fits(object v, long long *out) except -1:
    cdef int overflow = 0
    cdef long long c = PyLong_AsLongLongAndOverflow(v, &overflow)
    if overflow:
        return False
    out[0] = c
    return True


def gcd_divide(x, y):
    """Division-form gcd of two positive integers (modern remainder loop)."""
    cdef long long cx, cy, t
    while y:
        if _fits(y, &cy) and _fits(x, &cx):
            while cy:
                t = cx % cy
                cx = cy
                cy = t
            return cx
        x, y = y, x % y
    return x


def gcd_subtract(x, y):
    """Subtraction-form gcd: remove the smaller from the larger until equal.

    Removals are batched (the smaller is taken out as many times as it
    fits), so the loop is linear in the number of quotients rather than in
    their size.
    """
    cdef long long cx, cy, t
    while x != y:
        if _fits(x, &cx) and _fits(y, &cy):
            while cx != cy:
                if cx < cy:
                    t = cx
                    cx = cy
                    cy = t
                cx = cx - (cx // cy) * cy
                if cx == 0:
                    return cy
            return cx
        if x < y:
            x, y = y, x
        x = x - (x // y) * y
        if x == 0:
            return y
    return x


def ext_gcd(a, b):
    """Extended gcd of positive integers: (g, m, n) with a*m + b*n = g.

    The coefficient recurrence reproduces exactly the coefficients obtained
    by back-substituting through the remainder chain.
    """
    cdef long long r0, r1, m0, m1, n0, n1, q, t
    # Coefficients stay bounded by the inputs, so inputs below 2^31 keep
    # every product inside long long.
    if 0 < a < _SMALL_INT and 0 < b < _SMALL_INT:
        _fits(a, &r0)
        _fits(b, &r1)
        m0 = 1; m1 = 0
        n0 = 0; n1 = 1
        while r1:
            q = r0 // r1
            t = r0 - q * r1; r0 = r1; r1 = t
            t = m0 - q * m1; m0 = m1; m1 = t
            t = n0 - q * n1; n0 = n1; n1 = t
        return r0, m0, n0
    return _ext_gcd_obj(a, b)


cdef _ext_gcd_obj(a, b):
    r0, r1 = a, b
    m0, m1 = 1, 0
    n0, n1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        m0, m1 = m1, m0 - q * m1
        n0, n1 = n1, n0 - q * n1
    return r0, m0, n0


def cf_quotients(p, q):
    """Partial quotients of p/q (both positive) via the remainder chain.

    The first quotient is 0 when p < q; the final quotient is >= 2 unless
    the expansion has a single term, so the result is always in canonical
    form.
    """
    cdef long long cp, cq, c, r
    out = []
    while q:
        if _fits(p, &cp) and _fits(q, &cq):
            while cq:
                c = cp // cq
                r = cp - c * cq
                out.append(c)
                cp = cq
                cq = r
            return out
        cobj = p // q
        out.append(cobj)
        p, q = q, p - cobj * q
    return out


def convergent_pairs(quotients):
    """Numerator/denominator pairs (p_n, q_n) for each quotient prefix.

    Seeds (p_-1, q_-1) = (1, 0) and (p_-2, q_-2) = (0, 1); each step is
    p_n = c_n*p_{n-1} + p_{n-2}, q_n = c_n*q_{n-1} + q_{n-2}.
    """
    cdef long long p0 = 1, q0 = 0, p1 = 0, q1 = 1, c, tp, tq
    cdef Py_ssize_t i = 0, n = len(quotients)
    out = []
    while i < n:
        # Growth guard: all three factors below 2^31 keep the step exact.
        if not (_fits(quotients[i], &c) and c < SMALL and p0 < SMALL and q0 < SMALL):
            break
        tp = c * p0 + p1
        tq = c * q0 + q1
        p1 = p0; q1 = q0
        p0 = tp; q0 = tq
        out.append((p0, q0))
        i += 1
    if i == n:
        return out
    op0, oq0, op1, oq1 = p0, q0, p1, q1
    while i < n:
        cobj = quotients[i]
        op0, oq0, op1, oq1 = cobj * op0 + op1, cobj * oq0 + oq1, op0, oq0
        out.append((op0, oq0))
        i += 1
    return out


def box_solutions(a, b, c, bound):
    """All integer (x, y) with a*x + b*y = c and |x| <= bound, ascending in x.

    Exhaustive scan over x; deliberately ignorant of the gcd structure so it
    can serve as an independent check on the solution-family formula.
    """
    cdef long long ca, cb, cc, cbound, x, num
    cdef long long CLIM = <long long>1 << 48
    out = []
    if (_fits(a, &ca) and _fits(b, &cb) and _fits(c, &cc) and _fits(bound, &cbound)
            and -SMALL < ca < SMALL and -SMALL < cb < SMALL
            and 0 < cbound < SMALL and -CLIM < cc < CLIM):
        # |a*x| < 2^62 and |c| < 2^48: num cannot overflow. C division
        # truncates, but an exact quotient of a divisible pair is sign-safe.
        for x in range(-cbound, cbound + 1):
            num = cc - ca * x
            if num % cb == 0:
                out.append((x, num // cb))
        return out
    for xo in range(-bound, bound + 1):
        numo = c - a * xo
        if numo % b == 0:
            out.append((xo, numo // b))
    return out
