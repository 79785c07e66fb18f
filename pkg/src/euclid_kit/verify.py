"""Randomized cross-checks between the independent algorithm routes.

Every property pits one implementation against another (or against a brute
oracle) on freshly drawn inputs. The stream is reproducible: each property
seeds its own generator from SHA-256 of (seed, property name), so a report
is a pure function of (seed, trials).
"""

from __future__ import annotations

import hashlib
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from euclid_kit import anthyphairesis, continued_fractions, linear_diophantine
from euclid_kit import euclidean_domain, exact_arith, power_rationality
from euclid_kit._kernels import BACKEND


@dataclass(frozen=True)
class PropertyResult:
    name: str
    trials: int
    failures: int
    counterexample: str | None

    @property
    def ok(self) -> bool:
        return self.failures == 0


@dataclass(frozen=True)
class VerifyReport:
    seed: int
    trials: int
    backend: str
    results: tuple[PropertyResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def render(self) -> str:
        width = max(len(r.name) for r in self.results)
        lines = [f"backend: {self.backend}   seed: {self.seed}   trials per property: {self.trials}"]
        for r in self.results:
            status = "PASS" if r.ok else "FAIL"
            line = f"{status}  {r.name:<{width}}  {r.trials} trials"
            if not r.ok:
                line += f"  ({r.failures} failures; first: {r.counterexample})"
            lines.append(line)
        passed = sum(r.ok for r in self.results)
        lines.append(f"{passed}/{len(self.results)} properties passed")
        return "\n".join(lines)


def _random_magnitude(rng: random.Random, max_bits: int = 256) -> int:
    return rng.getrandbits(rng.randrange(1, max_bits + 1)) + 1


def _random_polynomial(rng: random.Random, max_degree: int = 6) -> euclidean_domain.Polynomial:
    degree = rng.randrange(0, max_degree + 1)
    coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(degree)]
    coeffs.append(Fraction(rng.choice([i for i in range(-9, 10) if i]), rng.randint(1, 9)))
    return euclidean_domain.Polynomial(coeffs)


# Each property draws its own inputs and returns None (pass) or a
# counterexample string (fail). One call = one trial.

def _prop_bezout_identity(rng: random.Random) -> str | None:
    a = _random_magnitude(rng) * rng.choice([1, -1])
    b = _random_magnitude(rng) * rng.choice([1, -1])
    cert = linear_diophantine.extended_gcd(a, b)
    if a * cert.m + b * cert.n != cert.g:
        return f"identity broken for a={a} b={b}"
    if cert.g != anthyphairesis.gcd_anthyphairesis(abs(a), abs(b)):
        return f"g mismatch for a={a} b={b}"
    return None


def _prop_gcd_three_way(rng: random.Random) -> str | None:
    x = _random_magnitude(rng)
    y = _random_magnitude(rng)
    g1 = anthyphairesis.gcd_anthyphairesis(x, y)
    g2 = anthyphairesis.gcd_division(x, y)
    g3 = euclidean_domain.generic_gcd(x, y)
    if not g1 == g2 == g3:
        return f"x={x} y={y}: subtract={g1} divide={g2} generic={g3}"
    return None


def _prop_canonicalize(rng: random.Random) -> str | None:
    a = rng.randint(1, 10**9) * rng.choice([1, -1])
    b = rng.randint(1, 10**9) * rng.choice([1, -1])
    cert = linear_diophantine.extended_gcd(a, b)
    canon = linear_diophantine.canonicalize(cert)
    if not 0 <= canon.m < abs(b) // canon.g:
        return f"canonical m out of range for a={a} b={b}"
    if linear_diophantine.canonicalize(canon) != canon:
        return f"not idempotent for a={a} b={b}"
    return None


def _prop_gauss_inverse(rng: random.Random) -> str | None:
    while True:
        b = rng.randint(2, 5000)
        a = rng.randint(1, b)
        if math.gcd(a, b) == 1:
            break
    scan = linear_diophantine.gauss_inverse(a, b, method="scan")
    euclid = linear_diophantine.gauss_inverse(a, b, method="euclid")
    if scan != euclid:
        return f"a={a} b={b}: scan={scan} euclid={euclid}"
    cert = linear_diophantine.extended_gcd(a, b)
    if (cert.m - scan) % b:
        return f"a={a} b={b}: solutions not congruent mod b"
    return None


def _prop_euclid_form(rng: random.Random) -> str | None:
    x = rng.randint(1, 10**6)
    y = rng.randint(1, 10**6)
    form = linear_diophantine.euclid_form(x, y)
    g = math.gcd(x, y)
    if form.m < 0 or form.n < 0:
        return f"negative coefficients for x={x} y={y}"
    if form.m * x - form.n * y != form.sign * g:
        return f"identity broken for x={x} y={y}"
    return None


def _prop_solve_vs_box(rng: random.Random) -> str | None:
    a = rng.randint(1, 50) * rng.choice([1, -1])
    b = rng.randint(1, 50) * rng.choice([1, -1])
    c = rng.randint(-50, 50)
    family = linear_diophantine.solve_linear(a, b, c)
    from_family = family.solutions_in_box(100) if family else []
    from_box = linear_diophantine.all_solutions_in_box(a, b, c, 100)
    if from_family != from_box:
        return f"a={a} b={b} c={c}: family and box enumeration disagree"
    return None


def _prop_ideal_equality(rng: random.Random) -> str | None:
    a = rng.randint(1, 200) * rng.choice([1, -1])
    b = rng.randint(1, 200) * rng.choice([1, -1])
    window = rng.randint(1, 500)
    if not linear_diophantine.ideal_equality_check(a, b, window):
        return f"a={a} b={b} window={window}: sets differ"
    return None


def _prop_cf_round_trip(rng: random.Random) -> str | None:
    r = Fraction(rng.randint(1, 10**12), rng.randint(1, 10**12))
    cf = continued_fractions.cf_from_rational(r)
    if not cf.is_canonical:
        return f"non-canonical expansion for {r}"
    if continued_fractions.cf_value(cf) != r:
        return f"round trip failed for {r}"
    return None


def _prop_determinant_identity(rng: random.Random) -> str | None:
    r = Fraction(rng.randint(1, 10**9), rng.randint(1, 10**9))
    cf = continued_fractions.cf_from_rational(r)
    prev_p, prev_q = 1, 0
    for conv in continued_fractions.convergents(cf):
        if conv.p * prev_q - prev_p * conv.q != (-1) ** (conv.n + 1):
            return f"determinant broken at n={conv.n} for {r}"
        prev_p, prev_q = conv.p, conv.q
    return None


def _prop_convergent_alternation(rng: random.Random) -> str | None:
    r = Fraction(rng.randint(1, 10**9), rng.randint(1, 10**9))
    convs = continued_fractions.convergents(continued_fractions.cf_from_rational(r))
    for conv in convs:
        if conv.n % 2 == 0 and conv.value > r:
            return f"even convergent above value for {r}"
        if conv.n % 2 == 1 and conv.value < r:
            return f"odd convergent below value for {r}"
    return None


def _prop_lagrange(rng: random.Random) -> str | None:
    while True:
        a = rng.randint(1, 10**6)
        b = rng.randint(1, 10**6)
        if math.gcd(a, b) == 1:
            break
    r, s, sign = continued_fractions.lagrange_solution(a, b)
    if a * s - b * r != sign or abs(sign) != 1:
        return f"a={a} b={b}: truncation identity broken"
    return None


def _prop_interval_prefix(rng: random.Random) -> str | None:
    lo = Fraction(rng.randint(1, 10**6), rng.randint(1, 10**4))
    hi = lo + Fraction(rng.randint(0, 10**4), 10**6)
    prefix = continued_fractions.interval_quotients(lo, hi, 12)
    for x in {lo, hi, (lo + hi) / 2}:
        full = continued_fractions.cf_from_rational(x).quotients
        if full[: len(prefix)] != prefix:
            return f"prefix not shared by {x} in [{lo}, {hi}]"
    return None


def _prop_poly_bezout(rng: random.Random) -> str | None:
    a = _random_polynomial(rng)
    b = _random_polynomial(rng)
    g, u, v = euclidean_domain.generic_extended_gcd(
        a, b, euclidean_domain.RATIONAL_POLYNOMIALS
    )
    if u * a + v * b != g:
        return f"identity broken for {a} / {b}"
    if (a % g) or (b % g):
        return f"gcd does not divide inputs for {a} / {b}"
    return None


def _prop_poly_gcd_construction(rng: random.Random) -> str | None:
    g = _random_polynomial(rng, max_degree=3)
    while True:
        a1 = _random_polynomial(rng, max_degree=3)
        b1 = _random_polynomial(rng, max_degree=3)
        if euclidean_domain.poly_gcd(a1, b1).degree == 0:
            break
    got = euclidean_domain.poly_gcd(g * a1, g * b1)
    if got != g.monic():
        return f"expected monic associate of {g}, got {got}"
    return None


def _prop_kth_root_oracle(rng: random.Random) -> str | None:
    n = rng.randint(1, 10**6)
    k = rng.randint(2, 6)
    got = power_rationality.rational_kth_root(n, k)
    root = 0
    while (root + 1) ** k <= n:
        root += 1
    expected = root if root**k == n else None
    if got != expected:
        return f"n={n} k={k}: got {got}, scan oracle says {expected}"
    return None


def _prop_power_theorem(rng: random.Random) -> str | None:
    while True:
        a = rng.randint(2, 50)
        b = rng.randint(1, 50)
        if math.gcd(a, b) == 1:
            break
    k = rng.randint(2, 5)
    for n in {max(b**k // a**k, 1), b**k // a**k + 1}:
        if power_rationality.reduced_power_check(a, b, k, n):
            return f"({b}/{a})**{k} claimed integer {n}"
    return None


def _prop_same_ratio(rng: random.Random) -> str | None:
    vals = [rng.randint(1, 10**4) for _ in range(4)]
    x1, y1, x2, y2 = vals
    got = anthyphairesis.same_ratio(x1, y1, x2, y2)
    expected = max(x1, y1) * min(x2, y2) == max(x2, y2) * min(x1, y1)
    if got != expected:
        return f"ratios {x1}:{y1} vs {x2}:{y2}"
    return None


def _prop_remainder_law(rng: random.Random) -> str | None:
    x = _random_magnitude(rng, 128)
    y = _random_magnitude(rng, 128)
    trace = anthyphairesis.subtract_trace(x, y)
    sizes = [s.smaller for s in trace.steps]
    if any(s2 >= s1 for s1, s2 in zip(sizes, sizes[1:])):
        return f"integer sizes not strictly decreasing for {x}, {y}"
    a = _random_polynomial(rng)
    b = _random_polynomial(rng)
    degrees = []
    while not b.is_zero:
        degrees.append(b.degree)
        a, b = b, a % b
    if any(d2 >= d1 for d1, d2 in zip(degrees, degrees[1:])):
        return f"polynomial degrees not strictly decreasing"
    return None


PROPERTIES: list[tuple[str, Callable[[random.Random], str | None]]] = [
    ("bezout-identity", _prop_bezout_identity),
    ("gcd-three-way", _prop_gcd_three_way),
    ("canonicalize", _prop_canonicalize),
    ("gauss-inverse-methods", _prop_gauss_inverse),
    ("euclid-form", _prop_euclid_form),
    ("solve-vs-box", _prop_solve_vs_box),
    ("ideal-equality", _prop_ideal_equality),
    ("cf-round-trip", _prop_cf_round_trip),
    ("determinant-identity", _prop_determinant_identity),
    ("convergent-alternation", _prop_convergent_alternation),
    ("lagrange-truncation", _prop_lagrange),
    ("interval-prefix", _prop_interval_prefix),
    ("poly-bezout", _prop_poly_bezout),
    ("poly-gcd-construction", _prop_poly_gcd_construction),
    ("kth-root-oracle", _prop_kth_root_oracle),
    ("power-theorem", _prop_power_theorem),
    ("same-ratio-cross", _prop_same_ratio),
    ("remainder-law", _prop_remainder_law),
]


def _property_rng(seed: int, name: str) -> random.Random:
    digest = hashlib.sha256(f"{seed}:{name}".encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def run_verify(seed: int, trials: int) -> VerifyReport:
    """Run every property `trials` times; deterministic given (seed, trials)."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    results = []
    for name, prop in PROPERTIES:
        rng = _property_rng(seed, name)
        failures = 0
        first = None
        for _ in range(trials):
            try:
                example = prop(rng)
            except Exception as exc:  # a crash counts as a failing trial
                example = f"exception: {exc!r}"
            if example is not None:
                failures += 1
                if first is None:
                    first = example
        results.append(PropertyResult(name, trials, failures, first))
    return VerifyReport(seed, trials, BACKEND, tuple(results))
