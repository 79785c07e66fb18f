"""One gcd routine, many element types.

A Euclidean domain is packaged as a record of operations (zero test,
ring arithmetic, division with shrinking remainder, a size function and a
canonical-associate rule). The same remainder-chain routines then serve
both instances shipped here: the integers and dense univariate polynomials
with rational coefficients.
"""

from __future__ import annotations

import operator
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable

from euclid_kit.errors import DomainError

_COEFF_RE = re.compile(r"[+-]?[0-9]+(/[0-9]+)?\Z")


class Polynomial:
    """Univariate polynomial over the rationals, dense ascending coefficients.

    Immutable; trailing zero coefficients are stripped so equal values have
    equal coefficient tuples. The zero polynomial has an empty tuple and
    degree -1.
    """

    __slots__ = ("coeffs",)

    coeffs: tuple[Fraction, ...]

    def __init__(self, coefficients: Iterable[Fraction | int | str] = ()):
        cs = [Fraction(c) for c in coefficients]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def from_string(cls, text: str) -> "Polynomial":
        """Parse comma-separated rational coefficients, ascending degree.

        "-1,0,0,1" is x^3 - 1; coefficients may be "p/q".
        """
        parts = [p.strip() for p in text.split(",")]
        for p in parts:
            if not _COEFF_RE.match(p):
                raise DomainError(f"bad coefficient: {p!r}")
        return cls(Fraction(p) for p in parts)

    def to_coeff_list(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        if self.is_zero:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def monic(self) -> "Polynomial":
        lead = self.leading_coefficient
        if lead == 1:
            return self
        return Polynomial(c / lead for c in self.coeffs)

    def evaluate(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial(
            [x + y for x, y in zip(a, b)] + list(a[len(b):])
        )

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self.coeffs)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            for j, cj in enumerate(other.coeffs):
                out[i + j] += ci * cj
        return Polynomial(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        return poly_divmod(self, other)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return poly_divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return poly_divmod(self, other)[1]

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for exp in range(self.degree, -1, -1):
            c = self.coeffs[exp]
            if c == 0:
                continue
            if exp == 0:
                body = str(abs(c))
            else:
                power = "x" if exp == 1 else f"x^{exp}"
                body = power if abs(c) == 1 else f"{abs(c)}*{power}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms)


def poly_divmod(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Long division: a = q*b + r with r = 0 or deg(r) < deg(b), exactly."""
    if b.is_zero:
        raise DomainError("division by zero polynomial")
    quotient = [Fraction(0)] * max(len(a.coeffs) - len(b.coeffs) + 1, 0)
    rest = list(a.coeffs)
    lead = b.leading_coefficient
    for shift in range(len(rest) - len(b.coeffs), -1, -1):
        factor = rest[shift + len(b.coeffs) - 1] / lead
        if factor == 0:
            continue
        quotient[shift] = factor
        for i, c in enumerate(b.coeffs):
            rest[shift + i] -= factor * c
    return Polynomial(quotient), Polynomial(rest[: len(b.coeffs) - 1])


@dataclass(frozen=True)
class EuclideanDomainContract:
    """Operations a type must provide for the remainder-chain algorithms.

    divmod must satisfy a = q*b + r with r zero or size(r) < size(b); size
    maps nonzero elements to naturals (absolute value for integers, degree
    for polynomials). canonical picks the canonical associate: it returns
    (c, u) with c = u*x for a unit u, fixing gcds to be positive / monic.
    """

    name: str
    zero: Any
    one: Any
    is_zero: Callable[[Any], bool]
    add: Callable[[Any, Any], Any]
    neg: Callable[[Any], Any]
    mul: Callable[[Any, Any], Any]
    divmod: Callable[[Any, Any], tuple[Any, Any]]
    size: Callable[[Any], int]
    canonical: Callable[[Any], tuple[Any, Any]]


INTEGERS = EuclideanDomainContract(
    name="integers",
    zero=0,
    one=1,
    is_zero=lambda x: x == 0,
    add=operator.add,
    neg=operator.neg,
    mul=operator.mul,
    divmod=divmod,
    size=abs,
    canonical=lambda x: (-x, -1) if x < 0 else (x, 1),
)

RATIONAL_POLYNOMIALS = EuclideanDomainContract(
    name="polynomials over Q",
    zero=Polynomial(),
    one=Polynomial([1]),
    is_zero=lambda p: p.is_zero,
    add=operator.add,
    neg=operator.neg,
    mul=operator.mul,
    divmod=poly_divmod,
    size=lambda p: p.degree,
    canonical=lambda p: (p.monic(), Polynomial([1 / p.leading_coefficient])),
)


def generic_gcd(a, b, domain: EuclideanDomainContract = INTEGERS):
    """Canonical gcd by the remainder chain, over any contract instance."""
    if domain.is_zero(a) and domain.is_zero(b):
        raise DomainError("gcd of two zeros is undefined")
    while not domain.is_zero(b):
        a, b = b, domain.divmod(a, b)[1]
    return domain.canonical(a)[0]


def generic_extended_gcd(a, b, domain: EuclideanDomainContract = INTEGERS):
    """(g, u, v) with u*a + v*b = g, g canonical, over any contract instance."""
    if domain.is_zero(a) and domain.is_zero(b):
        raise DomainError("gcd of two zeros is undefined")
    r0, r1 = a, b
    u0, u1 = domain.one, domain.zero
    v0, v1 = domain.zero, domain.one
    while not domain.is_zero(r1):
        q, r = domain.divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, domain.add(u0, domain.neg(domain.mul(q, u1)))
        v0, v1 = v1, domain.add(v0, domain.neg(domain.mul(q, v1)))
    g, unit = domain.canonical(r0)
    return g, domain.mul(unit, u0), domain.mul(unit, v0)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd of two rational polynomials."""
    return generic_gcd(a, b, RATIONAL_POLYNOMIALS)
