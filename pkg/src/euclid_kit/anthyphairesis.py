"""Reciprocal subtraction of two positive integers.

The process repeatedly removes the smaller magnitude from the larger
(removals batched into quotients) until one measures the other exactly.
It yields the gcd, the quotient sequence shared by all equal ratios, and a
step-by-step trace.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from euclid_kit import _kernels
from euclid_kit.errors import DomainError

QuotientSequence = tuple[int, ...]


class Step(NamedTuple):
    larger: int
    smaller: int
    quotient: int
    remainder: int


@dataclass(frozen=True)
class AnthyphairesisTrace:
    """Full record of the subtraction process, one entry per quotient.

    Each step satisfies larger = quotient*smaller + remainder with
    0 <= remainder < smaller; a step's (smaller, remainder) become the next
    step's (larger, smaller); the terminal value is the last divisor, which
    measures both starting numbers.
    """

    steps: tuple[Step, ...]
    terminal: int

    @property
    def quotients(self) -> QuotientSequence:
        return tuple(s.quotient for s in self.steps)

    def render(self) -> str:
        """One "L = q*S + r" line per step, closed by the gcd line."""
        lines = [f"{s.larger} = {s.quotient}*{s.smaller} + {s.remainder}" for s in self.steps]
        lines.append(f"gcd = {self.terminal}")
        return "\n".join(lines)

    def to_records(self) -> list[dict]:
        return [s._asdict() for s in self.steps]


def _require_positive(*values: int) -> None:
    for v in values:
        if v <= 0:
            raise DomainError("inputs must be positive")


def subtract_trace(x: int, y: int) -> AnthyphairesisTrace:
    """Run reciprocal subtraction on x and y and record every step."""
    _require_positive(x, y)
    larger, smaller = (x, y) if x >= y else (y, x)
    steps = []
    while True:
        quotient, remainder = divmod(larger, smaller)
        steps.append(Step(larger, smaller, quotient, remainder))
        if remainder == 0:
            return AnthyphairesisTrace(tuple(steps), smaller)
        larger, smaller = smaller, remainder


def quotient_sequence(x: int, y: int) -> QuotientSequence:
    """Quotients of max(x,y) : min(x,y); equal ratios give equal sequences.

    The last quotient is >= 2 unless the sequence has length 1, so the
    sequence is canonical and sequence equality coincides with ratio
    equality.
    """
    _require_positive(x, y)
    if x < y:
        x, y = y, x
    return tuple(_kernels.cf_quotients(x, y))


def gcd_anthyphairesis(x: int, y: int) -> int:
    """Greatest common measure by the subtraction form."""
    _require_positive(x, y)
    return _kernels.gcd_subtract(x, y)


def gcd_division(x: int, y: int) -> int:
    """Greatest common divisor by the division form (remainder loop)."""
    _require_positive(x, y)
    return _kernels.gcd_divide(x, y)


def same_ratio(x1: int, y1: int, x2: int, y2: int) -> bool:
    """Whether x1:y1 and x2:y2 agree, each taken as max:min.

    Decided the historical way, by comparing quotient sequences; equivalent
    to cross-multiplication of the orientation-normalized ratios.
    """
    return quotient_sequence(x1, y1) == quotient_sequence(x2, y2)
