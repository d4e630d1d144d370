"""Quadratic data of a purely periodic continued fraction.

x = [0; c_1, ..., c_L repeated] is a quadratic irrational in (0, 1).
From one period of convergents it satisfies the fixed-point relation
x = (p_L + p_{L-1} x) / (q_L + q_{L-1} x), i.e. it is the positive root
of

    A x^2 + B x + C = 0,   A = q_{L-1},  B = q_L - p_{L-1},  C = -p_L,

reduced so gcd(A, B, C) = 1 with A > 0.  The algebraic conjugate x' is
the other root, so the trace x + x' = -B/A is rational; everything stays
in integer arithmetic and no square root is ever extracted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .contfrac import convergents


class ConsistencyError(RuntimeError):
    """An internal invariant failed; indicates a bug, not bad input."""


@dataclass(frozen=True)
class PeriodicSurd:
    """Positive root in (0, 1) of a*x^2 + b*x + c = 0, gcd(a,b,c) = 1, a > 0."""

    period: tuple[int, ...]
    a: int
    b: int
    c: int
    disc: int

    @property
    def length(self) -> int:
        return len(self.period)

    def trace(self) -> Fraction:
        """x + x' = -b/a, the rational sum of the two roots."""
        return Fraction(-self.b, self.a)

    def equation_text(self) -> str:
        sb = "+" if self.b >= 0 else "-"
        sc = "+" if self.c >= 0 else "-"
        return f"{self.a}x^2 {sb} {abs(self.b)}x {sc} {abs(self.c)} = 0"

    def radical_text(self) -> str:
        """The positive root as (-B + sqrt(disc))/(2A), exact integers."""
        return f"({-self.b} + sqrt({self.disc}))/{2 * self.a}"


def surd_from_period(period: Sequence[int]) -> PeriodicSurd:
    """Quadratic coefficients of [0; period repeated]."""
    period = tuple(int(c) for c in period)
    rows = convergents(period, len(period))  # raises on an empty period
    _, p_last, q_last = rows[-1]
    _, p_prev, q_prev = rows[-2]
    a, b, c = q_prev, q_last - p_prev, -p_last
    g = math.gcd(math.gcd(a, b), c)
    a, b, c = a // g, b // g, c // g
    disc = b * b - 4 * a * c
    # an infinite CF with positive terms is irrational, so disc can never
    # be a square; if it is, the construction itself is broken
    if disc <= 0 or math.isqrt(disc) ** 2 == disc:
        raise ConsistencyError(f"discriminant {disc} is a perfect square")
    return PeriodicSurd(period, a, b, c, disc)


def closed_form_value(s: PeriodicSurd) -> Fraction:
    """Alternating sum of the period terms plus the trace.

    Defined for odd period length only; there it equals the normalized
    Dedekind sum S(p_k, q_k) shared by all convergents with
    k = L-1 (mod 2L).
    """
    if s.length % 2 == 0:
        raise ValueError("closed form requires odd period length")
    alt = sum(c if j % 2 == 0 else -c for j, c in enumerate(s.period))
    return alt + s.trace()
