"""Infinite families of coprime pairs sharing one normalized Dedekind sum.

Given coprime (a, b), the canonical expansion of a/b is turned into an
odd-length period: an even-length expansion gets one free term c >= 1
appended, an odd-length one is rewritten to end (c_n - 1, 1) and then a
single 1 is appended.  Either way the resulting periodic fraction has
odd period length L, its convergent at k = L-1 is exactly (a, b), and
every convergent with k = L-1 (mod 2L) has the same normalized sum
S(a, b) while the denominators q_k grow exponentially.

The degenerate source a/b = 0/1 has no expansion to work with; it is
dispatched to the classical zero family (a, a^2 + 1), all of whose
members have sum 0.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import islice
from typing import Iterator, Sequence

from .contfrac import expand, iter_convergents
from .dedekind import CoprimePair, normalized_sum_fast, reduce_pair


class VerificationError(RuntimeError):
    """An already-constructed member failed re-verification; a bug."""


class FamilyCase(enum.Enum):
    APPEND_TERM = "append-term"    # even expansion length: period (c_1..c_n, c)
    REWRITE_TAIL = "rewrite-tail"  # odd length: period (c_1..c_{n-1}, c_n - 1, 1, 1)
    ZERO = "zero-family"           # source 0/1: members (a, a^2 + 1)


@dataclass(frozen=True)
class FamilyPlan:
    source: CoprimePair
    case: FamilyCase
    period: tuple[int, ...] | None  # None for the zero family
    appended_term: int | None       # the free term c, APPEND_TERM only
    value: Fraction                 # S(source), shared by every member

    @property
    def period_length(self) -> int | None:
        return None if self.period is None else len(self.period)

    def member_index(self, t: int) -> int | None:
        """Convergent index of member t: k = L-1 + 2*L*t."""
        if self.period is None:
            return None
        length = len(self.period)
        return length - 1 + 2 * length * t


@dataclass(frozen=True)
class FamilyMember:
    t: int            # ordinal within the family
    k: int | None     # convergent index; None for zero-family members
    pair: CoprimePair
    value: Fraction


def plan_family(a: int, b: int, c: int = 1) -> FamilyPlan:
    """Build the odd-period plan for (a, b) with free appended term c.

    c only matters when the canonical expansion has even length;
    different choices of c give different families for the same value.
    """
    if c < 1:
        raise ValueError("appended term must be >= 1")
    source = reduce_pair(a, b)
    value = normalized_sum_fast(source.a, source.b)
    if source.a == 0:  # b == 1 necessarily
        return FamilyPlan(source, FamilyCase.ZERO, None, None, value)
    terms = expand(source.a, source.b).terms
    if len(terms) % 2 == 0:
        return FamilyPlan(source, FamilyCase.APPEND_TERM, terms + (c,), c, value)
    period = terms[:-1] + (terms[-1] - 1, 1, 1)
    return FamilyPlan(source, FamilyCase.REWRITE_TAIL, period, None, value)


def iter_members(plan: FamilyPlan) -> Iterator[FamilyMember]:
    """Lazy stream of members t = 0, 1, 2, ...; denominators increase strictly.

    The member value is stamped from the plan, not recomputed -- use
    verify_member for an independent check.
    """
    if plan.case is FamilyCase.ZERO:
        t = 0
        while True:
            base = t + 1
            yield FamilyMember(t, None, CoprimePair(base, base * base + 1), plan.value)
            t += 1
    assert plan.period is not None
    length = len(plan.period)
    t = 0
    next_k = length - 1
    for row in iter_convergents(plan.period):
        if row.k == next_k:
            yield FamilyMember(t, row.k, CoprimePair(row.p, row.q), plan.value)
            t += 1
            next_k += 2 * length


def members(plan: FamilyPlan, count: int) -> list[FamilyMember]:
    """The first ``count`` members (t = 0..count-1)."""
    if count < 1:
        raise ValueError("count must be >= 1")
    return list(islice(iter_members(plan), count))


def verify_member(member: FamilyMember, source: CoprimePair) -> bool:
    """Recompute both sums from scratch; trusts nothing stored in the member."""
    got = normalized_sum_fast(member.pair.a, member.pair.b)
    want = normalized_sum_fast(source.a, source.b)
    return got == want


def verify_period_constancy(period: Sequence[int], depth: int = 3) -> bool:
    """Check S(p_k, q_k) is constant over k = L-1, 3L-1, ..., (2*depth-1)*L-1.

    Requires odd period length; evaluates each pair independently with
    the fast kernel.
    """
    period = tuple(period)
    if not period:
        raise ValueError("empty period")
    if len(period) % 2 == 0:
        raise ValueError("odd period length required")
    if depth < 1:
        raise ValueError("depth must be >= 1")
    length = len(period)
    wanted = {length - 1 + 2 * length * t for t in range(depth)}
    last = max(wanted)
    values = []
    for row in iter_convergents(period):
        if row.k in wanted:
            values.append(normalized_sum_fast(row.p, row.q))
        if row.k == last:
            break
    return all(v == values[0] for v in values)
