"""Numerical semigroups and the non-gap / order duality at rational points.

Indexing: non-gap sequences always start with m_0 = 0, order sequences with
j_0 = 0.  At an F_{q^2}-rational point of a maximal curve with
N = dim |(q+1)P0| the two are tied by j_{N-i} + m_i = q + 1 for i = 0..N.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence


@dataclass(frozen=True)
class NumericalSemigroup:
    generators: tuple[int, ...]
    # membership[n] for 0 <= n <= conductor; everything beyond is a member
    membership: tuple[bool, ...] = field(repr=False)

    @property
    def conductor(self) -> int:
        return len(self.membership) - 1

    @property
    def frobenius_number(self) -> int:
        return self.conductor - 1

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        return n >= self.conductor or self.membership[n]

    def gaps(self) -> list[int]:
        return [n for n, member in enumerate(self.membership) if not member]

    def nongap(self, i: int) -> int:
        """The i-th element (0-indexed, nongap(0) == 0)."""
        if i < 0:
            raise IndexError(i)
        count = -1
        for n, member in enumerate(self.membership):
            if member:
                count += 1
                if count == i:
                    return n
        return self.conductor + (i - count)

    def nongaps(self, count: int) -> tuple[int, ...]:
        return tuple(self.nongap(i) for i in range(count))


def semigroup_from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    gens = tuple(sorted(set(gens)))
    if not gens or gens[0] < 1:
        raise ValueError(f"generators must be positive integers, got {gens}")
    if reduce(math.gcd, gens) != 1:
        raise ValueError(f"gcd of {gens} is not 1; the complement would be infinite")
    # Frobenius number < min*max, so the table settles by then
    bound = gens[0] * gens[-1] + 1
    table = [False] * (bound + 1)
    table[0] = True
    for n in range(1, bound + 1):
        table[n] = any(n >= g and table[n - g] for g in gens)
    last_gap = max((n for n, t in enumerate(table) if not t), default=-1)
    return NumericalSemigroup(gens, tuple(table[: last_gap + 2]))


def semigroup_genus(s: NumericalSemigroup) -> int:
    return len(s.gaps())


def gaps(s: NumericalSemigroup) -> list[int]:
    return s.gaps()


def nongap(s: NumericalSemigroup, i: int) -> int:
    return s.nongap(i)


@dataclass(frozen=True)
class NonGapSequence:
    values: tuple[int, ...]

    def __post_init__(self):
        _check_increasing(self.values, "non-gap")


@dataclass(frozen=True)
class OrderSequence:
    values: tuple[int, ...]

    def __post_init__(self):
        _check_increasing(self.values, "order")


def _check_increasing(values: Sequence[int], what: str) -> None:
    if not values or values[0] != 0:
        raise ValueError(f"{what} sequence must start at 0: {values}")
    if any(b <= a for a, b in zip(values, values[1:])):
        raise ValueError(f"{what} sequence is not strictly increasing: {values}")


def orders_from_nongaps(q: int, nongaps: Sequence[int], N: int) -> OrderSequence:
    """Orders at a rational point from its first N+1 non-gaps: j_{N-i} = q+1 - m_i."""
    if len(nongaps) < N + 1:
        raise ValueError(f"need {N + 1} non-gaps, got {len(nongaps)}")
    m = NonGapSequence(tuple(nongaps[: N + 1])).values
    return OrderSequence(tuple(q + 1 - m[N - i] for i in range(N + 1)))


def nongaps_from_orders(q: int, orders: Sequence[int]) -> NonGapSequence:
    """Inverse of orders_from_nongaps: m_i = q+1 - j_{N-i}."""
    j = OrderSequence(tuple(orders)).values
    N = len(j) - 1
    return NonGapSequence(tuple(q + 1 - j[N - i] for i in range(N + 1)))


def check_nongap_shape(q: int, N: int, nongaps: Sequence[int]) -> bool:
    """m_{N-1} = q < m_N, the shape forced on the first non-gaps by very ampleness of |(q+1)P0|."""
    if len(nongaps) < N + 1:
        raise ValueError(f"need {N + 1} non-gaps, got {len(nongaps)}")
    return nongaps[N - 1] == q and nongaps[N] > q


@dataclass(frozen=True)
class ExtremalCase:
    """Which of m(N-1) = q+1 or m(N-1) = q holds, with the genus it forces."""

    tag: str  # "star1", "star2" or "neither"
    genus: Fraction | None


def extremal_case(q: int, N: int, m: int) -> ExtremalCase:
    if m < 1 or N < 2:
        raise ValueError("need m >= 1 and N >= 2")
    if m * (N - 1) == q + 1:
        return ExtremalCase("star1", Fraction((q - 1) * ((q + 1) // (N - 1) - 1), 2))
    if m * (N - 1) == q:
        return ExtremalCase("star2", Fraction(q * (q - (N - 1)), 2 * (N - 1)))
    return ExtremalCase("neither", None)
