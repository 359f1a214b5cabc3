"""Localization conditions on fixed-point weight data.

For genuine almost complex circle actions the pushforward of a Chern
monomial ``c_w`` evaluates to the sum over fixed points of the matching
products of elementary symmetric polynomials of the weights, divided by
the top one.  Degree-deficient monomials push forward to zero and
top-degree ones to integers, so both become exact necessary conditions on
candidate data.  All sums here are exact rationals; there are no
tolerances anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .core import FixedPointData, Partition, elem_sym_all, partitions


@lru_cache(maxsize=8192)
def _point_esyms(data: FixedPointData) -> tuple[tuple[int, ...], ...]:
    """Per point, the values ``e_0 .. e_n`` of its weights."""
    return tuple(elem_sym_all(p.weights) for p in data.points)


def localization_sum(data: FixedPointData, omega: Partition) -> Fraction:
    """Exact fixed-point sum of the Chern monomial indexed by ``omega``.

    Returns ``sum over points p of prod_j e_{omega_j}(w(p)) / e_n(w(p))``.
    Parts larger than ``n`` and degrees larger than ``n`` are rejected as
    domain errors rather than silently evaluating to zero.
    """
    n = data.n
    if any(part > n for part in omega.parts):
        raise ValueError(f"partition part exceeds complex dimension {n}: {omega.parts}")
    if omega.degree > n:
        raise ValueError(f"partition degree {omega.degree} exceeds complex dimension {n}")
    total = Fraction(0)
    for esyms in _point_esyms(data):
        num = math.prod(esyms[part] for part in omega.parts)
        total += Fraction(num, esyms[n])
    return total


@dataclass(frozen=True)
class VanishingResult:
    """Verdict of the sub-top vanishing condition with exact witnesses."""

    passed: bool
    violations: tuple[tuple[Partition, Fraction], ...]
    partitions_checked: int


def check_vanishing(data: FixedPointData) -> VanishingResult:
    """PASS iff every monomial of degree 0..n-1 sums to exactly zero.

    Products of elementary symmetric polynomials span all symmetric
    functions of each degree, so checking every partition of every degree
    below ``n`` is the complete sub-top condition.  Every violating
    partition is returned with its nonzero exact value.
    """
    violations = []
    checked = 0
    for d in range(data.n):
        for omega in partitions(d):
            checked += 1
            value = localization_sum(data, omega)
            if value != 0:
                violations.append((omega, value))
    return VanishingResult(not violations, tuple(violations), checked)


@dataclass(frozen=True)
class ChernTable:
    """All localized monomial sums of degree 0..n.

    ``entries`` maps every partition of every degree up to ``n`` to its
    exact value; degree-``n`` entries are the candidate Chern numbers, the
    rest are the sub-top sums (expected zero for genuine data, but always
    computed, never assumed).
    """

    n: int
    entries: dict[Partition, Fraction]

    def chern_numbers(self) -> dict[Partition, Fraction]:
        return {p: v for p, v in self.entries.items() if p.degree == self.n}

    def subtop_sums(self) -> dict[Partition, Fraction]:
        return {p: v for p, v in self.entries.items() if p.degree < self.n}


def compute_chern_table(data: FixedPointData) -> ChernTable:
    """Evaluate every monomial of every degree 0..n on the data."""
    entries: dict[Partition, Fraction] = {}
    for d in range(data.n + 1):
        for omega in partitions(d):
            entries[omega] = localization_sum(data, omega)
    return ChernTable(data.n, entries)


@dataclass(frozen=True)
class IntegralityResult:
    """Verdict of Chern-number integrality, with the full table either way."""

    passed: bool
    table: ChernTable
    non_integers: tuple[Partition, ...]


def check_integrality(data: FixedPointData) -> IntegralityResult:
    """PASS iff every degree-n monomial sum is an integer."""
    table = compute_chern_table(data)
    non_integers = tuple(
        p for p, v in table.chern_numbers().items() if v.denominator != 1
    )
    return IntegralityResult(not non_integers, table, non_integers)


@dataclass(frozen=True)
class ChiYProfile:
    """Counts ``N_i`` of fixed points having exactly ``i`` negative weights."""

    counts: tuple[int, ...]

    @property
    def symmetric(self) -> bool:
        return self.counts == self.counts[::-1]


def chi_y_profile(data: FixedPointData) -> ChiYProfile:
    counts = [0] * (data.n + 1)
    for p in data.points:
        counts[sum(1 for w in p.weights if w < 0)] += 1
    return ChiYProfile(tuple(counts))


def check_kosniowski(data: FixedPointData) -> bool:
    """PASS iff the negative-weight profile is palindromic (N_i = N_{n-i}).

    This is the chi_y-rigidity symmetry.  It is stronger than the other
    localization conditions here and is kept behind an explicit flag in the
    default suites: the builtin ``remark`` dataset passes vanishing and
    integrality yet fails this symmetry.
    """
    return chi_y_profile(data).symmetric


def check_parity(data: FixedPointData) -> bool:
    """PASS iff the point count is even or the real dimension is divisible by 4.

    An action with an odd number of isolated fixed points forces real
    dimension ``4k``, i.e. even complex dimension.
    """
    return data.k % 2 == 0 or data.n % 2 == 0
