"""Cyclic-subgroup restriction analysis.

For each modulus m >= 2 the order-m cyclic subgroup of the circle has a
fixed submanifold through each fixed point whose complex dimension equals
the number of m-divisible weights there; the remaining weights survive
only as nonzero residues mod m (the normal-bundle weights).  Points lying
on a common component must therefore share their residue signature, a
positive-dimensional component must contain at least two fixed points,
and the quotient circle acts on each component with the divisible weights
divided by m.  Whether a grouping of points into components exists such
that every component's quotient data passes the full check suite again is
a necessary condition, applied recursively.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Protocol, Sequence

from .core import FixedPointData, Point


class DataFilter(Protocol):
    """Anything that can accept or reject weight data (e.g. a check suite)."""

    def accepts(self, data: FixedPointData) -> bool: ...


@dataclass(frozen=True)
class ResidueSignature:
    """Per point and modulus: fixed-component dimension and normal residues.

    ``divisible`` counts the m-divisible weights (the complex dimension of
    the fixed component through the point); ``residues`` is the sorted
    multiset of nonzero residues mod m of the other weights.
    """

    m: int
    divisible: int
    residues: tuple[int, ...]


def residue_signature(weights: Sequence[int], m: int) -> ResidueSignature:
    """Split a point's weights into m-divisible ones and residues in 1..m-1."""
    if not isinstance(m, int) or isinstance(m, bool) or m < 2:
        raise ValueError(f"modulus must be an integer >= 2, got {m!r}")
    residues = sorted(w % m for w in weights if w % m != 0)
    divisible = len(weights) - len(residues)
    return ResidueSignature(m, divisible, tuple(residues))


@dataclass(frozen=True)
class ComponentGrouping:
    """A partition of the point indices into components for one modulus.

    Each group carries the common fixed-component dimension ``z`` of its
    points; groups with z >= 1 have at least two members, z = 0 points are
    singletons.
    """

    m: int
    groups: tuple[tuple[tuple[int, ...], int], ...]


def restrict_group(data: FixedPointData, group: Sequence[int], m: int) -> FixedPointData:
    """Quotient-circle weight data of the component containing ``group``.

    All points in the group must share z >= 1 divisible weights and equal
    residue multisets; the result has complex dimension z and point weights
    ``w / m`` for the m-divisible weights of each point.
    """
    signatures = {residue_signature(data.points[i].weights, m) for i in group}
    if len(signatures) != 1:
        raise ValueError(f"points {tuple(group)} have mismatched residue signatures mod {m}")
    (sig,) = signatures
    if sig.divisible < 1:
        raise ValueError(f"points {tuple(group)} have no m-divisible weights for m={m}")
    points = tuple(
        Point(tuple(w // m for w in data.points[i].weights if w % m == 0))
        for i in group
    )
    return FixedPointData(sig.divisible, points)


def _partitions_min_two(items: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All set partitions of ``items`` into blocks of size >= 2, deterministically."""
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for size in range(1, len(rest) + 1):
        for mates in combinations(rest, size):
            block = (first,) + mates
            remaining = tuple(x for x in rest if x not in mates)
            for sub in _partitions_min_two(remaining):
                yield (block,) + sub


@dataclass(frozen=True)
class RestrictionResult:
    """Feasibility verdict for one modulus, with a grouping witness on success."""

    m: int
    feasible: bool
    grouping: ComponentGrouping | None
    reason: str | None


def check_restriction(data: FixedPointData, m: int, suite: DataFilter) -> RestrictionResult:
    """Decide whether some admissible grouping exists for modulus ``m``.

    Grouping is existential because weight data does not determine the
    component structure: the data is feasible if SOME signature-respecting
    partition (blocks of size >= 2 for z >= 1, singletons for z = 0) makes
    every positive-dimensional block's quotient data pass ``suite``.
    Classes are independent, so the search runs per signature class.
    """
    if not isinstance(m, int) or isinstance(m, bool) or m < 2:
        raise ValueError(f"modulus must be an integer >= 2, got {m!r}")

    classes: dict[ResidueSignature, list[int]] = {}
    for i, p in enumerate(data.points):
        classes.setdefault(residue_signature(p.weights, m), []).append(i)

    groups: list[tuple[tuple[int, ...], int]] = []
    for sig in sorted(classes, key=lambda s: (s.divisible, s.residues)):
        members = tuple(classes[sig])
        if sig.divisible == 0:
            groups.extend(((i,), 0) for i in members)
            continue
        if len(members) == 1:
            return RestrictionResult(
                m, False, None,
                f"m={m}: point {members[0]} is alone in its residue class with "
                f"{sig.divisible} divisible weight(s); a positive-dimensional "
                f"component must contain at least two fixed points",
            )
        chosen = _feasible_class_partition(data, m, members, suite)
        if chosen is None:
            return RestrictionResult(
                m, False, None,
                f"m={m}: no grouping of points {members} into components of "
                f"size >= 2 yields quotient data passing the suite",
            )
        groups.extend((block, sig.divisible) for block in chosen)

    grouping = ComponentGrouping(m, tuple(sorted(groups)))
    return RestrictionResult(m, True, grouping, None)


def _feasible_class_partition(
    data: FixedPointData, m: int, members: tuple[int, ...], suite: DataFilter
) -> tuple[tuple[int, ...], ...] | None:
    """First partition of one signature class whose blocks all pass the suite."""
    block_ok: dict[tuple[int, ...], bool] = {}

    def ok(block: tuple[int, ...]) -> bool:
        if block not in block_ok:
            block_ok[block] = suite.accepts(restrict_group(data, block, m))
        return block_ok[block]

    for partition in _partitions_min_two(members):
        if all(ok(block) for block in partition):
            return partition
    return None


@dataclass(frozen=True)
class AllRestrictionsResult:
    """Aggregate verdict over every modulus 2..max|weight|."""

    passed: bool
    results: tuple[RestrictionResult, ...]

    @property
    def first_failing_m(self) -> int | None:
        for r in self.results:
            if not r.feasible:
                return r.m
        return None


def check_all_restrictions(data: FixedPointData, suite: DataFilter) -> AllRestrictionsResult:
    """Run the restriction check for every m from 2 to the largest |weight|.

    Every modulus yields a genuine necessary condition (for non-divisor m
    the signatures simply classify points), so all are checked, stopping at
    the first infeasible one.  Data with max |weight| 1 passes vacuously.
    """
    results = []
    for m in range(2, data.max_abs_weight() + 1):
        result = check_restriction(data, m, suite)
        results.append(result)
        if not result.feasible:
            return AllRestrictionsResult(False, tuple(results))
    return AllRestrictionsResult(True, tuple(results))
