"""Core value types and exact combinatorial primitives.

Everything downstream consumes one object: :class:`FixedPointData`, the
complex dimension ``n`` together with a multiset of ``n`` nonzero integer
tangent weights per fixed point.  This module also provides integer
partitions (the index set for Chern monomials), elementary symmetric
polynomial evaluation over exact integers, and the canonical form used to
deduplicate data up to point/weight relabeling and global conjugation.

All types are immutable values and all functions are pure; no floating
point is used anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence


class InvalidDataError(ValueError):
    """Raw input violates the weight-data invariants.

    ``errors`` lists every violation found; nothing is silently repaired.
    """

    def __init__(self, errors: Sequence[str]):
        super().__init__("; ".join(errors))
        self.errors = list(errors)


@dataclass(frozen=True)
class Point:
    """One isolated fixed point: a weight multiset plus an optional label."""

    weights: tuple[int, ...]
    label: str | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(self.weights))


def validation_errors(n: object, point_weights: Sequence[Sequence[int]]) -> list[str]:
    """Collect every invariant violation in raw weight data.

    Returns an empty list iff ``FixedPointData(n, point_weights)`` would be
    accepted.  Booleans are rejected as weights even though Python treats
    them as integers.
    """
    errors: list[str] = []
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        errors.append(f"complex dimension must be a positive integer, got {n!r}")
        return errors
    points = list(point_weights)
    if not points:
        errors.append("empty point list: at least one fixed point is required")
        return errors
    for i, pt in enumerate(points):
        weights = tuple(pt.weights) if isinstance(pt, Point) else tuple(pt)
        if len(weights) != n:
            errors.append(f"point {i}: arity {len(weights)} != complex dimension {n}")
        for w in weights:
            if isinstance(w, bool) or not isinstance(w, int):
                errors.append(f"point {i}: non-integer weight {w!r}")
            elif w == 0:
                errors.append(f"point {i}: zero weight (fixed points must be isolated)")
    return errors


@dataclass(frozen=True)
class FixedPointData:
    """Weight data of a circle action with isolated fixed points.

    ``n`` is the complex dimension; every point carries exactly ``n``
    nonzero integer weights.  Construction validates all invariants and
    raises :class:`InvalidDataError` naming every violation.  Points may be
    given as :class:`Point` instances or as plain weight sequences.
    """

    n: int
    points: tuple[Point, ...]

    def __post_init__(self) -> None:
        points = tuple(
            p if isinstance(p, Point) else Point(tuple(p)) for p in self.points
        )
        object.__setattr__(self, "points", points)
        errors = validation_errors(self.n, [p.weights for p in points])
        if errors:
            raise InvalidDataError(errors)

    @property
    def k(self) -> int:
        """Number of fixed points."""
        return len(self.points)

    def weight_tuples(self) -> tuple[tuple[int, ...], ...]:
        return tuple(p.weights for p in self.points)

    def all_weights(self) -> tuple[int, ...]:
        """All weight occurrences across all points, in point order."""
        return tuple(w for p in self.points for w in p.weights)

    def max_abs_weight(self) -> int:
        return max(abs(w) for w in self.all_weights())

    def weight_gcd(self) -> int:
        return math.gcd(*(abs(w) for w in self.all_weights()))

    def negated(self) -> FixedPointData:
        """The data of the conjugate action: every weight negated."""
        return FixedPointData(
            self.n, tuple(Point(tuple(-w for w in p.weights), p.label) for p in self.points)
        )

    def scaled(self, d: int) -> FixedPointData:
        """Every weight multiplied by ``d >= 1`` (covering homomorphism)."""
        if d < 1:
            raise ValueError(f"scale factor must be >= 1, got {d}")
        return FixedPointData(
            self.n, tuple(Point(tuple(d * w for w in p.weights), p.label) for p in self.points)
        )


def validate(n: object, point_weights: Sequence[Sequence[int]]) -> FixedPointData:
    """Build :class:`FixedPointData` from raw input, or raise with every violation."""
    errors = validation_errors(n, point_weights)
    if errors:
        raise InvalidDataError(errors)
    return FixedPointData(n, tuple(Point(tuple(p)) for p in point_weights))


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers; indexes a Chern monomial.

    The empty partition (degree 0) is legal and indexes the constant 1.
    """

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(self.parts))
        for p in self.parts:
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise ValueError(f"partition parts must be positive integers, got {p!r}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing, got {self.parts}")

    @property
    def degree(self) -> int:
        return sum(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)


@lru_cache(maxsize=None)
def partitions(d: int) -> tuple[Partition, ...]:
    """All partitions of ``d``, each exactly once, in descending lexicographic order.

    ``partitions(0)`` is ``(Partition(()),)``; e.g. ``partitions(4)`` lists
    (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
    """
    if not isinstance(d, int) or isinstance(d, bool) or d < 0:
        raise ValueError(f"partition degree must be a non-negative integer, got {d!r}")

    def gen(remaining: int, max_part: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(max_part, remaining), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(Partition(p) for p in gen(d, d))


def elem_sym(k: int, weights: Sequence[int]) -> int:
    """The k-th elementary symmetric polynomial of integer weights, exactly.

    ``e_0 = 1`` (empty product); ``e_len`` is the product of all weights.
    ``k`` outside ``0..len(weights)`` is a domain error.
    """
    ws = tuple(weights)
    if not isinstance(k, int) or isinstance(k, bool) or k < 0 or k > len(ws):
        raise ValueError(f"elementary symmetric index {k!r} out of range 0..{len(ws)}")
    return elem_sym_all(ws)[k]


def elem_sym_all(weights: Sequence[int]) -> tuple[int, ...]:
    """All values ``e_0 .. e_len`` of the weights, by the one-pass recurrence."""
    ws = tuple(weights)
    e = [0] * (len(ws) + 1)
    e[0] = 1
    for i, w in enumerate(ws):
        for j in range(i + 1, 0, -1):
            e[j] += w * e[j - 1]
    return tuple(e)


def sorted_point_tuples(point_weights: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    """Sort weights ascending within each point, then sort points lexicographically."""
    return tuple(sorted(tuple(sorted(p)) for p in point_weights))


def negation_representative(
    point_weights: Iterable[Iterable[int]],
) -> tuple[tuple[int, ...], ...]:
    """The lexicographic minimum of the sorted data and its sorted global negation."""
    pts = sorted_point_tuples(point_weights)
    neg = sorted_point_tuples(tuple(-w for w in p) for p in pts)
    return min(pts, neg)


@dataclass(frozen=True)
class CanonicalForm:
    """The chosen representative of a weight-data orbit.

    Orbits are taken under point permutation, within-point weight
    permutation, and global negation (switching to the conjugate action);
    labels are dropped.  Two data are equivalent iff their canonical forms
    compare equal.
    """

    data: FixedPointData = field(compare=False)
    key: tuple[int, tuple[tuple[int, ...], ...]] = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "key", (self.data.n, self.data.weight_tuples()))


def canonicalize(data: FixedPointData) -> CanonicalForm:
    """Canonical form of weight data; idempotent and constant on orbits."""
    rep = negation_representative(data.weight_tuples())
    return CanonicalForm(FixedPointData(data.n, tuple(Point(p) for p in rep)))
