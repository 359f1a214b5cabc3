"""Combinatorial conditions on the global weight multiset.

Three independent decision procedures: the pairing condition (all weights
split into (w, -w) pairs whose members sit at distinct fixed points), the
equal-sum condition (with fewer than n+1 fixed points every weight sum is
shared by at least two points), and the all-plus-minus-one rule (if every
weight is +-1 the point count must be exactly 2^n).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .core import FixedPointData


@dataclass(frozen=True)
class PairingWitness:
    """An explicit pairing: ((point, w), (point, -w)) covering every occurrence once."""

    pairs: tuple[tuple[tuple[int, int], tuple[int, int]], ...]

    def verify(self, data: FixedPointData) -> None:
        """Raise ValueError unless this witness is valid for ``data``."""
        members = []
        for (i, w), (j, v) in self.pairs:
            if v != -w:
                raise ValueError(f"pair ({w}, {v}) is not opposite in sign")
            if i == j:
                raise ValueError(f"pair of weight {w} lies at a single point {i}")
            members.append((i, w))
            members.append((j, v))
        occurrences = Counter(
            (i, w) for i, p in enumerate(data.points) for w in p.weights
        )
        if Counter(members) != occurrences:
            raise ValueError("pair members do not cover the weight occurrences exactly once")


@dataclass(frozen=True)
class PairingResult:
    feasible: bool
    witness: PairingWitness | None
    reason: str | None


def _max_matching(left: list[int], right: list[int]) -> list[int]:
    """Maximum bipartite matching where occurrence i may pair with j iff
    they sit at different points; returns match_of_left (index into right, -1 unmatched)."""
    match_right = [-1] * len(right)

    def augment(i: int, seen: list[bool]) -> bool:
        for j in range(len(right)):
            if left[i] != right[j] and not seen[j]:
                seen[j] = True
                if match_right[j] == -1 or augment(match_right[j], seen):
                    match_right[j] = i
                    return True
        return False

    for i in range(len(left)):
        augment(i, [False] * len(right))
    match_left = [-1] * len(left)
    for j, i in enumerate(match_right):
        if i != -1:
            match_left[i] = j
    return match_left


def check_pairing(data: FixedPointData) -> PairingResult:
    """Decide the pairing condition, with an explicit witness when feasible.

    Pairs never mix absolute values, so each value v is an independent
    bipartite problem between its +v and -v occurrences with same-point
    pairs forbidden; a perfect matching per value is found by augmenting
    paths (unit-capacity max flow).
    """
    occurrences = [(i, w) for i, p in enumerate(data.points) for w in p.weights]
    if len(occurrences) % 2 != 0:
        return PairingResult(False, None, f"odd number of weights ({len(occurrences)})")

    by_value: dict[int, list[int]] = {}
    for i, w in occurrences:
        by_value.setdefault(w, []).append(i)

    pairs: list[tuple[tuple[int, int], tuple[int, int]]] = []
    for v in sorted({abs(w) for w in by_value}):
        plus = by_value.get(v, [])
        minus = by_value.get(-v, [])
        if len(plus) != len(minus):
            return PairingResult(
                False, None,
                f"value {v}: {len(plus)} occurrences of +{v} vs {len(minus)} of -{v}",
            )
        match_left = _max_matching(plus, minus)
        if any(j == -1 for j in match_left):
            matched = sum(1 for j in match_left if j != -1)
            return PairingResult(
                False, None,
                f"value {v}: only {matched} of {len(plus)} pairs can avoid sharing a point",
            )
        pairs.extend(((plus[i], v), (minus[j], -v)) for i, j in enumerate(match_left))

    witness = PairingWitness(tuple(pairs))
    witness.verify(data)
    return PairingResult(True, witness, None)


@dataclass(frozen=True)
class EqualSumsResult:
    """Verdict plus the partition of points into weight-sum classes.

    ``applicable`` is False when the point count is at least n+1; the check
    then passes vacuously (its hypothesis reads strictly: fewer than n+1
    fixed points).
    """

    passed: bool
    applicable: bool
    classes: tuple[tuple[int, tuple[int, ...]], ...]


def check_equal_sums(data: FixedPointData) -> EqualSumsResult:
    """With k <= n points, every weight-sum value must occur at >= 2 points."""
    classes: dict[int, list[int]] = {}
    for i, p in enumerate(data.points):
        classes.setdefault(sum(p.weights), []).append(i)
    class_items = tuple(sorted((s, tuple(idx)) for s, idx in classes.items()))
    applicable = data.k < data.n + 1
    passed = (not applicable) or all(len(idx) >= 2 for _, idx in class_items)
    return EqualSumsResult(passed, applicable, class_items)


@dataclass(frozen=True)
class Pm1Result:
    passed: bool
    applicable: bool
    expected_points: int
    points: int


def check_pm1(data: FixedPointData) -> Pm1Result:
    """If every weight is +-1, the point count must be exactly 2^n."""
    applicable = all(abs(w) == 1 for w in data.all_weights())
    expected = 2 ** data.n
    passed = (not applicable) or data.k == expected
    return Pm1Result(passed, applicable, expected, data.k)
