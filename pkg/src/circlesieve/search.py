"""Bounded exhaustive enumeration of weight data surviving a filter suite.

The enumerator emits exactly one representative per canonical class of
data with all |weight| <= W that passes every enabled check, with
deterministic ordering and per-stage pruning counters.  Generation is
transparent: every generation-level shortcut below is implied by an
enabled filter, so disabling all pruning and filtering survivors post hoc
yields the identical survivor set.

Two generators are used.  When the pairing filter is enabled, candidates
are built pairing-first: only negation-symmetric global weight multisets
are distributed over points (anything else is pairing-infeasible), which
collapses the space by orders of magnitude.  Otherwise candidates are
generated freely.  Both produce points as ascending weight tuples in
weakly increasing point order, i.e. permutation-canonical data, and only
the negation-minimal representative of each candidate is kept.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Callable, Iterator

from .core import FixedPointData, Point, negation_representative
from .suite import PAPER_FILTERS, Suite, normalize_filters

PointTuples = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class SearchSpec:
    """Search space (n, k, max |weight|) plus the enabled filters and options.

    ``gcd_normalize`` drops survivors whose global weight gcd exceeds 1
    (scaled data corresponds to composing with a covering homomorphism and
    is legitimately distinct input, so this is off by default).  ``cap``
    bounds the number of generated candidates; exceeding it aborts the
    search with an explicit truncation error, never a silent partial result.
    """

    n: int
    k: int
    max_weight: int
    filters: tuple[str, ...] = PAPER_FILTERS
    gcd_normalize: bool = False
    cap: int = 10**9

    def __post_init__(self) -> None:
        object.__setattr__(self, "filters", normalize_filters(self.filters))
        if self.n < 1 or self.k < 1 or self.max_weight < 1:
            raise ValueError(
                f"search spec requires n, k, max_weight >= 1, got "
                f"({self.n}, {self.k}, {self.max_weight})"
            )
        if self.cap < 1:
            raise ValueError(f"candidate cap must be >= 1, got {self.cap}")


@dataclass
class SearchCounters:
    generated: int = 0
    pruned: dict[str, int] = field(default_factory=dict)
    survivors: int = 0

    def consistent(self) -> bool:
        return self.generated == sum(self.pruned.values()) + self.survivors


@dataclass(frozen=True)
class SearchResult:
    spec: SearchSpec
    survivors: tuple[FixedPointData, ...]
    counters: SearchCounters
    truncated: bool = False


class SearchTruncatedError(RuntimeError):
    """The candidate cap was exceeded; ``partial`` holds the work done so far."""

    def __init__(self, partial: SearchResult):
        super().__init__(
            f"search truncated: candidate cap {partial.spec.cap} exceeded "
            f"({partial.counters.survivors} survivors found so far)"
        )
        self.partial = partial


def _value_range(max_weight: int) -> list[int]:
    return list(range(-max_weight, 0)) + list(range(1, max_weight + 1))


def _iter_free(n: int, k: int, max_weight: int) -> Iterator[PointTuples]:
    """Every permutation-canonical candidate: sorted points, sorted point list."""
    point_space = list(combinations_with_replacement(_value_range(max_weight), n))
    return combinations_with_replacement(point_space, k)


def _sub_multisets(
    items: tuple[tuple[int, int], ...], size: int
) -> Iterator[tuple[int, ...]]:
    """All size-``size`` sub-multisets of (value, count) items, ascending tuples."""
    if size == 0:
        yield ()
        return
    if not items:
        return
    value, count = items[0]
    rest = items[1:]
    rest_capacity = sum(c for _, c in rest)
    for take in range(min(count, size), -1, -1):
        if size - take > rest_capacity:
            continue
        for tail in _sub_multisets(rest, size - take):
            yield (value,) * take + tail


def _subtract(
    items: tuple[tuple[int, int], ...], block: tuple[int, ...]
) -> tuple[tuple[int, int], ...]:
    used = Counter(block)
    return tuple(
        (value, count - used[value]) for value, count in items if count > used[value]
    )


def _iter_splits(
    items: tuple[tuple[int, int], ...],
    k: int,
    n: int,
    prune_zero_sums: bool,
    prev: tuple[int, ...] | None = None,
) -> Iterator[PointTuples]:
    """Distribute a weight multiset over k points of n weights each.

    Blocks are ascending tuples in weakly increasing order, so every
    permutation-canonical split appears exactly once.  With
    ``prune_zero_sums`` any block with nonzero weight sum is cut early.
    """
    if k == 1:
        block = tuple(v for v, c in items for _ in range(c))
        if prev is not None and block < prev:
            return
        if prune_zero_sums and sum(block) != 0:
            return
        yield (block,)
        return
    for block in _sub_multisets(items, n):
        if prev is not None and block < prev:
            continue
        if prune_zero_sums and sum(block) != 0:
            continue
        remaining = _subtract(items, block)
        for rest in _iter_splits(remaining, k - 1, n, prune_zero_sums, block):
            yield (block,) + rest


def _iter_paired(
    n: int, k: int, max_weight: int, prune_zero_sums: bool
) -> Iterator[PointTuples]:
    """Candidates whose global multiset is negation-symmetric (pairing-first)."""
    total = n * k
    if total % 2 != 0:
        return
    for positives in combinations_with_replacement(range(1, max_weight + 1), total // 2):
        multiset = Counter(positives)
        multiset.update(-v for v in positives)
        items = tuple(sorted(multiset.items()))
        yield from _iter_splits(items, k, n, prune_zero_sums)


def run_search(
    spec: SearchSpec,
    on_survivor: Callable[[FixedPointData], None] | None = None,
    collect: bool = True,
) -> SearchResult:
    """Run the staged enumeration; deterministic for a given spec.

    Survivors are streamed to ``on_survivor`` as found; with ``collect``
    they are also accumulated on the result.  Raises
    :class:`SearchTruncatedError` when the candidate cap is exceeded.
    """
    suite = Suite(spec.filters)
    counters = SearchCounters(pruned={name: 0 for name in spec.filters})
    survivors: list[FixedPointData] = []

    paired = "pairing" in spec.filters
    # Sound only when pairing (global sum 0) and an applicable equal-sums
    # check (k <= n) force all point sums equal; for k in {2, 3} equal sums
    # summing to zero must each be zero.
    prune_zero_sums = (
        paired
        and "equal-sums" in spec.filters
        and spec.k <= spec.n
        and spec.k in (2, 3)
    )
    if paired:
        candidates = _iter_paired(spec.n, spec.k, spec.max_weight, prune_zero_sums)
    else:
        candidates = _iter_free(spec.n, spec.k, spec.max_weight)

    for pts in candidates:
        if negation_representative(pts) != pts:
            continue
        if spec.gcd_normalize and math.gcd(*(abs(w) for p in pts for w in p)) != 1:
            continue
        if counters.generated >= spec.cap:
            raise SearchTruncatedError(
                SearchResult(spec, tuple(survivors), counters, truncated=True)
            )
        counters.generated += 1
        data = FixedPointData(spec.n, tuple(Point(p) for p in pts))
        failed = None
        for name in spec.filters:
            if not suite.check_passes(name, data):
                failed = name
                break
        if failed is not None:
            counters.pruned[failed] += 1
            continue
        counters.survivors += 1
        if on_survivor is not None:
            on_survivor(data)
        if collect:
            survivors.append(data)
    return SearchResult(spec, tuple(survivors), counters)


def two_point_dimension_survey(
    max_weight: int, filters: tuple[str, ...] = PAPER_FILTERS
) -> dict[int, SearchResult]:
    """Enumerate k = 2 data for complex dimensions 1..4 at the given bound.

    Survivors exist only in complex dimension 1 or 3 (real dimension 2 or
    6): pairing forces the second point to be the negation of the first,
    so in even complex dimension the two top symmetric values coincide and
    the degree-0 sum is 2/e_n, never zero.
    """
    if max_weight < 1:
        raise ValueError(f"max_weight must be >= 1, got {max_weight}")
    return {
        n: run_search(SearchSpec(n, 2, max_weight, filters)) for n in (1, 2, 3, 4)
    }
