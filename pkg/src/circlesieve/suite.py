"""Check suite assembly: named filters, staged evaluation, structured reports.

A suite is an ordered set of named checks over weight data.  The "paper"
suite holds every default necessary condition; "all" additionally enables
the chi_y-symmetry check, which is stronger but deliberately kept behind a
flag (see :func:`circlesieve.localization.check_kosniowski`).  Checks are
independent and order-free; this module fixes a canonical cheap-first
order used both for reporting and for staged pruning.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import localization, restriction, structural
from .core import FixedPointData

# Canonical evaluation/reporting order, cheapest first.
CANONICAL_ORDER = (
    "validate",
    "parity",
    "pm1",
    "equal-sums",
    "pairing",
    "vanishing",
    "integrality",
    "restrictions",
    "kosniowski",
)

PAPER_FILTERS = CANONICAL_ORDER[:-1]
ALL_FILTERS = CANONICAL_ORDER

FILTER_ALIASES = {"all-restrictions": "restrictions"}

# Statuses: pass | vacuous (hypothesis not met) | fail | infeasible.
_FAILING = frozenset({"fail", "infeasible"})


@dataclass(frozen=True)
class CheckReport:
    """Structured verdict of one check with a machine-readable witness."""

    name: str
    status: str
    witness: dict

    @property
    def passed(self) -> bool:
        return self.status not in _FAILING


@dataclass(frozen=True)
class SuiteReport:
    checks: tuple[CheckReport, ...]

    @property
    def overall(self) -> str:
        return "pass" if all(c.passed for c in self.checks) else "fail"

    def __getitem__(self, name: str) -> CheckReport:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def normalize_filters(names: Iterable[str]) -> tuple[str, ...]:
    """Resolve aliases, validate names, and impose the canonical order."""
    requested = set()
    for name in names:
        name = FILTER_ALIASES.get(name, name)
        if name not in CANONICAL_ORDER:
            raise ValueError(
                f"unknown filter {name!r}; known filters: {', '.join(CANONICAL_ORDER)}"
            )
        requested.add(name)
    if not requested:
        raise ValueError("filter list must be non-empty")
    return tuple(name for name in CANONICAL_ORDER if name in requested)


def _report_validate(data: FixedPointData, suite: Suite) -> CheckReport:
    # Constructed FixedPointData already satisfies every type invariant.
    return CheckReport(
        "validate", "pass", {"complex_dimension": data.n, "points": data.k}
    )


def _report_parity(data: FixedPointData, suite: Suite) -> CheckReport:
    status = "pass" if localization.check_parity(data) else "fail"
    return CheckReport(
        "parity", status, {"points": data.k, "complex_dimension": data.n}
    )


def _report_pm1(data: FixedPointData, suite: Suite) -> CheckReport:
    r = structural.check_pm1(data)
    if not r.applicable:
        return CheckReport("pm1", "vacuous", {"all_pm1": False})
    status = "pass" if r.passed else "fail"
    return CheckReport(
        "pm1", status,
        {"all_pm1": True, "points": r.points, "expected_points": r.expected_points},
    )


def _report_equal_sums(data: FixedPointData, suite: Suite) -> CheckReport:
    r = structural.check_equal_sums(data)
    classes = [{"sum": s, "points": list(idx)} for s, idx in r.classes]
    if not r.applicable:
        return CheckReport(
            "equal-sums", "vacuous", {"applicable": False, "classes": classes}
        )
    witness: dict = {"applicable": True, "classes": classes}
    if not r.passed:
        witness["singletons"] = [c for c in classes if len(c["points"]) == 1]
    return CheckReport("equal-sums", "pass" if r.passed else "fail", witness)


def _report_pairing(data: FixedPointData, suite: Suite) -> CheckReport:
    r = structural.check_pairing(data)
    if r.feasible:
        assert r.witness is not None
        pairs = [[list(a), list(b)] for a, b in r.witness.pairs]
        return CheckReport("pairing", "pass", {"pairs": pairs})
    return CheckReport("pairing", "infeasible", {"reason": r.reason})


def _report_vanishing(data: FixedPointData, suite: Suite) -> CheckReport:
    r = localization.check_vanishing(data)
    witness: dict = {"partitions_checked": r.partitions_checked}
    if not r.passed:
        witness["violations"] = [
            {"partition": list(omega.parts), "value": value}
            for omega, value in r.violations
        ]
    return CheckReport("vanishing", "pass" if r.passed else "fail", witness)


def _report_integrality(data: FixedPointData, suite: Suite) -> CheckReport:
    r = localization.check_integrality(data)
    witness: dict = {
        "chern_numbers": [
            {"partition": list(p.parts), "value": v}
            for p, v in sorted(r.table.chern_numbers().items())
        ],
        "subtop_sums": [
            {"partition": list(p.parts), "value": v}
            for p, v in sorted(r.table.subtop_sums().items())
        ],
    }
    if not r.passed:
        witness["non_integers"] = [list(p.parts) for p in r.non_integers]
    return CheckReport("integrality", "pass" if r.passed else "fail", witness)


def _report_restrictions(data: FixedPointData, suite: Suite) -> CheckReport:
    r = restriction.check_all_restrictions(data, suite)
    moduli = []
    for result in r.results:
        entry: dict = {"m": result.m, "feasible": result.feasible}
        if result.grouping is not None:
            entry["grouping"] = [
                {"points": list(block), "z": z} for block, z in result.grouping.groups
            ]
        if result.reason is not None:
            entry["reason"] = result.reason
        moduli.append(entry)
    witness: dict = {"moduli": moduli}
    if not r.passed:
        witness["failing_m"] = r.first_failing_m
    return CheckReport("restrictions", "pass" if r.passed else "infeasible", witness)


def _report_kosniowski(data: FixedPointData, suite: Suite) -> CheckReport:
    profile = localization.chi_y_profile(data)
    status = "pass" if profile.symmetric else "fail"
    return CheckReport("kosniowski", status, {"profile": list(profile.counts)})


_CHECKS: dict[str, Callable[[FixedPointData, "Suite"], CheckReport]] = {
    "validate": _report_validate,
    "parity": _report_parity,
    "pm1": _report_pm1,
    "equal-sums": _report_equal_sums,
    "pairing": _report_pairing,
    "vanishing": _report_vanishing,
    "integrality": _report_integrality,
    "restrictions": _report_restrictions,
    "kosniowski": _report_kosniowski,
}


@dataclass(frozen=True)
class Suite:
    """An ordered set of enabled checks over weight data.

    ``run`` evaluates every enabled check and reports all verdicts;
    ``accepts`` is the staged boolean form that stops at the first failing
    check.  The restriction check recurses through ``accepts`` on quotient
    data, which is memoized per suite (quotient data repeats heavily).
    """

    filters: tuple[str, ...] = PAPER_FILTERS
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "filters", normalize_filters(self.filters))

    @classmethod
    def paper(cls) -> Suite:
        return cls(PAPER_FILTERS)

    @classmethod
    def all(cls) -> Suite:
        return cls(ALL_FILTERS)

    def run(self, data: FixedPointData) -> SuiteReport:
        return SuiteReport(tuple(_CHECKS[name](data, self) for name in self.filters))

    def check_passes(self, name: str, data: FixedPointData) -> bool:
        return _CHECKS[name](data, self).passed

    def accepts(self, data: FixedPointData) -> bool:
        cached = self._cache.get(data)
        if cached is None:
            cached = all(self.check_passes(name, data) for name in self.filters)
            self._cache[data] = cached
        return cached
