"""JSON wire formats: data documents, report documents, survivor streams.

Rationals are serialized as exact "p/q" strings (plain "p" when integral)
so no floating-point representation ever appears.  Schemas for both
document kinds live in ``schemas/`` at the repository root.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from .core import FixedPointData, InvalidDataError, Point
from .search import SearchResult
from .suite import SuiteReport

TOOL_NAME = "circlesieve"
TOOL_VERSION = "0.1.0"


def fraction_str(value: Fraction) -> str:
    return str(value)


def parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def encode_value(value: Any) -> Any:
    """Recursively convert witness values to JSON-safe structures."""
    if isinstance(value, Fraction):
        return fraction_str(value)
    if isinstance(value, dict):
        return {key: encode_value(v) for key, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode_value(v) for v in value]
    return value


def data_to_document(data: FixedPointData) -> dict:
    points = []
    for p in data.points:
        entry: dict = {"weights": list(p.weights)}
        if p.label is not None:
            entry["label"] = p.label
        points.append(entry)
    return {"complex_dimension": data.n, "points": points}


def parse_data_document(doc: Any) -> FixedPointData:
    """Parse a data document, collecting every violation before raising.

    Unknown fields are rejected; weight order within a point is
    insignificant (weights form a multiset).
    """
    errors: list[str] = []
    if not isinstance(doc, dict):
        raise InvalidDataError([f"document must be a JSON object, got {type(doc).__name__}"])
    unknown = sorted(set(doc) - {"complex_dimension", "points"})
    errors.extend(f"unknown field {name!r}" for name in unknown)
    if "complex_dimension" not in doc:
        errors.append("missing field 'complex_dimension'")
    if "points" not in doc:
        errors.append("missing field 'points'")
    if errors:
        raise InvalidDataError(errors)

    n = doc["complex_dimension"]
    raw_points = doc["points"]
    if not isinstance(raw_points, list):
        raise InvalidDataError(["field 'points' must be a list"])
    points: list[Point] = []
    for i, entry in enumerate(raw_points):
        if not isinstance(entry, dict):
            errors.append(f"point {i}: must be an object with a 'weights' field")
            continue
        unknown = sorted(set(entry) - {"weights", "label"})
        errors.extend(f"point {i}: unknown field {name!r}" for name in unknown)
        label = entry.get("label")
        if label is not None and not isinstance(label, str):
            errors.append(f"point {i}: label must be a string")
            label = None
        weights = entry.get("weights")
        if not isinstance(weights, list):
            errors.append(f"point {i}: missing or non-list 'weights'")
            weights = []
        points.append(Point(tuple(weights), label))
    if errors:
        raise InvalidDataError(errors)
    try:
        return FixedPointData(n, tuple(points))
    except InvalidDataError:
        raise
    except TypeError as exc:  # unhashable / wildly wrong weight entries
        raise InvalidDataError([str(exc)]) from exc


def report_to_document(report: SuiteReport, filters: tuple[str, ...]) -> dict:
    return {
        "tool": {"name": TOOL_NAME, "version": TOOL_VERSION},
        "filters": list(filters),
        "overall": report.overall,
        "checks": [
            {"name": c.name, "status": c.status, "witness": encode_value(c.witness)}
            for c in report.checks
        ],
    }


def survivor_record(data: FixedPointData) -> dict:
    return {"type": "survivor", "data": data_to_document(data)}


def summary_record(result: SearchResult) -> dict:
    spec = result.spec
    return {
        "type": "summary",
        "truncated": result.truncated,
        "survivors": result.counters.survivors,
        "generated": result.counters.generated,
        "pruned": dict(result.counters.pruned),
        "spec": {
            "complex_dimension": spec.n,
            "points": spec.k,
            "max_weight": spec.max_weight,
            "filters": list(spec.filters),
            "gcd_normalize": spec.gcd_normalize,
            "cap": spec.cap,
        },
    }
