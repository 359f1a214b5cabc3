from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

import jsonschema
import pytest

from circlesieve import (
    FixedPointData,
    InvalidDataError,
    Point,
    Suite,
    canonicalize,
    cp2,
    parse_data_document,
    remark,
    report_to_document,
    s6,
    t1_contradiction,
)
from circlesieve.documents import (
    data_to_document,
    encode_value,
    fraction_str,
    parse_fraction,
    summary_record,
    survivor_record,
)
from circlesieve.search import SearchSpec, run_search

SCHEMA_DIR = Path(__file__).resolve().parent.parent / "schemas"
DATA_SCHEMA = json.loads((SCHEMA_DIR / "data_document.schema.json").read_text())
REPORT_SCHEMA = json.loads((SCHEMA_DIR / "report_document.schema.json").read_text())


class TestFractions:
    @pytest.mark.parametrize("value,text", [
        (Fraction(3), "3"),
        (Fraction(-1, 2), "-1/2"),
        (Fraction(0), "0"),
        (Fraction(16, 3), "16/3"),
    ])
    def test_round_trip(self, value, text):
        assert fraction_str(value) == text
        assert parse_fraction(text) == value

    def test_encode_value_nested(self):
        encoded = encode_value({"a": [Fraction(1, 2), (1, 2)], "b": {"c": Fraction(5)}})
        assert encoded == {"a": ["1/2", [1, 2]], "b": {"c": "5"}}


class TestDataDocuments:
    def test_round_trip_is_identity(self):
        data = FixedPointData(2, (Point((1, 2), "p"), Point((-1, 1)), Point((-2, -1))))
        doc = data_to_document(data)
        assert parse_data_document(doc) == data
        assert data_to_document(parse_data_document(doc)) == doc

    def test_weights_order_insensitive(self):
        a = parse_data_document(
            {"complex_dimension": 2, "points": [{"weights": [2, 1]}, {"weights": [-1, -2]}]}
        )
        b = parse_data_document(
            {"complex_dimension": 2, "points": [{"weights": [1, 2]}, {"weights": [-2, -1]}]}
        )
        assert canonicalize(a) == canonicalize(b)

    def test_unknown_top_level_field_rejected(self):
        with pytest.raises(InvalidDataError, match="unknown field 'extra'"):
            parse_data_document(
                {"complex_dimension": 1, "points": [{"weights": [1]}], "extra": 1}
            )

    def test_unknown_point_field_rejected(self):
        with pytest.raises(InvalidDataError, match="point 0: unknown field"):
            parse_data_document(
                {"complex_dimension": 1, "points": [{"weights": [1], "mass": 2}]}
            )

    def test_missing_fields_listed(self):
        with pytest.raises(InvalidDataError) as exc_info:
            parse_data_document({})
        assert any("complex_dimension" in e for e in exc_info.value.errors)
        assert any("points" in e for e in exc_info.value.errors)

    def test_zero_weight_surfaces(self):
        with pytest.raises(InvalidDataError, match="zero weight"):
            parse_data_document({"complex_dimension": 1, "points": [{"weights": [0]}]})

    def test_non_object_document(self):
        with pytest.raises(InvalidDataError, match="JSON object"):
            parse_data_document([1, 2, 3])

    def test_non_list_weights(self):
        with pytest.raises(InvalidDataError, match="non-list"):
            parse_data_document({"complex_dimension": 1, "points": [{"weights": "x"}]})

    def test_non_string_label(self):
        with pytest.raises(InvalidDataError, match="label"):
            parse_data_document({"complex_dimension": 1, "points": [{"weights": [1], "label": 3}]})

    def test_valid_documents_satisfy_schema(self):
        for data in (remark(), cp2(), s6(1, 4), t1_contradiction()):
            jsonschema.validate(data_to_document(data), DATA_SCHEMA)

    @pytest.mark.parametrize("doc", [
        {"complex_dimension": 0, "points": [{"weights": [1]}]},
        {"complex_dimension": 1, "points": []},
        {"complex_dimension": 1, "points": [{"weights": [0]}]},
        {"complex_dimension": 1, "points": [{"weights": [1]}], "extra": True},
    ])
    def test_invalid_documents_fail_schema(self, doc):
        with pytest.raises(jsonschema.ValidationError):
            jsonschema.validate(doc, DATA_SCHEMA)


class TestReportDocuments:
    def test_structure_and_schema(self):
        suite = Suite.paper()
        for data in (remark(), cp2(), t1_contradiction()):
            report = suite.run(data)
            doc = report_to_document(report, suite.filters)
            jsonschema.validate(doc, REPORT_SCHEMA)
            assert doc["overall"] == report.overall
            assert [c["name"] for c in doc["checks"]] == list(suite.filters)
            json.dumps(doc)  # fully serializable

    def test_every_enabled_check_appears_exactly_once(self):
        suite = Suite.all()
        doc = report_to_document(suite.run(cp2()), suite.filters)
        names = [c["name"] for c in doc["checks"]]
        assert sorted(names) == sorted(set(names))
        assert set(names) == set(suite.filters)

    def test_rationals_serialized_as_strings(self):
        suite = Suite(("integrality",))
        doc = report_to_document(suite.run(cp2()), suite.filters)
        values = [e["value"] for e in doc["checks"][0]["witness"]["chern_numbers"]]
        assert values and all(isinstance(v, str) for v in values)


class TestStreamRecords:
    def test_survivor_and_summary_shapes(self):
        result = run_search(SearchSpec(1, 2, 2))
        records = [survivor_record(s) for s in result.survivors]
        for record in records:
            assert record["type"] == "survivor"
            jsonschema.validate(record["data"], DATA_SCHEMA)
        summary = summary_record(result)
        assert summary["type"] == "summary"
        assert summary["survivors"] == len(records) == 2
        assert summary["truncated"] is False
        assert summary["spec"]["max_weight"] == 2
