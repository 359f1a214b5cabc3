from __future__ import annotations

import json

import pytest

from circlesieve import (
    FixedPointData,
    SearchSpec,
    SearchTruncatedError,
    Suite,
    canonicalize,
    run_search,
    two_point_dimension_survey,
)
from circlesieve.documents import summary_record, survivor_record
from oracles import canonical_candidates


def survivor_set(result):
    return {s.weight_tuples() for s in result.survivors}


class TestKnownEnumerations:
    def test_spheres_dimension_one(self):
        result = run_search(SearchSpec(1, 2, 3))
        assert survivor_set(result) == {((-1,), (1,)), ((-2,), (2,)), ((-3,), (3,))}

    def test_two_point_dimension_three_family(self):
        result = run_search(SearchSpec(3, 2, 3))
        assert survivor_set(result) == {
            ((-2, 1, 1), (-1, -1, 2)),
            ((-3, 1, 2), (-2, -1, 3)),
        }

    def test_two_point_even_dimensions_empty(self):
        assert run_search(SearchSpec(2, 2, 3)).survivors == ()
        assert run_search(SearchSpec(4, 2, 3)).survivors == ()

    def test_three_point_dimension_two(self):
        # the linear projective-plane actions with exponent gaps (1,1) and (1,2)
        result = run_search(SearchSpec(2, 3, 3))
        assert survivor_set(result) == {
            ((-2, -1), (-1, 1), (1, 2)),
            ((-3, -2), (-1, 2), (1, 3)),
        }

    def test_dimension_four_three_points_empty(self):
        result = run_search(SearchSpec(4, 3, 3))
        assert result.survivors == ()

    def test_dimension_four_three_points_empty_extended_bound(self):
        # extended run beyond the certified desk-scale bound of the
        # acceptance suite; still fast thanks to pairing-first generation
        result = run_search(SearchSpec(4, 3, 6))
        assert result.survivors == ()
        assert result.counters.consistent()


class TestOracleEquivalence:
    @pytest.mark.parametrize("n,k,W", [(1, 2, 3), (2, 2, 3), (2, 3, 2), (1, 3, 2)])
    def test_staged_matches_generate_then_filter(self, n, k, W):
        suite = Suite.paper()
        naive = {
            pts
            for pts in canonical_candidates(n, k, W)
            if suite.accepts(FixedPointData(n, pts))
        }
        assert survivor_set(run_search(SearchSpec(n, k, W))) == naive

    def test_free_generation_path_matches(self):
        # without the pairing filter the enumerator must generate freely
        filters = ("validate", "parity", "vanishing")
        suite = Suite(filters)
        naive = {
            pts
            for pts in canonical_candidates(1, 2, 2)
            if suite.accepts(FixedPointData(1, pts))
        }
        result = run_search(SearchSpec(1, 2, 2, filters=filters))
        assert survivor_set(result) == naive
        assert survivor_set(result) == {((-1,), (1,)), ((-2,), (2,))}


class TestSearchProperties:
    def test_deterministic_byte_identical(self):
        spec = SearchSpec(2, 3, 3)
        runs = []
        for _ in range(2):
            result = run_search(spec)
            lines = [json.dumps(survivor_record(s)) for s in result.survivors]
            lines.append(json.dumps(summary_record(result)))
            runs.append("\n".join(lines))
        assert runs[0] == runs[1]

    @pytest.mark.parametrize("n,k", [(1, 2), (3, 2), (2, 3)])
    def test_monotone_in_weight_bound(self, n, k):
        small = survivor_set(run_search(SearchSpec(n, k, 2)))
        large = survivor_set(run_search(SearchSpec(n, k, 3)))
        assert small <= large

    def test_survivors_are_distinct_canonical_forms(self):
        result = run_search(SearchSpec(2, 3, 3))
        forms = [canonicalize(s) for s in result.survivors]
        assert len(set(forms)) == len(forms)
        for s in result.survivors:
            assert canonicalize(s).data.weight_tuples() == s.weight_tuples()

    @pytest.mark.parametrize("spec", [SearchSpec(2, 2, 3), SearchSpec(2, 3, 3), SearchSpec(1, 4, 2)])
    def test_counters_consistent(self, spec):
        result = run_search(spec)
        assert result.counters.consistent()
        assert result.counters.survivors == len(result.survivors)

    def test_odd_total_weight_count_with_pairing(self):
        # 3 points x 1 weight: no negation-symmetric multiset exists
        result = run_search(SearchSpec(1, 3, 2))
        assert result.survivors == ()
        assert result.counters.generated == 0

    def test_gcd_normalize_drops_scaled_survivors(self):
        plain = run_search(SearchSpec(1, 2, 3))
        primitive = run_search(SearchSpec(1, 2, 3, gcd_normalize=True))
        assert survivor_set(plain) == {((-1,), (1,)), ((-2,), (2,)), ((-3,), (3,))}
        assert survivor_set(primitive) == {((-1,), (1,))}

    def test_streaming_callback(self):
        seen = []
        result = run_search(SearchSpec(3, 2, 3), on_survivor=seen.append, collect=False)
        assert result.survivors == ()
        assert len(seen) == 2
        assert result.counters.survivors == 2


class TestTruncation:
    def test_cap_exceeded_raises_with_partial(self):
        spec = SearchSpec(2, 3, 3, cap=10)
        with pytest.raises(SearchTruncatedError) as exc_info:
            run_search(spec)
        partial = exc_info.value.partial
        assert partial.truncated
        assert partial.counters.generated == 10
        assert partial.counters.consistent()

    def test_cap_not_reached_completes(self):
        result = run_search(SearchSpec(1, 2, 2, cap=100))
        assert not result.truncated


class TestSpecValidation:
    @pytest.mark.parametrize("kwargs", [
        {"n": 0, "k": 2, "max_weight": 1},
        {"n": 1, "k": 0, "max_weight": 1},
        {"n": 1, "k": 1, "max_weight": 0},
        {"n": 1, "k": 1, "max_weight": 1, "cap": 0},
    ])
    def test_bad_spec(self, kwargs):
        with pytest.raises(ValueError):
            SearchSpec(**kwargs)

    def test_bad_filters(self):
        with pytest.raises(ValueError):
            SearchSpec(1, 1, 1, filters=("bogus",))


class TestTwoPointSurvey:
    def test_dimension_profile_at_bound_three(self):
        survey = two_point_dimension_survey(3)
        counts = {n: r.counters.survivors for n, r in survey.items()}
        assert counts == {1: 3, 2: 0, 3: 2, 4: 0}

    def test_dimension_profile_at_bound_one(self):
        survey = two_point_dimension_survey(1)
        counts = {n: r.counters.survivors for n, r in survey.items()}
        assert counts == {1: 1, 2: 0, 3: 0, 4: 0}

    def test_bad_bound(self):
        with pytest.raises(ValueError):
            two_point_dimension_survey(0)
