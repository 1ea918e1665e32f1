"""The enumeration oracle itself, plus the verification harness."""

import itertools
import random

import pytest

from ringspace import (
    BudgetExceededError,
    LinearSubset,
    Matrix,
    brute_force_dim,
    count_full_rank,
    count_full_rank_enumerated,
    count_subspaces,
    enumerate_points,
    enumerate_subspaces,
    parse_ring,
    verify_counts,
)
from ringspace.oracle import SuiteItem, extend_subspace


class TestPoints:
    def test_point_counts(self, z4, z2, z9):
        assert len(enumerate_points(2, z4)) == 6
        assert len(enumerate_points(2, z2)) == 3
        assert len(enumerate_points(1, z9)) == 1

    def test_points_sorted_and_distinct(self, z6):
        pts = enumerate_points(2, z6)
        assert len({p.canons for p in pts}) == len(pts) == 12

    def test_budget(self, z8):
        with pytest.raises(BudgetExceededError):
            enumerate_points(3, z8, budget=10)


class TestSubspaceEnumeration:
    def test_census_spot_checks(self, z4, z6):
        assert len(enumerate_subspaces(1, 2, z4)) == 6
        assert len(enumerate_subspaces(1, 2, z6)) == 12
        assert len(enumerate_subspaces(0, 2, z4)) == 1
        assert len(enumerate_subspaces(2, 2, z4)) == 1
        assert len(enumerate_subspaces(3, 2, z4)) == 0

    def test_extension_step(self, z4):
        line = enumerate_subspaces(1, 2, z4)[0]
        for pt in enumerate_points(2, z4):
            ext = extend_subspace(line, pt)
            if ext is not None:
                assert ext.dim == 2
                assert ext.contains(line)
                assert ext.contains(pt)

    def test_extension_rejects_contained_point(self, z4):
        line = enumerate_subspaces(1, 2, z4)[0]
        assert extend_subspace(line, line) is None


class TestBruteForceDim:
    def test_agrees_with_module_dim(self, z4):
        rng = random.Random(11)
        for _ in range(40):
            m = rng.randrange(1, 3)
            gens = Matrix.from_entries(
                z4, [[rng.randrange(4) for _ in range(2)] for _ in range(m)]
            )
            assert brute_force_dim(gens) == LinearSubset.from_generators(gens).dim

    def test_zero_module(self, z4):
        gens = Matrix.zeros(z4, 1, 2)
        assert brute_force_dim(gens) == 0


class TestFullRankEnumeration:
    @pytest.mark.parametrize("m,n", [(1, 1), (1, 2), (2, 2)])
    def test_matches_formula(self, z4, z6, m, n):
        for ring in (z4, z6):
            assert count_full_rank_enumerated(m, n, ring) == count_full_rank(
                m, n, ring
            )


class TestHarness:
    def test_all_reports_match_on_real_items(self, z4):
        items = [
            SuiteItem(
                "lines of Z4^2",
                lambda: count_subspaces(1, 2, z4),
                lambda: len(enumerate_subspaces(1, 2, z4)),
            )
        ]
        reports = verify_counts(items=items)
        assert len(reports) == 1
        assert reports[0].match
        assert reports[0].formula_value == reports[0].enumerated_value == 6

    def test_harness_catches_a_wrong_formula(self, z4):
        items = [
            SuiteItem(
                "deliberately broken",
                lambda: count_subspaces(1, 2, z4) + 1,
                lambda: len(enumerate_subspaces(1, 2, z4)),
            )
        ]
        reports = verify_counts(items=items)
        assert not reports[0].match
        assert reports[0].formula_value == 7
        assert reports[0].enumerated_value == 6

    def test_unknown_suite_rejected(self):
        with pytest.raises(ValueError):
            verify_counts(suite="nope")

    def test_named_suites_resolve(self):
        from ringspace.oracle import SUITES

        assert set(SUITES) == {"counts", "algebra", "geometry"}
