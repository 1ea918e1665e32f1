"""Arcs and caps: verification, projections, completeness, tables, search."""

import itertools

import pytest

from ringspace import (
    BudgetExceededError,
    DomainError,
    Matrix,
    NotAnArcError,
    PointSet,
    ShapeMismatchError,
    Subspace,
    enumerate_points,
    extend_arc,
    extend_cap,
    is_arc,
    is_cap,
    is_complete_arc,
    is_complete_cap,
    max_arc_size_formula,
    max_cap_size_formula,
    parse_ring,
    project_point_set,
    search_max_arc,
    search_max_cap,
)


def all_arcs(ring, n, limit=None):
    """Every arc of R^n, grown point by point in canonical order."""
    points = enumerate_points(n, ring)
    found = []

    def grow(current, start):
        found.append(current)
        if limit is not None and len(current) >= limit:
            return
        for i in range(start, len(points)):
            cand = PointSet.of(ring, n, current.points + (points[i],))
            if len(cand.points) == len(current.points) + 1 and is_arc(cand):
                grow(cand, i + 1)

    grow(PointSet.of(ring, n, []), 0)
    return found


def all_caps(ring, n, limit=None):
    points = enumerate_points(n, ring)
    found = []

    def grow(current, start):
        found.append(current)
        if limit is not None and len(current) >= limit:
            return
        for i in range(start, len(points)):
            cand = PointSet.of(ring, n, current.points + (points[i],))
            if len(cand.points) == len(current.points) + 1 and is_cap(cand):
                grow(cand, i + 1)

    grow(PointSet.of(ring, n, []), 0)
    return found


class TestArcPredicate:
    def test_frame_plus_ones(self, z4):
        ps = PointSet.from_rows(z4, [[1, 0], [0, 1], [1, 1]])
        assert is_arc(ps)

    def test_residue_collision_breaks_arc(self, z4):
        ps = PointSet.from_rows(z4, [[1, 0], [0, 1], [1, 1], [1, 2]])
        # (1,0) and (1,2) agree mod 2, so some pair has residue rank 1
        assert not is_arc(ps)

    def test_single_point(self, z4):
        assert is_arc(PointSet.from_rows(z4, [[1, 0]]))

    def test_small_sets_need_general_position(self, z4):
        ps = PointSet.from_rows(z4, [[1, 0, 0], [1, 2, 0]])
        assert not is_arc(ps)

    def test_ambient_too_small(self, z4):
        with pytest.raises(ShapeMismatchError):
            is_arc(PointSet.from_rows(z4, [[1]]))

    def test_point_identification(self, z4):
        # (3,0) is a unit multiple of (1,0): same point
        ps = PointSet.from_rows(z4, [[1, 0], [3, 0]])
        assert len(ps.points) == 1


class TestCapPredicate:
    def test_frame_plus_ones_z2(self, z2):
        ps = PointSet.from_rows(z2, [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]])
        assert is_cap(ps)

    def test_three_points_in_a_plane(self, z2):
        ps = PointSet.from_rows(z2, [[1, 0, 0], [0, 1, 0], [1, 1, 0]])
        assert not is_cap(ps)

    def test_two_points_pass(self, z4):
        assert is_cap(PointSet.from_rows(z4, [[1, 0, 0], [0, 1, 0]]))

    def test_needs_three_dimensions(self, z4):
        with pytest.raises(ShapeMismatchError):
            is_cap(PointSet.from_rows(z4, [[1, 0], [0, 1]]))


class TestProjection:
    def test_projection_of_arc(self, z4):
        ps = PointSet.from_rows(z4, [[1, 0], [0, 1], [1, 1]])
        proj = project_point_set(ps, 0)
        assert proj.ring.order == 2
        assert len(proj.points) == 3
        assert is_arc(proj)

    def test_projection_over_field_is_identity(self, z2):
        ps = PointSet.from_rows(z2, [[1, 0], [0, 1]])
        proj = project_point_set(ps, 0)
        assert {p.canons for p in proj.points} == {p.canons for p in ps.points}

    def test_collision_reported(self, z4):
        ps = PointSet.from_rows(z4, [[1, 0], [1, 2]])
        with pytest.raises(DomainError):
            project_point_set(ps, 0)

    def test_every_arc_projects_to_arcs_of_equal_size(self, z6):
        for ps in all_arcs(z6, 2):
            for i in range(z6.ell):
                proj = project_point_set(ps, i)
                assert len(proj.points) == len(ps.points)
                assert is_arc(proj) or len(ps.points) == 0


class TestCompleteness:
    def test_maximum_arc_is_complete(self, z4):
        ps = PointSet.from_rows(z4, [[1, 0], [0, 1], [1, 1]])
        assert is_complete_arc(ps)
        assert extend_arc(ps) == []

    def test_short_arc_extends(self, z2):
        ps = PointSet.from_rows(z2, [[1, 0], [0, 1]])
        assert not is_complete_arc(ps)
        ext = extend_arc(ps)
        assert [p.canons[0][0] for p in ext] == [(1, 1)]

    def test_cap_extension_z2(self, z2):
        ps = PointSet.from_rows(z2, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
        ext = extend_cap(ps)
        assert [p.canons[0][0] for p in ext] == [(1, 1, 1)]

    def test_non_arc_rejected(self, z4):
        ps = PointSet.from_rows(z4, [[1, 0], [0, 1], [1, 1], [1, 2]])
        with pytest.raises(NotAnArcError):
            is_complete_arc(ps)

    def test_dual_route_agreement_all_arcs_z4(self, z4):
        for ps in all_arcs(z4, 2):
            if len(ps.points) == 0:
                continue
            is_complete_arc(ps)  # internal assertion compares both routes

    def test_dual_route_agreement_all_caps_z4_cubed(self, z4):
        for ps in all_caps(z4, 3):
            if len(ps.points) == 0:
                continue
            is_complete_cap(ps)


class TestSizeTables:
    def test_arc_values(self, z4, z6):
        assert max_arc_size_formula(2, z4) == 3
        assert max_arc_size_formula(2, z6) == 3
        assert max_arc_size_formula(3, z4) == 4
        assert max_arc_size_formula(3, z6) == 4
        assert max_arc_size_formula(4, z6) == 5
        assert max_arc_size_formula(5, z4) == 6

    def test_arc_unknown_outside_table(self):
        z5 = parse_ring("Z5")
        # ambient 4 needs q > 3 everywhere; Z10 mixes q=2 and q=5
        assert max_arc_size_formula(4, parse_ring("Z10")) is None
        assert max_arc_size_formula(4, z5) == 6

    def test_cap_values(self, z2, z3, z4, z6):
        assert max_cap_size_formula(3, z4) == 4
        assert max_cap_size_formula(3, z6) == 4
        assert max_cap_size_formula(4, z2) == 8
        assert max_cap_size_formula(4, z4) == 8
        assert max_cap_size_formula(4, z3) == 10
        assert max_cap_size_formula(5, z3) == 20
        assert max_cap_size_formula(6, z3) == 56
        assert max_cap_size_formula(5, z2) == 16

    def test_cap_unknown_for_mixed_q_dim4(self, z6):
        assert max_cap_size_formula(4, z6) is None

    def test_preconditions(self, z4):
        with pytest.raises(ShapeMismatchError):
            max_arc_size_formula(1, z4)
        with pytest.raises(ShapeMismatchError):
            max_cap_size_formula(2, z4)


class TestSearch:
    @pytest.mark.parametrize(
        "spec,n,size", [("Z4", 2, 3), ("Z6", 2, 3), ("Z4", 3, 4), ("Z6", 3, 4)]
    )
    def test_max_arc(self, spec, n, size):
        ring = parse_ring(spec)
        ps = search_max_arc(n, ring)
        assert len(ps.points) == size
        assert is_arc(ps)
        assert is_complete_arc(ps)
        assert len(ps.points) == max_arc_size_formula(n, ring)

    @pytest.mark.parametrize("spec,n,size", [("Z4", 3, 4), ("Z6", 3, 4), ("Z2", 4, 8)])
    def test_max_cap(self, spec, n, size):
        ring = parse_ring(spec)
        ps = search_max_cap(n, ring)
        assert len(ps.points) == size
        assert is_cap(ps)
        assert is_complete_cap(ps)
        assert len(ps.points) == max_cap_size_formula(n, ring)

    def test_search_is_deterministic(self, z4):
        a = search_max_arc(2, z4)
        b = search_max_arc(2, z4)
        assert [p.canons for p in a.points] == [p.canons for p in b.points]

    def test_search_matches_exhaustive_enumeration(self, z4):
        best = max(len(ps.points) for ps in all_arcs(z4, 2))
        assert len(search_max_arc(2, z4).points) == best

    def test_budget_guard(self, z2):
        with pytest.raises(BudgetExceededError):
            search_max_cap(4, z2, budget=2)


class TestLifting:
    def test_crt_combined_component_arcs_form_an_arc(self, z6):
        """Componentwise arcs of a common size assemble to an arc over the
        product, by combining representatives entry by entry."""
        f2_rows = [(1, 0), (0, 1), (1, 1)]
        f3_rows = [(1, 0), (0, 1), (1, 2)]
        combined = [
            [(a2, a3), (b2, b3)]
            for (a2, b2), (a3, b3) in zip(f2_rows, f3_rows)
        ]
        ps = PointSet.from_rows(z6, combined)
        assert len(ps.points) == 3
        assert is_arc(ps)
