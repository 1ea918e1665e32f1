"""Arcs and caps in R^n for a finite commutative ring R.

Points are 1-subspaces.  A set of points is an arc when every n of them
span R^n (every size-n stack of representatives has full McCoy rank), and a
cap (n >= 3) when every 3 of them span a free 3-subspace.  Sets smaller
than the defining size are accepted when they are in general position.

Completeness is computed along two independent routes and cross-checked:
directly (no point extends the set) and via the residue-field projections
(the set is complete iff at least one component projection is complete over
its field).  Maximum sizes come from a fixed lookup table of known field
and ring values; configurations outside the table report None (unknown)
rather than extrapolate, and an exact backtracking search is available to
establish the value by exhaustion.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import zps
from .errors import (
    BudgetExceededError,
    DomainError,
    NotACapError,
    NotAnArcError,
    RingMismatchError,
    ShapeMismatchError,
)
from .matrix import Matrix
from .oracle import DEFAULT_BUDGET, enumerate_points, point_sort_key
from .ring import LocalRing, Ring
from .subspace import Subspace


@dataclass(frozen=True, slots=True)
class PointSet:
    """A finite set of distinct points of R^n, kept canonically sorted."""

    ring: Ring
    ambient: int
    points: tuple[Subspace, ...]

    @classmethod
    def of(cls, ring: Ring, ambient: int, points: Iterable[Subspace]) -> "PointSet":
        seen: dict[tuple, Subspace] = {}
        for p in points:
            if p.ring != ring or p.ambient != ambient:
                raise RingMismatchError("point from a different space")
            if p.dim != 1:
                raise ShapeMismatchError("points must be 1-subspaces")
            seen.setdefault(p.canons, p)
        ordered = tuple(sorted(seen.values(), key=point_sort_key))
        return cls(ring, ambient, ordered)

    @classmethod
    def from_rows(cls, ring: Ring, rows: Sequence[Sequence[object]]) -> "PointSet":
        pts = [
            Subspace.from_matrix(Matrix.from_entries(ring, [row])) for row in rows
        ]
        ambient = pts[0].ambient if pts else 0
        return cls.of(ring, ambient, pts)

    def with_point(self, p: Subspace) -> "PointSet":
        return PointSet.of(self.ring, self.ambient, self.points + (p,))

    def __len__(self) -> int:
        return len(self.points)


def _stack_has_rank(points: Sequence[Subspace], ring: Ring, n: int, want: int) -> bool:
    for ci, comp in enumerate(ring.components):
        rows = [p.canons[ci][0] for p in points]
        if zps.rank_mod_p(rows, n, comp.prime) != want:
            return False
    return True


def is_arc(ps: PointSet) -> bool:
    """Every n points span R^n; smaller sets must be in general position."""
    n = ps.ambient
    if n < 2:
        raise ShapeMismatchError("arcs need ambient dimension >= 2")
    pts = ps.points
    if len(pts) < n:
        return _stack_has_rank(pts, ps.ring, n, len(pts))
    return all(
        _stack_has_rank(subset, ps.ring, n, n)
        for subset in itertools.combinations(pts, n)
    )


def is_cap(ps: PointSet) -> bool:
    """Every 3 points span a free 3-subspace; needs ambient dimension >= 3."""
    n = ps.ambient
    if n < 3:
        raise ShapeMismatchError("caps need ambient dimension >= 3")
    pts = ps.points
    if len(pts) < 3:
        return _stack_has_rank(pts, ps.ring, n, len(pts))
    return all(
        _stack_has_rank(subset, ps.ring, n, 3)
        for subset in itertools.combinations(pts, 3)
    )


def project_point_set(ps: PointSet, i: int) -> PointSet:
    """Image of the point set over the residue field of component i.

    A collision between projected points means the input was not in general
    position; that is reported as an error rather than merged silently.
    """
    comp = ps.ring.components[i]
    field = Ring((LocalRing(comp.prime, 1),))
    p = comp.prime
    out = {}
    for pt in ps.points:
        row = tuple(x % p for x in pt.canons[i][0])
        canon, piv = zps.rref_unit((row,), ps.ambient, p, p)
        key = (canon,)
        if key in out:
            raise DomainError("projected points collide; set is degenerate")
        out[key] = Subspace(field, ps.ambient, 1, key, (piv,))
    return PointSet.of(field, ps.ambient, out.values())


def _extension_points(
    ps: PointSet, admissible, budget: int
) -> list[Subspace]:
    """Points whose addition keeps the configuration admissible."""
    existing = {p.canons for p in ps.points}
    out = []
    for cand in enumerate_points(ps.ambient, ps.ring, budget):
        if cand.canons in existing:
            continue
        if admissible(ps, cand):
            out.append(cand)
    return out


def _arc_admits(ps: PointSet, cand: Subspace) -> bool:
    n = ps.ambient
    pts = ps.points
    if len(pts) + 1 <= n:
        return _stack_has_rank(pts + (cand,), ps.ring, n, len(pts) + 1)
    return all(
        _stack_has_rank(subset + (cand,), ps.ring, n, n)
        for subset in itertools.combinations(pts, n - 1)
    )


def _cap_admits(ps: PointSet, cand: Subspace) -> bool:
    n = ps.ambient
    pts = ps.points
    if len(pts) + 1 <= 3:
        return _stack_has_rank(pts + (cand,), ps.ring, n, len(pts) + 1)
    return all(
        _stack_has_rank(pair + (cand,), ps.ring, n, 3)
        for pair in itertools.combinations(pts, 2)
    )


def extend_arc(ps: PointSet, budget: int = DEFAULT_BUDGET) -> list[Subspace]:
    """All points that extend the arc, in canonical order."""
    if not is_arc(ps):
        raise NotAnArcError("input is not an arc")
    return _extension_points(ps, _arc_admits, budget)


def extend_cap(ps: PointSet, budget: int = DEFAULT_BUDGET) -> list[Subspace]:
    if not is_cap(ps):
        raise NotACapError("input is not a cap")
    return _extension_points(ps, _cap_admits, budget)


def _complete_direct(ps: PointSet, admissible, budget: int) -> bool:
    existing = {p.canons for p in ps.points}
    for cand in enumerate_points(ps.ambient, ps.ring, budget):
        if cand.canons in existing:
            continue
        if admissible(ps, cand):
            return False
    return True


def is_complete_arc(ps: PointSet, budget: int = DEFAULT_BUDGET) -> bool:
    """No point extends the arc.

    Computed both directly and through the component projections (complete
    iff some residue-field image is complete); the two answers are required
    to agree.
    """
    if not is_arc(ps):
        raise NotAnArcError("input is not an arc")
    direct = _complete_direct(ps, _arc_admits, budget)
    by_projection = any(
        _complete_direct(project_point_set(ps, i), _arc_admits, budget)
        for i in range(ps.ring.ell)
    )
    if direct != by_projection:
        raise AssertionError("completeness criteria disagree; this is a bug")
    return direct


def is_complete_cap(ps: PointSet, budget: int = DEFAULT_BUDGET) -> bool:
    if not is_cap(ps):
        raise NotACapError("input is not a cap")
    direct = _complete_direct(ps, _cap_admits, budget)
    by_projection = any(
        _complete_direct(project_point_set(ps, i), _cap_admits, budget)
        for i in range(ps.ring.ell)
    )
    if direct != by_projection:
        raise AssertionError("completeness criteria disagree; this is a bug")
    return direct


# -- known maximum sizes -------------------------------------------------------


def _field_arc_rows(n: int, qs: Sequence[int]) -> list[int]:
    """Applicable table rows for the maximum arc size, by global conditions."""
    vals = []
    if n == 2:
        vals.append(min(q + 1 for q in qs))
    if n == 3:
        vals.append(min(q + (3 + (-1) ** q) // 2 for q in qs))
    if n == 4 and all(q > 3 for q in qs):
        vals.append(min(q + 1 for q in qs))
    if n == 5 and all(q >= 5 for q in qs):
        vals.append(min(q + 1 for q in qs))
    if n >= 3 and all(q <= n for q in qs):
        vals.append(n + 1)
    return vals


def _field_cap_rows(n: int, qs: Sequence[int]) -> list[int]:
    vals = []
    if n >= 3 and all(q == 2 for q in qs):
        vals.append(2 ** (n - 1))
    if n == 3:
        vals.append(min(q + (3 + (-1) ** q) // 2 for q in qs))
    if n == 4 and all(q > 2 for q in qs):
        vals.append(min(q * q + 1 for q in qs))
    if n == 5 and all(q == 3 for q in qs):
        vals.append(20)
    if n == 6 and all(q == 3 for q in qs):
        vals.append(56)
    if n == 5 and all(q == 4 for q in qs):
        vals.append(41)
    return vals


def max_arc_size_formula(n: int, ring: Ring) -> int | None:
    """Known maximum arc size in R^n, or None outside the table's validity.

    The size over R is the minimum of the residue-field values; each table
    row applies only under its stated condition on all component fields.
    """
    if n < 2:
        raise ShapeMismatchError("arcs need ambient dimension >= 2")
    vals = _field_arc_rows(n, [c.prime for c in ring.components])
    if not vals:
        return None
    assert len(set(vals)) == 1, "table rows must agree where they overlap"
    return vals[0]


def max_cap_size_formula(n: int, ring: Ring) -> int | None:
    """Known maximum cap size in R^n, or None outside the table's validity."""
    if n < 3:
        raise ShapeMismatchError("caps need ambient dimension >= 3")
    vals = _field_cap_rows(n, [c.prime for c in ring.components])
    if not vals:
        return None
    assert len(set(vals)) == 1, "table rows must agree where they overlap"
    return vals[0]


# -- exact search ----------------------------------------------------------------


def _point(ring: Ring, row: Sequence[int]) -> Subspace:
    return Subspace.from_matrix(Matrix.from_entries(ring, [list(row)]))


def _search(
    base: list[Subspace],
    candidates: list[Subspace],
    admissible,
    ring: Ring,
    n: int,
    budget: int,
) -> list[Subspace]:
    """Exhaustive depth-first search for a maximum admissible superset of base.

    Candidates are consumed in canonical order, so the first maximum found
    is deterministic.  Budget counts search nodes.
    """
    best = list(base)
    nodes = [0]

    def dfs(current: list[Subspace], cands: list[Subspace]) -> None:
        nonlocal best
        nodes[0] += 1
        if nodes[0] > budget:
            raise BudgetExceededError("search budget exhausted")
        if len(current) > len(best):
            best = list(current)
        for i, cand in enumerate(cands):
            ps = PointSet(ring, n, tuple(current))
            if admissible(ps, cand):
                rest = cands[i + 1 :]
                dfs(current + [cand], rest)

    dfs(base, candidates)
    return best


def search_max_arc(
    n: int, ring: Ring, budget: int = 10**7
) -> PointSet:
    """A maximum arc of R^n found by exhaustive symmetry-reduced search.

    Any arc larger than n points can be carried by a change of basis onto
    one containing the n coordinate points and the all-ones point, and arcs
    of at most n points always extend, so the search pins that frame and
    only chooses the remaining points.  The result is therefore a true
    maximum, not a heuristic.
    """
    if n < 2:
        raise ShapeMismatchError("arcs need ambient dimension >= 2")
    frame = [
        _point(ring, [1 if j == i else 0 for j in range(n)]) for i in range(n)
    ]
    ones = _point(ring, [1] * n)
    base = frame + [ones]
    base_set = PointSet.of(ring, n, base)
    assert is_arc(base_set)
    pinned = {p.canons for p in base}
    candidates = [
        c
        for c in enumerate_points(n, ring, budget)
        if c.canons not in pinned and _arc_admits(base_set, c)
    ]
    best = _search(list(base_set.points), candidates, _arc_admits, ring, n, budget)
    return PointSet.of(ring, n, best)


def search_max_cap(
    n: int, ring: Ring, budget: int = 10**7
) -> PointSet:
    """A maximum cap of R^n by exhaustive search with the first 3 points pinned.

    Any cap of 3 or more points can be carried onto one containing the
    first three coordinate points, and {e1, e2, e3} is itself a cap, so
    pinning them preserves the maximum size.
    """
    if n < 3:
        raise ShapeMismatchError("caps need ambient dimension >= 3")
    base = [
        _point(ring, [1 if j == i else 0 for j in range(n)]) for i in range(3)
    ]
    base_set = PointSet.of(ring, n, base)
    assert is_cap(base_set)
    pinned = {p.canons for p in base}
    candidates = [
        c
        for c in enumerate_points(n, ring, budget)
        if c.canons not in pinned and _cap_admits(base_set, c)
    ]
    best = _search(list(base_set.points), candidates, _cap_admits, ring, n, budget)
    return PointSet.of(ring, n, best)
