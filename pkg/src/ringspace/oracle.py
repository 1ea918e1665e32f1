"""Brute-force enumeration oracles.

Everything here recounts objects by direct enumeration so the closed
formulas in ``counting`` can be checked against an independent route.  The
enumerators never consult the formulas; they grow subspaces one dimension at
a time and deduplicate by canonical form.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from . import zps
from .counting import (
    count_full_rank,
    count_gl,
    count_mt_subspaces,
    count_subspaces,
    count_subspaces_in,
    count_subspaces_over,
)
from .errors import BudgetExceededError
from .matrix import Matrix, mccoy_rank, mccoy_rank_oracle
from .ring import Ring
from .singular import SingularSpace, type_of
from .subspace import Subspace

DEFAULT_BUDGET = 10**6


class _Budget:
    __slots__ = ("left",)

    def __init__(self, limit: int):
        self.left = limit

    def spend(self, amount: int = 1) -> None:
        self.left -= amount
        if self.left < 0:
            raise BudgetExceededError("enumeration budget exhausted")


def iter_vectors(n: int, ring: Ring) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All |R|^n vectors of R^n, one residue row per component."""
    spaces = [
        itertools.product(range(c.order), repeat=n) for c in ring.components
    ]
    return itertools.product(*spaces)


def _is_unimodular_vector(rows: Sequence[Sequence[int]], ring: Ring) -> bool:
    return all(
        any(x % c.prime for x in row) for row, c in zip(rows, ring.components)
    )


def point_sort_key(p: Subspace):
    return tuple(
        tuple(c[0][j] for c in p.canons) for j in range(p.ambient)
    )


def enumerate_points(n: int, ring: Ring, budget: int = DEFAULT_BUDGET) -> list[Subspace]:
    """All 1-subspaces of R^n, sorted by canonical representative."""
    tick = _Budget(budget)
    seen: dict[tuple, Subspace] = {}
    for rows in iter_vectors(n, ring):
        tick.spend()
        if not _is_unimodular_vector(rows, ring):
            continue
        canons = []
        pivots = []
        for row, comp in zip(rows, ring.components):
            canon, piv = zps.rref_unit((row,), n, comp.prime, comp.order)
            canons.append(canon)
            pivots.append(piv)
        key = tuple(canons)
        if key not in seen:
            seen[key] = Subspace(ring, n, 1, key, tuple(pivots))
    return sorted(seen.values(), key=point_sort_key)


def extend_subspace(sub: Subspace, pt: Subspace) -> Subspace | None:
    """Join with a point when the result is free of one higher dimension."""
    ring = sub.ring
    n = sub.ambient
    reduced = []
    for canon, piv, ptc, comp in zip(sub.canons, sub.pivots, pt.canons, ring.components):
        red = zps.reduce_against(ptc[0], canon, piv, comp.order)
        if not any(x % comp.prime for x in red):
            return None  # residue rank would not grow in this component
        reduced.append(red)
    canons = []
    pivots = []
    for canon, red, comp in zip(sub.canons, reduced, ring.components):
        rows, piv = zps.rref_unit(canon + (tuple(red),), n, comp.prime, comp.order)
        canons.append(rows)
        pivots.append(piv)
    return Subspace(ring, n, sub.dim + 1, tuple(canons), tuple(pivots))


def enumerate_subspaces(
    m: int, n: int, ring: Ring, budget: int = DEFAULT_BUDGET
) -> list[Subspace]:
    """All m-subspaces of R^n by depth-one extension from (m-1)-subspaces."""
    if m < 0 or m > n:
        return []
    current = [Subspace.zero(ring, n)]
    if m == 0:
        return current
    tick = _Budget(budget)
    points = enumerate_points(n, ring, budget)
    for _ in range(m):
        nxt: dict[tuple, Subspace] = {}
        for sub in current:
            for pt in points:
                tick.spend()
                grown = extend_subspace(sub, pt)
                if grown is not None and grown.canons not in nxt:
                    nxt[grown.canons] = grown
        current = list(nxt.values())
    return sorted(current, key=lambda s: s.canons)


def enumerate_mt_subspaces(
    m: int, t: int, n: int, k: int, ring: Ring, budget: int = DEFAULT_BUDGET
) -> list[Subspace]:
    """All (m, t)-subspaces of the singular space R^{n+k}."""
    space = SingularSpace(ring, n, k)
    out = []
    for sub in enumerate_subspaces(m, n + k, ring, budget):
        tp = type_of(sub, space)
        if tp.typed and tp.t == t:
            out.append(sub)
    return out


def count_full_rank_enumerated(
    m: int, n: int, ring: Ring, budget: int = DEFAULT_BUDGET
) -> int:
    """Count full-McCoy-rank m x n matrices by scanning all of them."""
    if m < 0 or n < 0 or m > n:
        return 0
    if m == 0:
        return 1
    tick = _Budget(budget)
    spaces = [
        itertools.product(range(c.order), repeat=m * n) for c in ring.components
    ]
    total = 0
    for flat in itertools.product(*spaces):
        tick.spend()
        ok = True
        for comp_flat, c in zip(flat, ring.components):
            rows = [comp_flat[i * n : (i + 1) * n] for i in range(m)]
            if zps.rank_mod_p(rows, n, c.prime) != m:
                ok = False
                break
        if ok:
            total += 1
    return total


def brute_force_dim(gens: Matrix, budget: int = DEFAULT_BUDGET) -> int:
    """Dimension of the module spanned by the rows of ``gens``, by definition.

    Enumerates the whole span, then searches for the largest family of
    unimodular vectors whose stack has full McCoy rank.
    """
    ring = gens.ring
    n = gens.cols
    tick = _Budget(budget)
    span: set[tuple] = set()
    for coeffs in iter_vectors(gens.rows, ring):
        tick.spend()
        vec = []
        for comp_rows, crow, comp in zip(gens.comps, coeffs, ring.components):
            pe = comp.order
            row = tuple(
                sum(c * comp_rows[i][j] for i, c in enumerate(crow)) % pe
                for j in range(n)
            )
            vec.append(row)
        span.add(tuple(vec))
    candidates = [v for v in span if _is_unimodular_vector(v, ring)]
    for k in range(min(n, len(candidates)), 0, -1):
        for family in itertools.combinations(candidates, k):
            tick.spend()
            comps = tuple(
                tuple(v[ci] for v in family) for ci in range(ring.ell)
            )
            if mccoy_rank(Matrix(ring, k, n, comps)) == k:
                return k
    return 0


# -- verification harness -----------------------------------------------------


@dataclass(frozen=True, slots=True)
class EnumerationReport:
    query: str
    formula_value: int
    enumerated_value: int
    match: bool
    elapsed: float


@dataclass(frozen=True, slots=True)
class SuiteItem:
    query: str
    formula: Callable[[], int]
    enumerate: Callable[[], int]


def _census_items(rings: dict[str, Ring], max_n: int) -> list[SuiteItem]:
    items = []
    for name, ring in rings.items():
        for n in range(max_n + 1):
            for m in range(n + 1):
                items.append(
                    SuiteItem(
                        f"subspaces m={m} n={n} over {name}",
                        (lambda m=m, n=n, r=ring: count_subspaces(m, n, r)),
                        (
                            lambda m=m, n=n, r=ring: len(
                                enumerate_subspaces(m, n, r)
                            )
                        ),
                    )
                )
    return items


def _rings(names: Sequence[str]) -> dict[str, Ring]:
    from .ring import parse_ring

    return {name: parse_ring(name) for name in names}


def counts_suite() -> list[SuiteItem]:
    rings = _rings(["Z2", "Z3", "Z4", "Z6", "Z8", "Z9", "Z2xZ2", "Z12"])
    items = _census_items(rings, 3)
    small = _rings(["Z4", "Z6"])
    for name, ring in small.items():
        for n in range(4):
            for m in range(n + 1):
                for m1 in range(m + 1):
                    items.append(
                        SuiteItem(
                            f"subspaces m1={m1} inside m={m} n={n} over {name}",
                            (
                                lambda m1=m1, m=m, n=n, r=ring: count_subspaces_in(
                                    m1, m, n, r
                                )
                            ),
                            (
                                lambda m1=m1, m=m, n=n, r=ring: _count_inside(
                                    m1, m, n, r
                                )
                            ),
                        )
                    )
                    items.append(
                        SuiteItem(
                            f"subspaces m={m} over m1={m1} n={n} in {name}",
                            (
                                lambda m1=m1, m=m, n=n, r=ring: count_subspaces_over(
                                    m1, m, n, r
                                )
                            ),
                            (
                                lambda m1=m1, m=m, n=n, r=ring: _count_over(
                                    m1, m, n, r
                                )
                            ),
                        )
                    )
        for mn in [(1, 1), (1, 2), (2, 2)]:
            m, n = mn
            items.append(
                SuiteItem(
                    f"full-rank {m}x{n} matrices over {name}",
                    (lambda m=m, n=n, r=ring: count_full_rank(m, n, r)),
                    (lambda m=m, n=n, r=ring: count_full_rank_enumerated(m, n, r)),
                )
            )
        items.append(
            SuiteItem(
                f"GL_2 over {name}",
                (lambda r=ring: count_gl(2, r)),
                (lambda r=ring: count_full_rank_enumerated(2, 2, r)),
            )
        )
    z2 = _rings(["Z2"])["Z2"]
    for m, n in [(1, 3), (2, 3), (3, 3)]:
        items.append(
            SuiteItem(
                f"full-rank {m}x{n} matrices over Z2",
                (lambda m=m, n=n: count_full_rank(m, n, z2)),
                (lambda m=m, n=n: count_full_rank_enumerated(m, n, z2)),
            )
        )
    for name, ring in _rings(["Z2", "Z4"]).items():
        for n in range(0, 3):
            for k in range(1, 3 - n + 1):
                for m in range(n + k + 1):
                    for t in range(min(m, k) + 1):
                        items.append(
                            SuiteItem(
                                f"({m},{t})-subspaces of {name}^({n}+{k})",
                                (
                                    lambda m=m, t=t, n=n, k=k, r=ring: count_mt_subspaces(
                                        m, t, n, k, r
                                    )
                                ),
                                (
                                    lambda m=m, t=t, n=n, k=k, r=ring: len(
                                        enumerate_mt_subspaces(m, t, n, k, r)
                                    )
                                ),
                            )
                        )
    return items


def _count_inside(m1: int, m: int, n: int, ring: Ring) -> int:
    subs = enumerate_subspaces(m, n, ring)
    if not subs:
        return 0
    fixed = subs[0]
    return sum(1 for s in enumerate_subspaces(m1, n, ring) if fixed.contains(s))


def _count_over(m1: int, m: int, n: int, ring: Ring) -> int:
    subs = enumerate_subspaces(m1, n, ring)
    if not subs:
        return 0
    fixed = subs[0]
    return sum(1 for s in enumerate_subspaces(m, n, ring) if s.contains(fixed))


def algebra_suite() -> list[SuiteItem]:
    from .matrix import completion, extend_to_basis, right_inverse
    from .subspace import dimension_formula_status, dual

    rings = _rings(["Z4", "Z6"])

    def rank_agreement(ring: Ring) -> int:
        agree = 0
        for rows in iter_vectors(4, ring):
            comps = tuple((r[:2], r[2:]) for r in rows)
            a = Matrix(ring, 2, 2, comps)
            if mccoy_rank(a) == mccoy_rank_oracle(a):
                agree += 1
        return agree

    def completion_sweep(ring: Ring) -> int:
        ok = 0
        eye = Matrix.identity(ring, 2)
        for rows in iter_vectors(4, ring):
            comps = tuple((r[:2], r[2:]) for r in rows)
            a = Matrix(ring, 2, 2, comps)
            if mccoy_rank(a) != 2:
                ok += 1  # vacuously fine; counted to keep totals aligned
                continue
            s = completion(a)
            good = a.mul(s).comps == eye.comps
            good = good and a.mul(right_inverse(a)).comps == eye.comps
            # square case: extending a basis of R^2 returns the matrix itself
            good = good and extend_to_basis(a).comps == a.comps
            if good:
                ok += 1
        return ok

    def dim_formula_sweep(ring: Ring) -> int:
        subs = []
        for m in range(3):
            subs.extend(enumerate_subspaces(m, 2, ring))
        ok = 0
        for a in subs:
            for b in subs:
                # returning at all certifies the three-way equivalence;
                # the status function asserts it internally
                dimension_formula_status(a, b)
                ok += 1
        return ok

    def dual_sweep(ring: Ring) -> int:
        ok = 0
        for m in range(3):
            for s in enumerate_subspaces(m, 2, ring):
                d = dual(s)
                if d.dim == 2 - s.dim and dual(d) == s:
                    ok += 1
        return ok

    items = []
    for name, ring in rings.items():
        total = ring.order**4
        items.append(
            SuiteItem(
                f"mccoy rank formula vs oracle, all 2x2 over {name}",
                (lambda t=total: t),
                (lambda r=ring: rank_agreement(r)),
            )
        )
        items.append(
            SuiteItem(
                f"completion postconditions, all 2x2 over {name}",
                (lambda t=total: t),
                (lambda r=ring: completion_sweep(r)),
            )
        )
        subs_total = (1 + count_subspaces(1, 2, ring) + 1) ** 2
        items.append(
            SuiteItem(
                f"dimension formula three-way equivalence, {name}^2 pairs",
                (lambda t=subs_total: t),
                (lambda r=ring: dim_formula_sweep(r)),
            )
        )
        items.append(
            SuiteItem(
                f"duality involution and dimension, {name}^2",
                (lambda r=ring: 2 + count_subspaces(1, 2, r)),
                (lambda r=ring: dual_sweep(r)),
            )
        )
    return items


def geometry_suite() -> list[SuiteItem]:
    from .geometry import (
        max_arc_size_formula,
        max_cap_size_formula,
        search_max_arc,
        search_max_cap,
    )

    items = []
    for name, n in [("Z4", 2), ("Z6", 2), ("Z4", 3), ("Z6", 3)]:
        ring = _rings([name])[name]
        items.append(
            SuiteItem(
                f"maximum arc size in {name}^{n}",
                (lambda n=n, r=ring: max_arc_size_formula(n, r)),
                (lambda n=n, r=ring: len(search_max_arc(n, r).points)),
            )
        )
    for name, n in [("Z4", 3), ("Z6", 3), ("Z2", 4)]:
        ring = _rings([name])[name]
        items.append(
            SuiteItem(
                f"maximum cap size in {name}^{n}",
                (lambda n=n, r=ring: max_cap_size_formula(n, r)),
                (lambda n=n, r=ring: len(search_max_cap(n, r).points)),
            )
        )
    return items


SUITES: dict[str, Callable[[], list[SuiteItem]]] = {
    "counts": counts_suite,
    "algebra": algebra_suite,
    "geometry": geometry_suite,
}


def verify_counts(
    suite: str = "default", items: Sequence[SuiteItem] | None = None
) -> list[EnumerationReport]:
    """Run formula-vs-enumeration checks; every report should match.

    ``items`` overrides the named suite, which makes the harness itself
    testable against deliberately wrong formulas.
    """
    if items is None:
        if suite == "default":
            items = counts_suite() + algebra_suite() + geometry_suite()
        elif suite in SUITES:
            items = SUITES[suite]()
        else:
            raise ValueError(f"unknown suite {suite!r}")
    reports = []
    for item in items:
        start = time.perf_counter()
        formula = item.formula()
        enumerated = item.enumerate()
        elapsed = time.perf_counter() - start
        reports.append(
            EnumerationReport(
                item.query, formula, enumerated, formula == enumerated, elapsed
            )
        )
    return reports
