"""Matrices over a product ring and their rank theory.

A Matrix keeps one integer matrix per ring component (the image under each
projection), which makes componentwise algorithms direct.  Entries are
reassembled into Element tuples on demand.

The rank used throughout is the McCoy rank: the largest k such that the
ideal of k x k minors has trivial annihilator.  Over Z_{p^s} it equals the
rank of the matrix reduced mod p, and over a product it is the minimum over
components; ``mccoy_rank`` uses that reduction while ``mccoy_rank_oracle``
checks the definition literally (all minors, all annihilator candidates).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import zps
from .errors import (
    BudgetExceededError,
    NotFullRankError,
    NotInvertibleError,
    RingMismatchError,
    RingParseError,
    ShapeMismatchError,
)
from .ring import Element, LocalRing, Ring

Rows = tuple[tuple[int, ...], ...]


@dataclass(frozen=True, slots=True)
class ComponentMatrix:
    """Integer matrix over one local component Z_{p^s}."""

    local: LocalRing
    rows: int
    cols: int
    entries: Rows

    def rank_residue(self) -> int:
        return zps.rank_mod_p(self.entries, self.cols, self.local.prime)

    def howell_form(self) -> "ComponentMatrix":
        h = zps.howell(self.entries, self.cols, self.local.prime, self.local.exponent)
        return ComponentMatrix(self.local, len(h), self.cols, h)

    def left_kernel(self) -> "ComponentMatrix":
        k = zps.left_kernel(
            self.entries, self.cols, self.local.prime, self.local.exponent
        )
        return ComponentMatrix(self.local, len(k), self.rows, k)


@dataclass(frozen=True, slots=True)
class Matrix:
    """An m x n matrix over a product ring, stored componentwise."""

    ring: Ring
    rows: int
    cols: int
    comps: tuple[Rows, ...]

    # -- construction --------------------------------------------------------

    @classmethod
    def from_entries(
        cls, ring: Ring, entries: Sequence[Sequence[object]]
    ) -> "Matrix":
        """Build from a nested list of Element, int, or residue-tuple entries."""
        m = len(entries)
        n = len(entries[0]) if m else 0
        comps: list[list[tuple[int, ...]]] = [[] for _ in ring.components]
        for row in entries:
            if len(row) != n:
                raise ShapeMismatchError("ragged rows")
            parts: list[list[int]] = [[] for _ in ring.components]
            for x in row:
                el = _as_element(ring, x)
                for i, r in enumerate(el.residues):
                    parts[i].append(r)
            for i in range(ring.ell):
                comps[i].append(tuple(parts[i]))
        return cls(ring, m, n, tuple(tuple(c) for c in comps))

    @classmethod
    def from_comps(cls, ring: Ring, comps: Sequence[Rows], cols: int) -> "Matrix":
        m = len(comps[0]) if comps else 0
        return cls(ring, m, cols, tuple(tuple(map(tuple, c)) for c in comps))

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "Matrix":
        eye = zps.identity(n)
        return cls(ring, n, n, tuple(eye for _ in ring.components))

    @classmethod
    def zeros(cls, ring: Ring, m: int, n: int) -> "Matrix":
        z = tuple(tuple(0 for _ in range(n)) for _ in range(m))
        return cls(ring, m, n, tuple(z for _ in ring.components))

    # -- views ----------------------------------------------------------------

    def entry(self, i: int, j: int) -> Element:
        return Element(self.ring, tuple(c[i][j] for c in self.comps))

    def to_lists(self) -> list[list[Element]]:
        return [[self.entry(i, j) for j in range(self.cols)] for i in range(self.rows)]

    def row(self, i: int) -> tuple[Element, ...]:
        return tuple(self.entry(i, j) for j in range(self.cols))

    def project(self, i: int) -> ComponentMatrix:
        """Image under the projection onto component i."""
        return ComponentMatrix(
            self.ring.components[i], self.rows, self.cols, self.comps[i]
        )

    def residue(self, i: int) -> ComponentMatrix:
        """Image over the residue field of component i (entries mod p_i)."""
        p = self.ring.components[i].prime
        ent = tuple(tuple(x % p for x in row) for row in self.comps[i])
        return ComponentMatrix(LocalRing(p, 1), self.rows, self.cols, ent)

    # -- arithmetic -------------------------------------------------------------

    def _check_ring(self, other: "Matrix") -> None:
        if self.ring != other.ring:
            raise RingMismatchError("matrices over different rings")

    def mul(self, other: "Matrix") -> "Matrix":
        self._check_ring(other)
        if self.cols != other.rows:
            raise ShapeMismatchError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        if self.cols == 0:
            return Matrix.zeros(self.ring, self.rows, other.cols)
        comps = tuple(
            zps.matmul(a, b, c.order)
            for a, b, c in zip(self.comps, other.comps, self.ring.components)
        )
        return Matrix(self.ring, self.rows, other.cols, comps)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return self.mul(other)

    def transpose(self) -> "Matrix":
        return Matrix(
            self.ring, self.cols, self.rows, tuple(zps.transpose(c) for c in self.comps)
        )

    def stack(self, other: "Matrix") -> "Matrix":
        """Rows of self followed by rows of other."""
        self._check_ring(other)
        if self.cols != other.cols:
            raise ShapeMismatchError("column counts differ")
        comps = tuple(a + b for a, b in zip(self.comps, other.comps))
        return Matrix(self.ring, self.rows + other.rows, self.cols, comps)

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "Matrix":
        comps = tuple(
            tuple(tuple(c[i][j] for j in col_idx) for i in row_idx)
            for c in self.comps
        )
        return Matrix(self.ring, len(row_idx), len(col_idx), comps)


def _as_element(ring: Ring, x: object) -> Element:
    if isinstance(x, Element):
        if x.ring != ring:
            raise RingMismatchError("entry from a different ring")
        return x
    if isinstance(x, bool):
        raise RingParseError("booleans are not ring elements")
    if isinstance(x, int):
        return ring.from_int(x)
    if isinstance(x, (list, tuple)):
        return ring.element(x)
    raise RingParseError(f"cannot interpret {x!r} as a ring element")


# -- McCoy rank ------------------------------------------------------------------


def mccoy_rank(a: Matrix) -> int:
    """McCoy rank, computed as min over components of the mod-p rank."""
    if a.rows == 0 or a.cols == 0:
        return 0
    return min(
        zps.rank_mod_p(c, a.cols, comp.prime)
        for c, comp in zip(a.comps, a.ring.components)
    )


def _det(a: Matrix, idx_rows: Sequence[int], idx_cols: Sequence[int]) -> Element:
    """Exact determinant of a square submatrix by cofactor expansion."""
    k = len(idx_rows)
    parts = []
    for c, comp in zip(a.comps, a.ring.components):
        pe = comp.order
        sub = [[c[i][j] for j in idx_cols] for i in idx_rows]

        def det(mat: list[list[int]]) -> int:
            if not mat:
                return 1
            if len(mat) == 1:
                return mat[0][0] % pe
            total = 0
            for col, x in enumerate(mat[0]):
                if x:
                    minor = [row[:col] + row[col + 1 :] for row in mat[1:]]
                    term = x * det(minor)
                    total = (total - term if col % 2 else total + term) % pe
            return total

        parts.append(det(sub) if k else 1 % pe)
    return Element(a.ring, tuple(parts))


def mccoy_rank_oracle(a: Matrix, max_order: int = 64, max_side: int = 3) -> int:
    """Definitional McCoy rank: largest k whose k x k minors have trivial annihilator.

    Scans every ring element as an annihilator candidate, so it is guarded to
    small rings and narrow matrices.
    """
    ring = a.ring
    if ring.order > max_order or min(a.rows, a.cols) > max_side:
        raise BudgetExceededError("oracle guard: ring or matrix too large")
    nonzero = [x for x in ring.elements() if not x.is_zero()]
    best = 0
    for k in range(1, min(a.rows, a.cols) + 1):
        minors = [
            _det(a, ri, ci)
            for ri in itertools.combinations(range(a.rows), k)
            for ci in itertools.combinations(range(a.cols), k)
        ]
        annihilated = any(
            all((x * mnr).is_zero() for mnr in minors) for x in nonzero
        )
        if annihilated:
            break
        best = k
    return best


def is_unimodular_rows(a: Matrix) -> bool:
    """True when the m rows are linearly independent with unimodular span."""
    if a.rows > a.cols:
        raise ShapeMismatchError("more rows than columns")
    return mccoy_rank(a) == a.rows


# -- constructive transforms ------------------------------------------------------


def completion(a: Matrix) -> Matrix:
    """Invertible S with A*S = (I | 0), for A with unimodular rows."""
    if not is_unimodular_rows(a):
        raise NotFullRankError("rows do not have full McCoy rank")
    comps = tuple(
        zps.completion(c, a.cols, comp.prime, comp.order)
        for c, comp in zip(a.comps, a.ring.components)
    )
    return Matrix(a.ring, a.cols, a.cols, comps)


def right_inverse(a: Matrix) -> Matrix:
    """B with A*B = I, taken as the first m columns of the completion."""
    s = completion(a)
    return s.submatrix(range(a.cols), range(a.rows))


def gl_inverse(a: Matrix) -> Matrix:
    """Inverse of a square matrix of full McCoy rank."""
    if a.rows != a.cols:
        raise ShapeMismatchError("inverse needs a square matrix")
    if mccoy_rank(a) != a.rows:
        raise NotInvertibleError("matrix is not invertible")
    comps = tuple(
        zps.inverse(c, comp.prime, comp.order)
        for c, comp in zip(a.comps, a.ring.components)
    )
    return Matrix(a.ring, a.rows, a.cols, comps)


def extend_to_basis(a: Matrix) -> Matrix:
    """Extend unimodular rows to an invertible n x n matrix.

    The result is the inverse of the completion, whose first m rows equal A
    exactly.
    """
    ext = gl_inverse(completion(a))
    assert all(e[: a.rows] == c for e, c in zip(ext.comps, a.comps))
    return ext


def stack_rows(mats: Iterable[Matrix]) -> Matrix:
    it = iter(mats)
    out = next(it)
    for m in it:
        out = out.stack(m)
    return out
