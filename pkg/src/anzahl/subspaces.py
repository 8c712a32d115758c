"""Subspaces of F_q^n in reduced row echelon form.

Vectors are handled internally as tuples of element *codes* (see
:mod:`anzahl.field`); the public ``Subspace.basis`` view converts them to
:class:`~anzahl.field.FieldElement` values.

Enumeration walks the Schubert cells: pivot profiles in lexicographic order,
and inside each profile the free entries in lexicographic order.  A profile
with ``f`` free entries contributes ``q**f`` subspaces, so work can be split
between processes by handing each one a disjoint set of profiles.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DimensionMismatch, MixedFields
from .field import FieldDescriptor, FieldElement

Row = tuple[int, ...]


def _to_code_rows(vectors, n: int, field: FieldDescriptor | None):
    rows = []
    for v in vectors:
        v = tuple(v)
        if len(v) != n:
            raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {n}")
        codes = []
        for x in v:
            if isinstance(x, FieldElement):
                if field is None:
                    field = x.field
                elif x.field != field:
                    raise MixedFields(f"{x.field} entry in a {field} vector")
                codes.append(x.code)
            else:
                codes.append(int(x))
        rows.append(tuple(codes))
    if field is None:
        raise ValueError("field must be given when no FieldElement entries are present")
    return rows, field


def rref(rows: Iterable[Sequence[int]], n: int, field: FieldDescriptor) -> tuple[tuple[Row, ...], tuple[int, ...]]:
    """Reduced row echelon form of code rows; returns ``(nonzero rows, pivots)``."""
    add, mul, neg, inv = field.add_table, field.mul_table, field.neg_table, field.inv_table
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(n):
        if r == len(m):
            break
        pr = next((t for t in range(r, len(m)) if m[t][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        lead = m[r][c]
        if lead != 1:
            s = inv[lead]
            mul_s = mul[s]
            m[r] = [mul_s[x] for x in m[r]]
        prow = m[r]
        for t in range(len(m)):
            if t != r and m[t][c]:
                mul_f = mul[neg[m[t][c]]]
                m[t] = [add[a][mul_f[b]] for a, b in zip(m[t], prow)]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in m[:r]), tuple(pivots)


def rank(rows: Iterable[Sequence[int]], n: int, field: FieldDescriptor) -> int:
    return len(rref(rows, n, field)[1])


def null_space(rows: Iterable[Sequence[int]], n: int, field: FieldDescriptor) -> list[Row]:
    """Basis of ``{x : sum_t row[t] * x[t] == 0 for every row}``."""
    red, pivots = rref(rows, n, field)
    neg = field.neg_table
    pivot_set = set(pivots)
    basis = []
    for f in range(n):
        if f in pivot_set:
            continue
        x = [0] * n
        x[f] = 1
        for row, pc in zip(red, pivots):
            x[pc] = neg[row[f]]
        basis.append(tuple(x))
    return basis


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``field**ambient_dim`` stored by its canonical RREF basis.

    Two ``Subspace`` values are equal exactly when they span the same set.
    """

    field: FieldDescriptor
    ambient_dim: int
    rows: tuple[Row, ...]
    pivot_columns: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def basis(self) -> tuple[tuple[FieldElement, ...], ...]:
        return tuple(tuple(self.field.from_code(c) for c in row) for row in self.rows)

    def vectors(self) -> Iterator[Row]:
        """Every vector of the subspace (q**dim of them), as code tuples."""
        add, mul = self.field.add_table, self.field.mul_table
        for coeffs in itertools.product(range(self.field.order), repeat=self.dim):
            v = [0] * self.ambient_dim
            for c, row in zip(coeffs, self.rows):
                if c:
                    mc = mul[c]
                    v = [add[a][mc[b]] for a, b in zip(v, row)]
            yield tuple(v)

    def contains(self, vector: Sequence[int]) -> bool:
        return rank(self.rows + (tuple(vector),), self.ambient_dim, self.field) == self.dim

    def issubspace(self, other: Subspace) -> bool:
        _check_compatible(self, other)
        return all(other.contains(r) for r in self.rows)

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, n={self.ambient_dim}, {self.field}, rows={self.rows})"


def _from_rows(rows, n: int, field: FieldDescriptor) -> Subspace:
    red, pivots = rref(rows, n, field)
    return Subspace(field, n, red, pivots)


def echelonize(vectors: Iterable[Sequence], ambient_dim: int, field: FieldDescriptor | None = None) -> Subspace:
    """Canonical form of the span of ``vectors``.

    Entries may be FieldElement values or integer element codes; with only
    integer entries (or no vectors at all) ``field`` must be given.
    """
    rows, field = _to_code_rows(vectors, ambient_dim, field)
    return _from_rows(rows, ambient_dim, field)


def zero_space(n: int, field: FieldDescriptor) -> Subspace:
    return Subspace(field, n, (), ())


def full_space(n: int, field: FieldDescriptor) -> Subspace:
    rows = tuple(tuple(1 if c == r else 0 for c in range(n)) for r in range(n))
    return Subspace(field, n, rows, tuple(range(n)))


def pivot_profiles(n: int, j: int) -> list[tuple[int, ...]]:
    """Pivot-column profiles of j-spaces of F^n in enumeration order."""
    return list(itertools.combinations(range(n), j))


def cell_size(profile: Sequence[int], n: int, q: int) -> int:
    """Number of subspaces with the given pivot profile."""
    pset = set(profile)
    free = sum(1 for r, p in enumerate(profile) for c in range(p + 1, n) if c not in pset)
    return q**free


def enumerate_subspaces(
    n: int,
    j: int,
    field: FieldDescriptor,
    profiles: Iterable[Sequence[int]] | None = None,
) -> Iterator[Subspace]:
    """Yield every j-subspace of ``field**n`` exactly once, in a fixed order.

    ``profiles`` restricts the walk to the given pivot profiles (used for
    splitting the enumeration between workers).
    """
    if not 0 <= j <= n:
        return
    q = field.order
    if profiles is None:
        profiles = itertools.combinations(range(n), j)
    for profile in profiles:
        pset = set(profile)
        slots = [(r, c) for r, p in enumerate(profile) for c in range(p + 1, n) if c not in pset]
        base = [[0] * n for _ in profile]
        for r, p in enumerate(profile):
            base[r][p] = 1
        for values in itertools.product(range(q), repeat=len(slots)):
            rows = [list(b) for b in base]
            for (r, c), v in zip(slots, values):
                rows[r][c] = v
            yield Subspace(field, n, tuple(tuple(r) for r in rows), tuple(profile))


def _check_compatible(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch(f"ambient dimensions {a.ambient_dim} and {b.ambient_dim} differ")
    if a.field != b.field:
        raise MixedFields(f"subspaces over {a.field} and {b.field}")


def span_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_compatible(a, b)
    return _from_rows(a.rows + b.rows, a.ambient_dim, a.field)


def intersection(a: Subspace, b: Subspace) -> Subspace:
    """a ∩ b, computed as the annihilator of ann(a) + ann(b)."""
    _check_compatible(a, b)
    n, f = a.ambient_dim, a.field
    ann = null_space(a.rows, n, f) + null_space(b.rows, n, f)
    return _from_rows(null_space(ann, n, f), n, f)


def lattice(a: Subspace, b: Subspace, op: str) -> Subspace:
    """``op`` is "span_sum" (the span ⟨a, b⟩) or "intersection"."""
    if op == "span_sum":
        return span_sum(a, b)
    if op == "intersection":
        return intersection(a, b)
    raise ValueError(f"unknown lattice operation {op!r}")


def enumerate_superspaces(pi: Subspace, k: int) -> Iterator[Subspace]:
    """Yield every k-space containing ``pi`` exactly once.

    The standard basis vectors at the non-pivot columns of ``pi`` span a
    complement of ``pi``; the superspaces correspond bijectively to the
    (k - dim pi)-subspaces of that complement.
    """
    n, f, j = pi.ambient_dim, pi.field, pi.dim
    if not j <= k <= n:
        return
    free_cols = [c for c in range(n) if c not in set(pi.pivot_columns)]
    for w in enumerate_subspaces(n - j, k - j, f):
        lifted = []
        for row in w.rows:
            v = [0] * n
            for t, c in enumerate(free_cols):
                v[c] = row[t]
            lifted.append(tuple(v))
        yield _from_rows(pi.rows + tuple(lifted), n, f)
