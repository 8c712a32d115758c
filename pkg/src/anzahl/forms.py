"""Symplectic and hermitian forms given by Gram matrices.

For a Gram matrix ``G`` the form is ``f(u, v) = u G v^θ``, where ``θ`` is the
identity for symplectic forms and entrywise conjugation x -> x**sqrt(q) for
hermitian ones.  Hermitian forms therefore live over a field of square order:
the hermitian geometry with base parameter q uses GF(q**2).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import DegenerateForm, DimensionMismatch, OddSymplecticDimension, OrderNotSquare
from .field import FieldDescriptor, FieldElement
from .subspaces import Subspace, _from_rows, intersection, null_space, rank

SYMPLECTIC = "symplectic"
HERMITIAN = "hermitian"
KINDS = (SYMPLECTIC, HERMITIAN)


@dataclass(frozen=True)
class SubspaceClass:
    dim: int
    singularity_index: int

    def __post_init__(self):
        if not 0 <= self.singularity_index <= self.dim:
            raise ValueError(f"singularity index {self.singularity_index} outside [0, {self.dim}]")

    @property
    def non_singular(self) -> bool:
        return self.singularity_index == 0

    @property
    def totally_isotropic(self) -> bool:
        return self.singularity_index == self.dim


@dataclass(frozen=True)
class Form:
    kind: str
    field: FieldDescriptor
    gram: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown form kind {self.kind!r}")
        n = len(self.gram)
        if any(len(row) != n for row in self.gram):
            raise DimensionMismatch("Gram matrix must be square")
        f = self.field
        if self.kind == SYMPLECTIC:
            for r in range(n):
                if self.gram[r][r] != 0:
                    raise ValueError("symplectic Gram matrix needs a zero diagonal")
                for c in range(n):
                    if self.gram[r][c] != f.neg(self.gram[c][r]):
                        raise ValueError("symplectic Gram matrix must be antisymmetric")
        else:
            if not f.is_square_order:
                raise OrderNotSquare(f"hermitian forms need a square field order, got {f}")
            for r in range(n):
                for c in range(n):
                    if self.gram[r][c] != f.conj(self.gram[c][r]):
                        raise ValueError("hermitian Gram matrix must equal its conjugate transpose")

    @property
    def ambient_dim(self) -> int:
        return len(self.gram)

    @cached_property
    def nondegenerate(self) -> bool:
        return rank(self.gram, self.ambient_dim, self.field) == self.ambient_dim

    def _theta(self, code: int) -> int:
        return self.field.conj(code) if self.kind == HERMITIAN else code

    def _pair(self, u: Sequence[int], v: Sequence[int]) -> int:
        add, mul = self.field.add_table, self.field.mul_table
        gv = self._gram_times_theta(v)
        acc = 0
        for a, b in zip(u, gv):
            acc = add[acc][mul[a][b]]
        return acc

    def _gram_times_theta(self, v: Sequence[int]) -> list[int]:
        """The column ``G v^θ``; x is orthogonal to v iff x · (G v^θ) = 0."""
        add, mul = self.field.add_table, self.field.mul_table
        tv = [self._theta(x) for x in v]
        out = []
        for row in self.gram:
            acc = 0
            for g, x in zip(row, tv):
                if g and x:
                    acc = add[acc][mul[g][x]]
            out.append(acc)
        return out

    def _codes(self, v) -> tuple[int, ...]:
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} for a form on dimension {self.ambient_dim}")
        return tuple(x.code if isinstance(x, FieldElement) else int(x) for x in v)

    def evaluate(self, u, v) -> FieldElement:
        """f(u, v); vectors may hold FieldElement values or element codes."""
        return self.field.from_code(self._pair(self._codes(u), self._codes(v)))

    def gram_of(self, rows: Sequence[Sequence[int]]) -> list[list[int]]:
        """The matrix ``[f(r_a, r_b)]`` for the given code rows."""
        cols = [self._gram_times_theta(r) for r in rows]
        add, mul = self.field.add_table, self.field.mul_table
        out = []
        for u in rows:
            line = []
            for gv in cols:
                acc = 0
                for a, b in zip(u, gv):
                    if a and b:
                        acc = add[acc][mul[a][b]]
                line.append(acc)
            out.append(line)
        return out


def standard_form(kind: str, n: int, field: FieldDescriptor) -> Form:
    """The fixed non-degenerate model of each kind.

    Symplectic: hyperbolic pairs (e1, e2), (e3, e4), ... with f(e_{2t-1}, e_{2t}) = 1.
    Hermitian: the identity Gram matrix, f(v, w) = sum v_i * conj(w_i).
    """
    if kind == SYMPLECTIC:
        if n % 2:
            raise OddSymplecticDimension(f"no non-degenerate alternating form in odd dimension {n}")
        minus_one = field.neg(1)
        gram = [[0] * n for _ in range(n)]
        for t in range(0, n, 2):
            gram[t][t + 1] = 1
            gram[t + 1][t] = minus_one
    elif kind == HERMITIAN:
        if not field.is_square_order:
            raise OrderNotSquare(f"hermitian forms need a square field order, got {field}")
        gram = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
    else:
        raise ValueError(f"unknown form kind {kind!r}")
    return Form(kind, field, tuple(tuple(r) for r in gram))


def _require_nondegenerate(form: Form) -> None:
    if not form.nondegenerate:
        raise DegenerateForm("polarity needs a non-degenerate form")


def _check_space(form: Form, pi: Subspace) -> None:
    if pi.ambient_dim != form.ambient_dim:
        raise DimensionMismatch(f"{pi.ambient_dim}-dimensional ambient space for a form on {form.ambient_dim}")


def perp(form: Form, pi: Subspace) -> Subspace:
    """π^⊥ = {x : f(x, y) = 0 for all y in π}."""
    _require_nondegenerate(form)
    _check_space(form, pi)
    cols = [form._gram_times_theta(r) for r in pi.rows]
    return _from_rows(null_space(cols, form.ambient_dim, form.field), form.ambient_dim, form.field)


def radical(form: Form, pi: Subspace) -> Subspace:
    """Radical of f restricted to π, i.e. π ∩ π^⊥."""
    return intersection(pi, perp(form, pi))


def classify(form: Form, pi: Subspace) -> SubspaceClass:
    return SubspaceClass(pi.dim, radical(form, pi).dim)


def radical_dim_by_gram(form: Form, pi: Subspace) -> int:
    """dim π minus the rank of the restricted Gram matrix B G B^θᵀ."""
    _check_space(form, pi)
    return pi.dim - rank(form.gram_of(pi.rows), pi.dim, form.field)


def is_non_singular(form: Form, pi: Subspace) -> bool:
    return radical(form, pi).dim == 0
