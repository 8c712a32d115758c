"""Exact arithmetic in GF(p^e) for small prime powers.

Elements are stored as dense coefficient tuples ``(c_0, ..., c_{e-1})`` of a
polynomial over GF(p) reduced modulo a fixed monic irreducible polynomial.
Each element also has an integer *code* ``sum(c_i * p**i)`` in
``range(order)``; the linear-algebra routines in :mod:`anzahl.subspaces` work
on codes with precomputed operation tables.

The modulus for each ``(p, e)`` is the smallest monic irreducible polynomial
when polynomials are ordered by their code ``sum(c_i * p**i)`` over the
non-leading coefficients, i.e. lexicographically on ``(c_{e-1}, ..., c_0)``.
This gives x^2+x+1 for GF(4), x^2+1 for GF(9), x^3+x+1 for GF(8) and
x^4+x+1 for GF(16).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

from .errors import DivisionByZero, MixedFields, NotAPrimePower, OrderNotSquare

# Above this order the descriptor does arithmetic on polynomials directly
# instead of building order x order lookup tables.
TABLE_LIMIT = 256


def _smallest_prime_factor(n: int) -> int:
    if n % 2 == 0:
        return 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return f
        f += 2
    return n


def factor_prime_power(order: int) -> tuple[int, int]:
    """Return ``(p, e)`` with ``order == p**e``; raise NotAPrimePower otherwise."""
    if not isinstance(order, int) or order < 2:
        raise NotAPrimePower(f"{order!r} is not a prime power")
    p = _smallest_prime_factor(order)
    e, rest = 0, order
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise NotAPrimePower(f"{order} is not a prime power")
    return p, e


def is_prime_power(n) -> bool:
    try:
        factor_prime_power(n)
    except NotAPrimePower:
        return False
    return True


# -- polynomials over GF(p) as coefficient lists, lowest degree first ---------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], m: Sequence[int], p: int) -> list[int]:
    a = _trim([x % p for x in a])
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for t, mc in enumerate(m):
            a[shift + t] = (a[shift + t] - c * mc) % p
        _trim(a)
    return a


def _is_irreducible(m: Sequence[int], p: int) -> bool:
    e = len(m) - 1
    if e == 1:
        return True
    # no monic factor of degree <= e/2
    for d in range(1, e // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if _poly_mod(list(m), list(low) + [1], p) == []:
                return False
    return True


def _lowest_irreducible(p: int, e: int) -> tuple[int, ...]:
    for code in range(p**e):
        low = [(code // p**t) % p for t in range(e)]
        m = tuple(low) + (1,)
        if _is_irreducible(m, p):
            return m
    raise AssertionError(f"no irreducible polynomial of degree {e} over GF({p})")


@dataclass(frozen=True)
class FieldDescriptor:
    """GF(characteristic**degree) modulo a fixed monic irreducible ``modulus``.

    ``modulus`` lists coefficients lowest degree first and ends with 1.
    """

    characteristic: int
    degree: int
    modulus: tuple[int, ...] = dc_field(repr=False)

    @property
    def order(self) -> int:
        return self.characteristic**self.degree

    def __str__(self) -> str:
        return f"GF({self.order})"

    # -- codes -----------------------------------------------------------------

    def encode(self, coeffs: Sequence[int]) -> int:
        p = self.characteristic
        if len(coeffs) > self.degree:
            coeffs = _poly_mod(list(coeffs), self.modulus, p)
        return sum((c % p) * p**t for t, c in enumerate(coeffs))

    def decode(self, code: int) -> tuple[int, ...]:
        p = self.characteristic
        return tuple((code // p**t) % p for t in range(self.degree))

    # -- arithmetic on codes ---------------------------------------------------

    def _mul_poly(self, a: int, b: int) -> int:
        p = self.characteristic
        ca, cb = self.decode(a), self.decode(b)
        prod = [0] * (2 * self.degree - 1)
        for s, x in enumerate(ca):
            if x:
                for t, y in enumerate(cb):
                    prod[s + t] += x * y
        return self.encode(_poly_mod(prod, self.modulus, p))

    def _add_poly(self, a: int, b: int) -> int:
        return self.encode([x + y for x, y in zip(self.decode(a), self.decode(b))])

    def _neg_poly(self, a: int) -> int:
        return self.encode([-x for x in self.decode(a)])

    def _pow_code(self, a: int, k: int) -> int:
        result, base = 1, a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    @property
    def has_tables(self) -> bool:
        return self.order <= TABLE_LIMIT

    @cached_property
    def add_table(self) -> list[list[int]]:
        q = self.order
        return [[self._add_poly(a, b) for b in range(q)] for a in range(q)]

    @cached_property
    def mul_table(self) -> list[list[int]]:
        q = self.order
        return [[self._mul_poly(a, b) for b in range(q)] for a in range(q)]

    @cached_property
    def neg_table(self) -> list[int]:
        return [self._neg_poly(a) for a in range(self.order)]

    @cached_property
    def inv_table(self) -> list[int]:
        inv = [0] * self.order
        for a in range(1, self.order):
            inv[a] = self._pow_code(a, self.order - 2)
        return inv

    @cached_property
    def conj_table(self) -> list[int]:
        return [self._pow_code(a, self.sqrt_order) for a in range(self.order)]

    def add(self, a: int, b: int) -> int:
        if self.has_tables:
            return self.add_table[a][b]
        return self._add_poly(a, b)

    def neg(self, a: int) -> int:
        if self.has_tables:
            return self.neg_table[a]
        return self._neg_poly(a)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.has_tables:
            return self.mul_table[a][b]
        return self._mul_poly(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"inverse of 0 in {self}")
        if self.has_tables:
            return self.inv_table[a]
        return self._pow_code(a, self.order - 2)

    def conj(self, a: int) -> int:
        """Image of the code ``a`` under x -> x**sqrt(order)."""
        if self.has_tables:
            return self.conj_table[a]
        return self._pow_code(a, self.sqrt_order)

    # -- conjugation -----------------------------------------------------------

    @property
    def is_square_order(self) -> bool:
        return self.degree % 2 == 0

    @property
    def sqrt_order(self) -> int:
        if not self.is_square_order:
            raise OrderNotSquare(f"{self} has non-square order")
        return self.characteristic ** (self.degree // 2)

    # -- elements --------------------------------------------------------------

    def __call__(self, value) -> "FieldElement":
        """Coerce an int (prime-field residue) or coefficient sequence to an element."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise MixedFields(f"{value.field} element used in {self}")
            return value
        if isinstance(value, int):
            return FieldElement(self, self.decode(self.encode([value])))
        return FieldElement(self, self.decode(self.encode(list(value))))

    def from_code(self, code: int) -> "FieldElement":
        return FieldElement(self, self.decode(code))

    @property
    def zero(self) -> "FieldElement":
        return self.from_code(0)

    @property
    def one(self) -> "FieldElement":
        return self.from_code(1)

    def elements(self) -> Iterator["FieldElement"]:
        for code in range(self.order):
            yield self.from_code(code)


@lru_cache(maxsize=None)
def construct_field(order: int) -> FieldDescriptor:
    """The canonical descriptor of GF(order); raise NotAPrimePower for other orders."""
    p, e = factor_prime_power(order)
    return FieldDescriptor(p, e, _lowest_irreducible(p, e))


@dataclass(frozen=True)
class FieldElement:
    field: FieldDescriptor
    coefficients: tuple[int, ...]

    @property
    def code(self) -> int:
        return self.field.encode(self.coefficients)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise MixedFields(f"cannot combine {self.field} and {other.field} elements")
            return other.code
        if isinstance(other, int):
            return self.field.encode([other])
        return NotImplemented

    def _wrap(self, code: int) -> FieldElement:
        return self.field.from_code(code)

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self._wrap(self.field.add(self.code, b))

    __radd__ = __add__

    def __neg__(self):
        return self._wrap(self.field.neg(self.code))

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self._wrap(self.field.sub(self.code, b))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self._wrap(self.field.mul(self.code, b))

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        return self._wrap(self.field.inv(self.code))

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self._wrap(self.field.mul(self.code, self.field.inv(b)))

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int) -> FieldElement:
        if k < 0:
            return self.inverse() ** (-k)
        return self._wrap(self.field._pow_code(self.code, k))

    def conjugate(self) -> FieldElement:
        return self._wrap(self.field.conj(self.code))

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        if self.field.degree == 1:
            return f"{self.coefficients[0]}"
        terms = []
        for t, c in reversed(list(enumerate(self.coefficients))):
            if c:
                mono = "" if t == 0 else ("x" if t == 1 else f"x^{t}")
                terms.append(f"{c if c != 1 or t == 0 else ''}{mono}")
        return " + ".join(terms) if terms else "0"


def arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Apply ``op`` in {"add", "sub", "mul", "div"} to two elements of one field."""
    if a.field != b.field:
        raise MixedFields(f"cannot combine {a.field} and {b.field} elements")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def conjugate(x: FieldElement) -> FieldElement:
    """x -> x**sqrt(q); raises OrderNotSquare when the field order is not a square."""
    return x.conjugate()
