"""The evaluation ring for the counting formulas and the elementary q-functions.

Every formula in the package is written once against a small ring interface
and evaluated at one of two kinds of point:

* a numeric prime power ``q`` (a Python ``int``); terms with negative powers
  of q become :class:`fractions.Fraction` values and are cleared before a
  count is returned;
* the indeterminate :data:`Q`, a :class:`LaurentPolynomial`, which turns each
  formula into an exact integer-coefficient Laurent polynomial in q.

Exact division is asserted everywhere: ``exact_div`` raises NonExactDivision
instead of silently producing a remainder.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Union

from .errors import IntegralityViolation, InvalidRange, NonExactDivision, ParamOutOfRange
from .field import is_prime_power


class LaurentPolynomial:
    """Integer-coefficient polynomial in q with possibly negative exponents.

    Immutable; stores only non-zero coefficients, so equality is equality of
    the coefficient maps.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif not isinstance(terms, dict):
            terms = dict(terms)
        self._terms = {e: c for e, c in terms.items() if c}
        self._hash = None

    @classmethod
    def q(cls) -> LaurentPolynomial:
        return cls({1: 1})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPolynomial:
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, c: int) -> LaurentPolynomial:
        return cls({0: c})

    @classmethod
    def from_coefficients(cls, coeffs, low: int = 0) -> LaurentPolynomial:
        """Polynomial with ``coeffs[t]`` as the coefficient of ``q**(low + t)``."""
        return cls({low + t: c for t, c in enumerate(coeffs)})

    def coefficients(self) -> dict[int, int]:
        return dict(self._terms)

    def __getitem__(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def min_exponent(self) -> int:
        return min(self._terms) if self._terms else 0

    @property
    def max_exponent(self) -> int:
        return max(self._terms) if self._terms else 0

    def is_polynomial(self) -> bool:
        """True when no negative powers of q occur."""
        return self.min_exponent >= 0

    # -- ring operations -------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, int):
            return LaurentPolynomial({0: other})
        if isinstance(other, Fraction) and other.denominator == 1:
            return LaurentPolynomial({0: other.numerator})
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self._terms)
        for e, c in o._terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPolynomial(terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._terms, o._terms
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            ((eb, cb),) = b.items()
            return LaurentPolynomial({e + eb: c * cb for e, c in a.items()})
        acc: dict[int, int] = {}
        get = acc.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                k = ea + eb
                acc[k] = get(k, 0) + ca * cb
        return LaurentPolynomial(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) != 1:
                raise NonExactDivision(f"negative power of the non-monomial {self}")
            ((e, c),) = self._terms.items()
            if c not in (1, -1):
                raise NonExactDivision(f"negative power of {self} has non-integer coefficient")
            return LaurentPolynomial({e * k: 1 if k % 2 == 0 else c})
        result = LaurentPolynomial({0: 1})
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def exact_div(self, other) -> LaurentPolynomial:
        """The quotient ``self / other``; raise NonExactDivision unless it is a Laurent polynomial."""
        o = self._coerce(other)
        if o is None:
            raise TypeError(f"cannot divide by {other!r}")
        if o.is_zero():
            raise NonExactDivision("division by the zero polynomial")
        if self.is_zero():
            return self
        if len(o._terms) == 1:
            ((eb, cb),) = o._terms.items()
            out = {}
            for e, c in self._terms.items():
                qc, r = divmod(c, cb)
                if r:
                    raise NonExactDivision(f"{self} is not divisible by {o}")
                out[e - eb] = qc
            return LaurentPolynomial(out)
        # long division from the top degree down
        b_top = o.max_exponent
        b_lead = o._terms[b_top]
        b_span = b_top - o.min_exponent
        rem = dict(self._terms)
        quot = {}
        while rem:
            top = max(rem)
            if top - min(rem) < b_span:
                raise NonExactDivision(f"{self} is not divisible by {o}")
            c, r = divmod(rem[top], b_lead)
            if r:
                raise NonExactDivision(f"{self} is not divisible by {o}")
            shift = top - b_top
            quot[shift] = c
            for e, bc in o._terms.items():
                k = e + shift
                v = rem.get(k, 0) - c * bc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPolynomial(quot)

    def __truediv__(self, other):
        return self.exact_div(other)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o.exact_div(self)

    # -- comparison, evaluation, display --------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        if self._hash is None:
            # constants hash like the ints they compare equal to
            if not self._terms or set(self._terms) == {0}:
                self._hash = hash(self._terms.get(0, 0))
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __call__(self, x) -> Union[int, Fraction]:
        """Evaluate at an int or Fraction; returns an int whenever the value is integral."""
        total = Fraction(0)
        for e, c in self._terms.items():
            total += c * Fraction(x) ** e
        return total.numerator if total.denominator == 1 else total

    def substitute_square(self) -> LaurentPolynomial:
        """p(q) -> p(q**2)."""
        return LaurentPolynomial({2 * e: c for e, c in self._terms.items()})

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                mono = "q" if e == 1 else f"q^{e}" if e > 0 else f"q^({e})"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"LaurentPolynomial({str(self)!r})"

    def to_json(self) -> dict[str, str]:
        return {str(e): str(c) for e, c in sorted(self._terms.items())}

    @classmethod
    def from_json(cls, data: dict[str, str]) -> LaurentPolynomial:
        return cls({int(e): int(c) for e, c in data.items()})


#: The indeterminate q.
Q = LaurentPolynomial.q()

Ring = Union[int, Fraction, LaurentPolynomial]


def is_symbolic(q) -> bool:
    return isinstance(q, LaurentPolynomial)


def check_qpoint(q) -> None:
    """Accept the indeterminate or a numeric prime power."""
    if is_symbolic(q):
        if q != Q:
            raise ParamOutOfRange("symbolic evaluation point must be the indeterminate Q")
        return
    if not isinstance(q, int) or isinstance(q, bool) or not is_prime_power(q):
        raise ParamOutOfRange(f"q must be a prime power, got {q!r}")


def qpow(q, e: int) -> Ring:
    """q**e, exact for negative e (Fraction for numeric q, monomial for symbolic q)."""
    if is_symbolic(q):
        return q**e
    if e < 0:
        return Fraction(1, q ** (-e))
    return q**e


def exact_div(a, b) -> Ring:
    if isinstance(a, LaurentPolynomial) or isinstance(b, LaurentPolynomial):
        if not isinstance(a, LaurentPolynomial):
            a = LaurentPolynomial({0: a})
        return a.exact_div(b)
    if isinstance(a, int) and isinstance(b, int):
        if b == 0:
            raise NonExactDivision("division by zero")
        quot, r = divmod(a, b)
        if r:
            raise NonExactDivision(f"{a} is not divisible by {b}")
        return quot
    out = Fraction(a) / Fraction(b)
    return out.numerator if out.denominator == 1 else out


def as_count(x) -> Ring:
    """Normalize a count: an int for numeric input, a polynomial for symbolic input."""
    if isinstance(x, LaurentPolynomial):
        if not x.is_polynomial():
            raise IntegralityViolation(f"count {x} has negative powers of q")
        return x
    if isinstance(x, Fraction):
        if x.denominator != 1:
            raise IntegralityViolation(f"count evaluated to the non-integer {x}")
        return x.numerator
    return x


def as_rational(x) -> Fraction:
    if isinstance(x, LaurentPolynomial):
        raise TypeError("symbolic value has no rational value")
    return Fraction(x)


def binom2(m: int) -> int:
    """C(m, 2) = m(m-1)/2 for any integer m."""
    return m * (m - 1) // 2


def _sign(sign) -> int:
    if sign in ("+", 1, +1):
        return 1
    if sign in ("-", -1):
        return -1
    raise ValueError(f"sign must be '+' or '-', got {sign!r}")


def _check_range(a: int, b: int) -> None:
    if a < 0 or b < a - 1:
        raise InvalidRange(f"product bounds a={a}, b={b} need a >= 0 and b >= a - 1")


def _product(q, a: int, b: int, factor) -> Ring:
    _check_range(a, b)
    acc = LaurentPolynomial({0: 1}) if is_symbolic(q) else 1
    for k in range(a, b + 1):
        acc = acc * factor(k)
    return acc


@lru_cache(maxsize=None)
def phi(sign, a: int, b: int, q) -> Ring:
    """φ±_{a,b}(q) = prod_{k=a}^{b} (q^k ± (-1)^k); the empty product (b = a-1) is 1."""
    s = _sign(sign)
    return _product(q, a, b, lambda k: qpow(q, k) + s * (-1) ** k)


@lru_cache(maxsize=None)
def psi(sign, a: int, b: int, q) -> Ring:
    """ψ±_{a,b}(q) = prod_{k=a}^{b} (q^k ± 1)."""
    s = _sign(sign)
    return _product(q, a, b, lambda k: qpow(q, k) + s)


@lru_cache(maxsize=None)
def chi(a: int, b: int, q) -> Ring:
    """χ_{a,b}(q) = prod_{k=a}^{b} (q^{2k-1} - 1)."""
    return _product(q, a, b, lambda k: qpow(q, 2 * k - 1) - 1)


@lru_cache(maxsize=None)
def gauss(b: int, a: int, q) -> Ring:
    """Gaussian binomial [b a]_q; zero when a < 0 or b < a."""
    if a < 0 or b < a:
        return LaurentPolynomial() if is_symbolic(q) else 0
    return exact_div(psi("-", b - a + 1, b, q), psi("-", 1, a, q))


@lru_cache(maxsize=None)
def gauss_minus(b: int, a: int, q) -> Ring:
    """The variant [b a]_q^- = φ-_{b-a+1,b}(q) / φ-_{1,a}(q); zero when a < 0 or b < a."""
    if a < 0 or b < a:
        return LaurentPolynomial() if is_symbolic(q) else 0
    return exact_div(phi("-", b - a + 1, b, q), phi("-", 1, a, q))


def segre_count(n: int, k: int, j: int, q) -> Ring:
    """Number of j-spaces of F_q^n meeting a fixed k-space trivially: q^{kj} [n-k j]_q."""
    if j < 0 or k < 0:
        raise ParamOutOfRange("segre_count needs j, k >= 0")
    return as_count(qpow(q, k * j) * gauss(n - k, j, q))


class RationalFunction:
    """A quotient of Laurent polynomials, compared by cross-multiplication.

    No normalization to lowest terms is attempted; ``p/r == s/t`` is decided
    by ``p*t == s*r``.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator, denominator=1):
        num = LaurentPolynomial._coerce(numerator)
        den = LaurentPolynomial._coerce(denominator)
        if num is None or den is None:
            raise TypeError("RationalFunction needs integer or Laurent polynomial parts")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.numerator = num
        self.denominator = den

    @classmethod
    def coerce(cls, x) -> RationalFunction:
        if isinstance(x, RationalFunction):
            return x
        return cls(x, 1)

    def __add__(self, other):
        o = RationalFunction.coerce(other)
        return RationalFunction(
            self.numerator * o.denominator + o.numerator * self.denominator,
            self.denominator * o.denominator,
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.numerator, self.denominator)

    def __sub__(self, other):
        return self + (-RationalFunction.coerce(other))

    def __rsub__(self, other):
        return RationalFunction.coerce(other) - self

    def __mul__(self, other):
        o = RationalFunction.coerce(other)
        return RationalFunction(self.numerator * o.numerator, self.denominator * o.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RationalFunction.coerce(other)
        return RationalFunction(self.numerator * o.denominator, self.denominator * o.numerator)

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) / self

    def __eq__(self, other):
        if not isinstance(other, (RationalFunction, LaurentPolynomial, int)):
            return NotImplemented
        o = RationalFunction.coerce(other)
        return self.numerator * o.denominator == o.numerator * self.denominator

    __hash__ = None

    def cross_difference(self, other) -> LaurentPolynomial:
        """``p*t - s*r`` for ``self = p/r`` and ``other = s/t``; zero iff equal."""
        o = RationalFunction.coerce(other)
        return self.numerator * o.denominator - o.numerator * self.denominator

    def __call__(self, x) -> Fraction:
        return Fraction(self.numerator(x)) / Fraction(self.denominator(x))

    def __repr__(self) -> str:
        return f"RationalFunction(({self.numerator}) / ({self.denominator}))"
