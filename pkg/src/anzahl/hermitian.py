"""Counting formulas for a non-degenerate hermitian form on GF(q^2)^n.

``q`` is always the *base* parameter: the underlying field has q**2
elements.  Passing the field order (e.g. 4 for GF(4)) instead of its square
root (2) is the classic mistake here; ``hermitian_field_order`` exists to
make the conversion explicit.

Every function evaluates at a numeric prime power or at the indeterminate
:data:`anzahl.qseries.Q`.  Parameters outside a formula's stated domain raise
ParamOutOfRange rather than returning 0.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParamOutOfRange
from .qseries import (
    RationalFunction,
    as_count,
    binom2,
    check_qpoint,
    exact_div,
    gauss_minus,
    is_symbolic,
    phi,
    psi,
    qpow,
)


def hermitian_field_order(q: int) -> int:
    return q * q


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ParamOutOfRange(message)


def _check_ijn(i: int, j: int, n: int, what: str) -> None:
    _require(0 <= i <= min(j, n - j), f"hermitian {what} requires 0 <= i <= min{{j, n-j}} (i={i}, j={j}, n={n})")


def alpha_h(i: int, j: int, n: int, q):
    """Number of i-singular j-spaces."""
    check_qpoint(q)
    _require(0 <= j <= n, f"hermitian alpha requires 0 <= j <= n (j={j}, n={n})")
    _check_ijn(i, j, n, "alpha")
    q2 = q * q
    value = qpow(q, (j - i) * (n - j - i)) * exact_div(
        phi("-", j - i + 1, n, q), phi("-", 1, n - j - i, q) * psi("-", 1, i, q2)
    )
    return as_count(value)


def _beta_h_raw(i, j, n, k, q):
    return qpow(q, (n - k) * (k - j + i)) * gauss_minus(n - j - i, n - k, q)


def beta_h_hyperplane(i: int, j: int, n: int, q):
    """q^{n-j+i-1} (q^{n-i-j} - (-1)^{n-i-j}) / (q+1): the k = n-1 case in closed form."""
    e = n - i - j
    return as_count(qpow(q, n - j + i - 1) * exact_div(qpow(q, e) - (-1) ** e, q + 1))


def beta_h(i: int, j: int, n: int, k: int, q):
    """Number of non-singular k-spaces through a fixed i-singular j-space."""
    check_qpoint(q)
    _check_ijn(i, j, n, "beta")
    _require(j + i <= k <= n - 1, f"hermitian beta requires j+i <= k <= n-1 (i={i}, j={j}, k={k}, n={n})")
    value = as_count(_beta_h_raw(i, j, n, k, q))
    if k == n - 1:
        closed = beta_h_hyperplane(i, j, n, q)
        assert value == closed, f"beta_h hyperplane case disagrees: {value} != {closed}"
    return value


def _gamma_h_span_raw(i, j, n, q):
    total = 0
    for m in range(j - i + 1):
        total = total + (
            (-1) ** (m * (n - j))
            * phi("+", i + 1, j - m, q)
            * gauss_minus(j - i, m, q)
            * qpow(q, binom2(m) - m * (n - j - i))
        )
    return qpow(q, 2 * j * (n - j) - binom2(j + 1)) * phi("+", 1, i, q) * total


def gamma_h_span(i: int, j: int, n: int, q):
    """Non-singular (n-j)-spaces complementary to a fixed i-singular j-space with non-singular span."""
    check_qpoint(q)
    _check_ijn(i, j, n, "gamma")
    _require(0 <= j <= n - 1, f"hermitian gamma requires j <= n-1 (j={j}, n={n})")
    return as_count(_gamma_h_span_raw(i, j, n, q))


def _gamma_h_closed(i, j, n, k, q):
    total = 0
    for m in range(j - i + 1):
        total = total + (
            (-1) ** (m * k)
            * phi("+", i + 1, j - m, q)
            * gauss_minus(j - i, m, q)
            * qpow(q, binom2(m) - m * (k - i))
        )
    return (
        qpow(q, (n - k - j) * (k + i) + 2 * j * k - binom2(j + 1))
        * gauss_minus(n - j - i, n - k - j, q)
        * phi("+", 1, i, q)
        * total
    )


def gamma_h(i: int, j: int, n: int, k: int, q):
    """Non-singular k-spaces σ with σ ∩ π = 0 and ⟨π, σ⟩ non-singular, π a fixed i-singular j-space.

    Computed both as β_{i,j,n,k+j} γ_{i,j,k+j} and from the expanded closed
    form; the two are asserted equal.
    """
    check_qpoint(q)
    _check_ijn(i, j, n, "gamma")
    _require(0 <= j <= n - 1, f"hermitian gamma requires j <= n-1 (j={j}, n={n})")
    _require(0 <= k <= n - j, f"hermitian gamma requires 0 <= k <= n-j (k={k}, j={j}, n={n})")
    closed = as_count(_gamma_h_closed(i, j, n, k, q))
    if i > k:
        product = 0
    else:
        product = as_count(_beta_h_raw(i, j, n, k + j, q) * _gamma_h_span_raw(i, j, k + j, q))
    assert closed == product, f"gamma_h forms disagree at {(i, j, n, k)}: {closed} != {product}"
    return closed


def _rho_h_formula(j, k, n, q):
    total = 0
    for m in range(j + 1):
        total = total + (
            (-1) ** (m * k) * phi("+", 1, j - m, q) * gauss_minus(j, m, q) * qpow(q, binom2(m) - m * k)
        )
    num = qpow(q, j * k - binom2(j + 1)) * phi("-", n - j - k + 1, n - k, q) * total
    den = phi("-", n - j + 1, n, q)
    if is_symbolic(q):
        return RationalFunction(num, den)
    return Fraction(num) / Fraction(den)


def rho_h(j: int, k: int, n: int, q):
    """Proportion of ordered pairs of non-singular (j, k)-spaces that meet trivially and span a non-singular space.

    An exact Fraction for numeric q, a RationalFunction for symbolic q.
    Checked against γ_{0,j,n,k}/α_{0,k,n} and against the (k, j) value.
    """
    check_qpoint(q)
    _require(0 <= j <= n - 1 and 0 <= k <= n - 1 and j + k <= n,
             f"hermitian rho requires 0 <= j,k <= n-1 and j+k <= n (j={j}, k={k}, n={n})")
    value = _rho_h_formula(j, k, n, q)
    ratio = gamma_h(0, j, n, k, q)
    alpha = alpha_h(0, k, n, q)
    if is_symbolic(q):
        assert value == RationalFunction(ratio, alpha), "rho_h disagrees with gamma/alpha"
    else:
        assert value == Fraction(ratio, alpha), "rho_h disagrees with gamma/alpha"
    assert value == _rho_h_formula(k, j, n, q), "rho_h is not symmetric"
    return value
