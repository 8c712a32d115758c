"""Counting formulas for a non-degenerate symplectic form on GF(q)^{2n}.

Two index conventions are in use:

* ``alpha_s`` and ``beta_s`` take *raw* dimensions (i, j, 2n, 2k), since odd
  j is legal for them;
* the gamma and rho functions take *half* indices: ``gamma_s(i, j, n, k, q)``
  counts γ_{2i,2j,2n,2k}.  The ``*_raw`` wrappers accept raw dimensions and
  apply the parity rules (γ is 0 for odd i or j; ρ with an odd dimension is
  an error).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParamOutOfRange, UndefinedParity
from .qseries import (
    RationalFunction,
    as_count,
    check_qpoint,
    chi,
    exact_div,
    gauss,
    is_symbolic,
    psi,
    qpow,
)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ParamOutOfRange(message)


def _half(two_n: int, name: str) -> int:
    _require(two_n >= 0 and two_n % 2 == 0, f"symplectic {name} must be a non-negative even dimension, got {two_n}")
    return two_n // 2


def alpha_s(i: int, j: int, two_n: int, q):
    """Number of i-singular j-spaces of GF(q)^{2n}; 0 when i and j differ in parity."""
    check_qpoint(q)
    n = _half(two_n, "ambient dimension")
    _require(0 <= i <= j <= two_n, f"symplectic alpha requires 0 <= i <= j <= 2n (i={i}, j={j}, 2n={two_n})")
    if (j - i) % 2:
        return as_count(0 * q)
    ell = (j - i) // 2
    _require(max(0, j - n) <= ell, f"symplectic alpha requires max{{0, j-n}} <= (j-i)/2 (i={i}, j={j}, 2n={two_n})")
    q2 = q * q
    pre = qpow(q, 2 * ell * (n - j + ell))
    value = as_count(pre * exact_div(psi("-", n + ell - j + 1, n, q2), psi("-", 1, ell, q2) * psi("-", 1, j - 2 * ell, q)))
    second = as_count(pre * gauss(n, ell, q2) * gauss(n - ell, j - 2 * ell, q) * psi("+", n + ell - j + 1, n - ell, q))
    assert value == second, f"alpha_s expressions disagree at {(i, j, two_n)}"
    return value


def _beta_s_raw(ell, j, n, k, q):
    return qpow(q, 2 * (k - ell) * (n - k)) * gauss(n - j + ell, k - j + ell, q * q)


def beta_s(i: int, j: int, two_n: int, two_k: int, q):
    """Number of non-singular 2k-spaces through a fixed i-singular j-space.

    Raises UndefinedParity when i and j differ in parity (no i-singular
    j-space exists, and the count is undefined rather than zero).
    """
    check_qpoint(q)
    n = _half(two_n, "ambient dimension")
    k = _half(two_k, "partner dimension")
    if (j - i) % 2:
        raise UndefinedParity(f"beta_{{{i},{j},{two_n},{two_k}}} is undefined: i and j differ in parity")
    ell = (j - i) // 2
    _require(0 <= i and max(0, j - k) <= ell,
             f"symplectic beta requires max{{0, j-k}} <= (j-i)/2 <= j/2 (i={i}, j={j}, 2k={two_k})")
    _require(j <= two_k <= two_n - 2, f"symplectic beta requires j <= 2k <= 2n-2 (j={j}, 2k={two_k}, 2n={two_n})")
    value = as_count(_beta_s_raw(ell, j, n, k, q))
    if k == n - 1:
        closed = as_count(qpow(q, 2 * (n - ell - 1)) * gauss(n - j + ell, 1, q * q))
        assert value == closed, f"beta_s codimension-2 case disagrees: {value} != {closed}"
    return value


def _gamma_s_span_raw(i, j, n, q):
    total = 0
    for m in range(j - i + 1):
        total = total + chi(i + 1, j - m, q) * gauss(j - i, m, q * q) * qpow(q, m * (2 * j + 2 * i - 2 * n + m - 1))
    return qpow(q, j * (4 * n - 5 * j)) * chi(1, i, q) * total


def _check_half_ij(i, j, n, what):
    _require(0 <= i <= min(j, n - j), f"symplectic {what} requires 0 <= i <= min{{j, n-j}} in half indices (i={i}, j={j}, n={n})")


def gamma_s_span(i: int, j: int, n: int, q):
    """γ_{2i,2j,2n}: non-singular complements of a fixed 2i-singular 2j-space with non-singular span."""
    check_qpoint(q)
    _check_half_ij(i, j, n, "gamma")
    _require(j <= n - 1, f"symplectic gamma requires j <= n-1 in half indices (j={j}, n={n})")
    return as_count(_gamma_s_span_raw(i, j, n, q))


def _gamma_s_closed(i, j, n, k, q):
    total = 0
    for m in range(j - i + 1):
        total = total + chi(i + 1, j - m, q) * gauss(j - i, m, q * q) * qpow(q, m * (2 * i - 2 * k + m - 1))
    return (
        qpow(q, 2 * (k + i) * (n - k - j) + j * (4 * k - j))
        * gauss(n - j - i, k - i, q * q)
        * chi(1, i, q)
        * total
    )


def gamma_s(i: int, j: int, n: int, k: int, q):
    """γ_{2i,2j,2n,2k} in half indices; product and closed forms are asserted equal."""
    check_qpoint(q)
    _check_half_ij(i, j, n, "gamma")
    _require(k >= 0 and j + k <= n, f"symplectic gamma requires 0 <= k and j+k <= n in half indices (j={j}, k={k}, n={n})")
    closed = as_count(_gamma_s_closed(i, j, n, k, q))
    if i > k:
        product = 0
    else:
        product = as_count(_beta_s_raw(j - i, 2 * j, n, k + j, q) * _gamma_s_span_raw(i, j, k + j, q))
    assert closed == product, f"gamma_s forms disagree at {(i, j, n, k)}: {closed} != {product}"
    return closed


def gamma_s_raw(i: int, j: int, two_n: int, two_k: int, q):
    """γ_{i,j,2n,2k} in raw dimensions; 0 when i or j is odd."""
    n = _half(two_n, "ambient dimension")
    k = _half(two_k, "partner dimension")
    if i % 2 or j % 2:
        check_qpoint(q)
        _require(0 <= i <= j and j + two_k <= two_n, f"symplectic gamma requires 0 <= i <= j and j+2k <= 2n (i={i}, j={j}, 2k={two_k}, 2n={two_n})")
        return as_count(0 * q)
    return gamma_s(i // 2, j // 2, n, k, q)


def gamma_s_span_raw(i: int, j: int, two_n: int, q):
    n = _half(two_n, "ambient dimension")
    if i % 2 or j % 2:
        check_qpoint(q)
        _require(0 <= i <= j < two_n, f"symplectic gamma requires 0 <= i <= j < 2n (i={i}, j={j}, 2n={two_n})")
        return as_count(0 * q)
    return gamma_s_span(i // 2, j // 2, n, q)


def _rho_s_formula(j, k, n, q):
    q2 = q * q
    total = 0
    for m in range(j + 1):
        total = total + chi(1, j - m, q) * gauss(j, m, q2) * qpow(q, m * (m - 2 * k - 1))
    num = qpow(q, j * (2 * k - j)) * psi("-", n - j - k + 1, n - j, q2) * total
    den = psi("-", n - k + 1, n, q2)
    if is_symbolic(q):
        return RationalFunction(num, den)
    return Fraction(num) / Fraction(den)


def rho_s(j: int, k: int, n: int, q):
    """ρ_{2j,2k,2n} in half indices; checked against γ/α and the (k, j) value."""
    check_qpoint(q)
    _require(0 <= j <= n - 1 and 0 <= k <= n - 1 and j + k <= n,
             f"symplectic rho requires 0 <= j,k <= n-1 and j+k <= n in half indices (j={j}, k={k}, n={n})")
    value = _rho_s_formula(j, k, n, q)
    ratio = gamma_s(0, j, n, k, q)
    alpha = alpha_s(0, 2 * k, 2 * n, q)
    if is_symbolic(q):
        assert value == RationalFunction(ratio, alpha), "rho_s disagrees with gamma/alpha"
    else:
        assert value == Fraction(ratio, alpha), "rho_s disagrees with gamma/alpha"
    assert value == _rho_s_formula(k, j, n, q), "rho_s is not symmetric"
    return value


def rho_s_raw(j: int, k: int, two_n: int, q):
    """ρ_{j,k,2n} in raw dimensions; only even j and k are defined."""
    n = _half(two_n, "ambient dimension")
    _require(j % 2 == 0 and k % 2 == 0, f"symplectic rho is only defined for even dimensions (j={j}, k={k})")
    return rho_s(j // 2, k // 2, n, q)
