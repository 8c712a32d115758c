"""Exact checks of the product inequalities, the ρ lower bounds and the literature constants.

Every comparison is between two :class:`fractions.Fraction` values.  A
:class:`BoundCheck` records both sides, the direction, and whether it held.
The sweeps at the bottom cover a finite grid; nothing here claims more than
the grid it ran on.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ParamOutOfRange
from .field import is_prime_power
from .hermitian import rho_h
from .qseries import binom2, gauss_minus, phi, psi
from .symplectic import rho_s

GE, LE, EQ = ">=", "<=", "=="

DEFAULT_QS = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16)
BOUND_IDS = (
    "psi-min",
    "phi-min-upper",
    "phi-min-lower",
    "phi-plus-lower",
    "summand",
    "rho-hermitian",
    "rho-symplectic",
    "literature",
)


@dataclass
class BoundCheck:
    bound_id: str
    parameters: dict[str, int]
    lhs: Fraction
    rhs: Fraction
    relation: str = GE
    holds: bool = field(init=False)

    def __post_init__(self):
        self.lhs, self.rhs = Fraction(self.lhs), Fraction(self.rhs)
        if self.relation == GE:
            self.holds = self.lhs >= self.rhs
        elif self.relation == LE:
            self.holds = self.lhs <= self.rhs
        elif self.relation == EQ:
            self.holds = self.lhs == self.rhs
        else:
            raise ValueError(f"unknown relation {self.relation!r}")

    @property
    def is_equality(self) -> bool:
        return self.lhs == self.rhs

    def __bool__(self) -> bool:
        return self.holds

    def key(self) -> tuple:
        return (self.bound_id, tuple(sorted(self.parameters.items())))


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ParamOutOfRange(message)


def _q(q: int) -> Fraction:
    _require(is_prime_power(q), f"q must be a prime power, got {q}")
    return Fraction(q)


# -- bounds on the elementary products ---------------------------------------


def check_psi_min_bounds(a: int, q: int) -> tuple[BoundCheck, BoundCheck]:
    _require(a >= 1, f"psi-min bounds need a >= 1 (a={a})")
    Q = _q(q)
    p = {"a": a, "q": q}
    first = BoundCheck(
        "psi-min-1", p,
        psi("-", 1, a, q),
        Q ** binom2(a + 1) * (1 - 1 / Q - Q**-2 + Q ** (-a - 1)),
    )
    second = BoundCheck(
        "psi-min-2", p,
        Fraction(psi("-", 1, 2 * a, q) * (q ** (2 * a + 2) - 1), q * q - 1),
        Q ** (binom2(2 * a + 2) - 1) * (1 - 1 / Q - Q**-3 + (Q * Q - Q + 1) * Q ** (-2 * a - 3)),
    )
    return first, second


def check_phi_min_upper(a: int, b: int, q: int) -> BoundCheck:
    _require(a >= 2 and b >= 0, f"phi-min upper bound needs a >= 2, b >= 0 (a={a}, b={b})")
    Q = _q(q)
    rhs = Q ** (a * b + binom2(a + 1)) * (
        1 + (-1) ** b * Q ** (-b - a) * (Q**a - (-1) ** a) / (Q + 1) - Q ** (-2 * b - a - 1)
    )
    return BoundCheck("phi-min-upper", {"a": a, "b": b, "q": q}, phi("-", b + 1, b + a, q), rhs, LE)


def check_phi_min_lower(a: int, b: int, q: int) -> BoundCheck:
    _require(a >= 2 and b >= 0, f"phi-min lower bound needs a >= 2, b >= 0 (a={a}, b={b})")
    Q = _q(q)
    s = (-1) ** b
    rhs = Q ** (a * b + binom2(a + 1)) * (1 + s * Q ** (-b - 1) - s * Q ** (-b - 2) - Q ** (-b - 3) - Q ** (-2 * b - 3))
    return BoundCheck("phi-min-lower", {"a": a, "b": b, "q": q}, phi("-", b + 1, b + a, q), rhs)


def check_phi_plus_lower(a: int, q: int) -> BoundCheck:
    _require(a >= 2, f"phi-plus lower bound needs a >= 2 (a={a})")
    Q = _q(q)
    rhs = Q ** binom2(a + 1) * (1 - 1 / Q + Q**-2 - 2 * Q**-3)
    return BoundCheck("phi-plus-lower", {"a": a, "q": q}, phi("+", 1, a, q), rhs)


def _summand(j, k, m, Q):
    return phi("+", 1, j - m, int(Q)) * gauss_minus(j, m, int(Q)) * Q ** (binom2(m) - m * k)


def check_summand_monotonicity(j: int, k: int, m: int, q: int) -> BoundCheck:
    """Consecutive summands of the hermitian ρ sum decrease when 2 <= j <= k."""
    _require(0 <= m <= j - 1 and 2 <= j <= k, f"summand check needs 0 <= m <= j-1 and 2 <= j <= k (j={j}, k={k}, m={m})")
    Q = _q(q)
    return BoundCheck("summand", {"j": j, "k": k, "m": m, "q": q}, _summand(j, k, m, Q), _summand(j, k, m + 1, Q))


# -- ρ bounds -----------------------------------------------------------------


def rho_h_one_closed(k: int, q: int) -> Fraction:
    """ρ_{1,k,k+1} in closed form."""
    Q = _q(q)
    return 1 - Q**-2 + (-1) ** k * (Q + 1) / (Q * Q * (Q ** (k + 1) + (-1) ** k))


def rho_h_one_closed_general(k: int, n: int, q: int) -> Fraction:
    """ρ_{1,k,n} in closed form for n >= k+2."""
    Q = _q(q)
    num = Q ** (n - k - 1) - (-1) ** n * Q ** (k - 1) * (Q - 1) + (-1) ** (n - k) * (Q - 2) / Q
    return 1 - 1 / Q + (-1) ** k * num / (Q**n - (-1) ** n)


def check_rho_h_bounds(j: int, k: int, n: int, q: int) -> BoundCheck:
    """Compare ρ_{j,k,n} (hermitian) with the applicable bound or closed form."""
    _require(j >= 1 and k >= 1 and n >= j + k, f"hermitian rho bounds need j,k >= 1 and n >= j+k (j={j}, k={k}, n={n})")
    Q = _q(q)
    value = rho_h(j, k, n, q)
    p = {"j": j, "k": k, "n": n, "q": q}
    other = k if j == 1 else j
    if n == j + k:
        if min(j, k) == 1:
            return BoundCheck("rho-hermitian-closed", p, value, rho_h_one_closed(other, q), EQ)
        rhs = 1 - Q**-2 - Q**-4 - Q ** (-k - j - 1) + max(Q ** (-2 * j - 2), Q ** (-2 * k - 2))
        return BoundCheck("rho-hermitian-tight", p, value, rhs)
    if min(j, k) == 1:
        return BoundCheck("rho-hermitian-closed-general", p, value, rho_h_one_closed_general(other, n, q), EQ)
    if n == j + k + 1:
        return BoundCheck("rho-hermitian-gap1", p, value, 1 - 1 / Q - Q**-3 - 3 * Q**-4)
    return BoundCheck("rho-hermitian-gap2", p, value, 1 - 1 / Q + Q**-2 - 4 * Q**-3)


def check_rho_s_bound(j: int, k: int, n: int, q: int) -> BoundCheck:
    """Compare ρ_{2j,2k,2n} (half indices) with the symplectic lower bound."""
    _require(j >= 1 and k >= 1 and n >= j + k, f"symplectic rho bound needs j,k >= 1 and n >= j+k (j={j}, k={k}, n={n})")
    Q = _q(q)
    value = rho_s(j, k, n, q)
    p = {"j": j, "k": k, "n": n, "q": q}
    if n == j + k:
        rhs = 1 - 1 / Q - Q**-2 + max(Q ** (-2 * j - 1), Q ** (-2 * k - 1))
        return BoundCheck("rho-symplectic-tight", p, value, rhs)
    return BoundCheck("rho-symplectic-gap", p, value, 1 - 1 / Q - Q**-3)


# -- constants quoted from earlier work ---------------------------------------


def _lit(bound_id, p, value, coeff, power, Q):
    return BoundCheck(bound_id, p, value, 1 - Fraction(coeff) * Q ** (-power))


def check_literature_constants(geometry: str, j: int, k: int, n: int, q: int) -> list[BoundCheck]:
    """Every quoted constant whose domain contains (j, k, n, q).

    Symplectic parameters are half indices.  The 9/5 hermitian constant is
    only checked away from (j, k, q) = (1, 1, 2), where it is false; see the
    notes in the README.
    """
    _require(j >= 1 and k >= 1 and n >= j + k, f"literature constants need j,k >= 1 and n >= j+k (j={j}, k={k}, n={n})")
    Q = _q(q)
    p = {"j": j, "k": k, "n": n, "q": q}
    out = []
    if geometry == "hermitian":
        value = rho_h(j, k, n, q)
        if n == j + k:
            if (j, k, q) != (1, 1, 2):
                out.append(_lit("hermitian-9/5", p, value, Fraction(9, 5), 2, Q))
                out.append(_lit("hermitian-3/2", p, value, Fraction(3, 2), 2, Q))
            if j == 1 and k >= 2:
                mid = 1 - (Q**3 - Q**2 + Q) / ((Q - 1) * (Q**2 + 1)) / Q**2
                out.append(BoundCheck("hermitian-6/5-intermediate", p, value, mid))
                out.append(_lit("hermitian-6/5", p, value, Fraction(6, 5), 2, Q))
            if j == 1 and k == 1:
                out.append(BoundCheck("hermitian-rho112", p, value, 1 - Q / (Q - 1) / Q**2, EQ))
            if j >= 2 and k >= 2:
                out.append(BoundCheck("hermitian-21/16-intermediate", p, value, 1 - Q**-2 - Q**-4 - Q**-5 + Q**-6))
                out.append(_lit("hermitian-21/16", p, value, Fraction(21, 16), 2, Q))
        else:
            out.append(_lit("hermitian-43/25", p, value, Fraction(43, 25), 1, Q))
            if j >= 2 and k >= 2 and n >= j + k + 2:
                out.append(_lit("hermitian-3/2-gap", p, value, Fraction(3, 2), 1, Q))
            if j >= 2 and k >= 2 and n == j + k + 1:
                out.append(_lit("hermitian-13/8", p, value, Fraction(13, 8), 1, Q))
            if j == 1 and n >= k + 2:
                out.append(_lit("hermitian-5/3", p, value, Fraction(5, 3), 1, Q))
    elif geometry == "symplectic":
        value = rho_s(j, k, n, q)
        if n == j + k:
            t = min(j, k)
            product = Q ** (-2 * t * t - t) * psi("-", 1, 2 * t, q)
            out.append(BoundCheck("symplectic-product", p, value, product))
            out.append(BoundCheck("symplectic-1.4224", p, product, 1 - Fraction(14224, 10000) / Q))
            out.append(_lit("symplectic-5/3", p, value, Fraction(5, 3), 1, Q))
            out.append(_lit("symplectic-10/7", p, value, Fraction(10, 7), 1, Q))
        else:
            out.append(_lit("symplectic-7/4", p, value, Fraction(7, 4), 1, Q))
        if n >= j + k + 1 or j == 1 or k == 1:
            out.append(_lit("symplectic-5/4", p, value, Fraction(5, 4), 1, Q))
    else:
        raise ValueError(f"unknown geometry {geometry!r}")
    return out


# -- grid sweeps ---------------------------------------------------------------


def jkn_grid(max_jk: int = 5, max_gap: int = 3):
    for j, k in itertools.product(range(1, max_jk + 1), repeat=2):
        for n in range(j + k, j + k + max_gap + 1):
            yield j, k, n


def sweep(which: str = "all", qs=DEFAULT_QS, max_jk: int = 5, max_gap: int = 3, max_ab: int = 10, a_values=None) -> list[BoundCheck]:
    """Run one family of checks (or ``"all"``) over the grid.

    ``a_values`` pins the parameter a instead of sweeping 1..max_ab.
    """
    if which != "all" and which not in BOUND_IDS:
        raise ValueError(f"unknown bound id {which!r}; choose from {', '.join(BOUND_IDS)} or all")
    selected = BOUND_IDS if which == "all" else (which,)
    out: list[BoundCheck] = []
    for q in qs:
        if "psi-min" in selected:
            for a in a_values or range(1, max_ab + 1):
                out.extend(check_psi_min_bounds(a, q))
        if "phi-min-upper" in selected or "phi-min-lower" in selected:
            for a, b in itertools.product(a_values or range(2, max_ab + 1), range(max_ab + 1)):
                if "phi-min-upper" in selected:
                    out.append(check_phi_min_upper(a, b, q))
                if "phi-min-lower" in selected:
                    out.append(check_phi_min_lower(a, b, q))
        if "phi-plus-lower" in selected:
            out.extend(check_phi_plus_lower(a, q) for a in a_values or range(2, max_ab + 1))
        if "summand" in selected:
            for j in range(2, max_jk + 1):
                for k in range(j, max_jk + 1):
                    out.extend(check_summand_monotonicity(j, k, m, q) for m in range(j))
        for j, k, n in jkn_grid(max_jk, max_gap):
            if "rho-hermitian" in selected:
                out.append(check_rho_h_bounds(j, k, n, q))
            if "rho-symplectic" in selected:
                out.append(check_rho_s_bound(j, k, n, q))
            if "literature" in selected:
                out.extend(check_literature_constants("hermitian", j, k, n, q))
                out.extend(check_literature_constants("symplectic", j, k, n, q))
    return sorted(out, key=BoundCheck.key)
