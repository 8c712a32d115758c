"""Symbolic verification of the double-counting recursions and structural identities.

Each check builds both sides from the closed forms evaluated at the
indeterminate ``Q`` and compares them exactly.  Quotients are compared by
cross-multiplication (:class:`~anzahl.qseries.RationalFunction`), never by
reducing to lowest terms.  A failed check keeps the difference polynomial
as its witness.

Symplectic recursions take half indices, like ``gamma_s``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import hermitian as H
from . import symplectic as S
from .errors import ParamOutOfRange, UndefinedParity
from .qseries import Q, LaurentPolynomial, RationalFunction, gauss, psi, qpow


@dataclass
class IdentityResult:
    name: str
    parameters: dict[str, int]
    holds: bool
    witness: LaurentPolynomial | None = None
    detail: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.holds

    def key(self) -> tuple:
        return (self.name, tuple(sorted(self.parameters.items())))


def _compare(name, params, lhs, rhs, detail=None) -> IdentityResult:
    diff = RationalFunction.coerce(lhs).cross_difference(RationalFunction.coerce(rhs))
    ok = diff.is_zero()
    return IdentityResult(name, params, ok, None if ok else diff, detail or [])


def _merge(name, params, parts: list[IdentityResult]) -> IdentityResult:
    bad = [p for p in parts if not p.holds]
    detail = [f"{p.name}: {'ok' if p.holds else 'FAILED'}" for p in parts]
    return IdentityResult(name, params, not bad, bad[0].witness if bad else None, detail)


def _count_or_zero(fn, *args):
    """A count whose parameters describe an impossible configuration is 0."""
    try:
        return fn(*args)
    except (ParamOutOfRange, UndefinedParity):
        return 0


def _require_recursion_range(i, j, n, what):
    if not (1 <= j <= n - 1 and 0 <= i <= min(j, n - j)):
        raise ParamOutOfRange(f"{what} recursion requires 1 <= j <= n-1 and 0 <= i <= min{{j, n-j}} (i={i}, j={j}, n={n})")


# -- hermitian -------------------------------------------------------------------


def _hb(a, b, n):
    """β_{a,b,n}: non-singular hyperplanes through an a-singular b-space."""
    return _count_or_zero(H.beta_h, a, b, n, n - 1, Q)


def _hg(a, b, n):
    return _count_or_zero(H.gamma_h_span, a, b, n, Q)


def _sign(e):
    return -1 if e % 2 else 1


def verify_hermitian_recursion(i: int, j: int, n: int) -> IdentityResult:
    """The three-term recursion for γ_{i,j,n}, in its α-form and its expanded form.

    Also checks the anchor β_{0,n-j,n} = q^{j-1}(q^j - (-1)^j)/(q+1) and the
    three coefficient evaluations that turn one form into the other.
    """
    _require_recursion_range(i, j, n, "hermitian")
    p = {"i": i, "j": j, "n": n}
    J = j - i
    b = _hb(i, j, n)
    d1, d2, d3 = _hb(i + 1, j - 1, n) - b, _hb(i, j - 1, n) - b, _hb(i - 1, j - 1, n) - b
    g1, g2, g3 = _hg(i + 1, j - 1, n - 1), _hg(i, j - 1, n - 1), _hg(i - 1, j - 1, n - 1)

    c1 = _count_or_zero(H.alpha_h, 1, J - 1, J, Q)
    c2 = _count_or_zero(H.alpha_h, 0, J - 1, J, Q)
    c3 = gauss(j, j - 1, Q * Q) - (gauss(J, J - 1, Q * Q) if J >= 1 else 0)
    e1 = RationalFunction((qpow(Q, J) - _sign(J)) * (qpow(Q, J - 1) - _sign(J - 1)), Q * Q - 1)
    e2 = RationalFunction(qpow(Q, J - 1) * (qpow(Q, J) - _sign(J)), Q + 1)
    e3 = RationalFunction(qpow(Q, 2 * J) * (qpow(Q, 2 * i) - 1), Q * Q - 1)

    anchor = H.beta_h(0, n - j, n, n - 1, Q)
    lhs = H.gamma_h_span(i, j, n, Q) * anchor
    rhs_alpha = sum((c * d * g for c, d, g in ((c1, d1, g1), (c2, d2, g2), (c3, d3, g3)) if c), 0 * Q)
    rhs_explicit = RationalFunction(0)
    for e, d, g in ((e1, d1, g1), (e2, d2, g2), (e3, d3, g3)):
        if not e.numerator.is_zero():
            rhs_explicit = rhs_explicit + e * (d * g)
    parts = [
        _compare("anchor", p, anchor, RationalFunction(qpow(Q, j - 1) * (qpow(Q, j) - _sign(j)), Q + 1)),
        _compare("coefficient-1", p, c1, e1),
        _compare("coefficient-2", p, c2, e2),
        _compare("coefficient-3", p, c3, e3),
        _compare("alpha-form", p, lhs, rhs_alpha),
        _compare("explicit-form", p, lhs, rhs_explicit),
    ]
    return _merge("hermitian-recursion", p, parts)


def _hermitian_differences(i, j, n):
    """(name, β-expression, displayed closed form, general-β values or None)."""
    e = n - i - j
    pre = qpow(Q, n - j + i - 1)
    raw = lambda a, b: RationalFunction(qpow(Q, n - b + a - 1) * (qpow(Q, n - a - b) - _sign(n - a - b)), Q + 1)  # noqa: E731
    rows = [
        ("beta(i+1,j-1)-beta(i,j)", (i + 1, j - 1), pre * (qpow(Q, e) - _sign(e)) * (Q - 1)),
        ("beta(i,j-1)-beta(i,j)", (i, j - 1), pre * (qpow(Q, e) * (Q - 1) + _sign(e))),
    ]
    if i >= 1:
        rows.append(("beta(i-1,j-1)-beta(i,j)", (i - 1, j - 1), pre * qpow(Q, e) * (Q - 1)))
    out = []
    for name, (a, b), display in rows:
        hyperplane = raw(a, b) - raw(i, j)
        try:
            general = H.beta_h(a, b, n, n - 1, Q) - H.beta_h(i, j, n, n - 1, Q)
        except ParamOutOfRange:
            general = None
        out.append((name, hyperplane, display, general))
    return out


# -- symplectic ------------------------------------------------------------------


def _sb(a, b, n):
    """β_{a,b,2n,2n-2} in raw a, b."""
    return _count_or_zero(S.beta_s, a, b, 2 * n, 2 * n - 2, Q)


def _sg(a, b, n):
    """γ_{2a,2b,2n} in half indices."""
    return _count_or_zero(S.gamma_s_span, a, b, n, Q)


def _symplectic_differences(i, j, n):
    """The four combinations of codimension-2 β values in the recursion."""
    B = lambda a, b: _sb(a, b, n)  # noqa: E731
    return (
        B(2 * i + 2, 2 * j - 2) - (Q + 1) * B(2 * i + 1, 2 * j - 1) + Q * B(2 * i, 2 * j),
        B(2 * i, 2 * j - 2) - (Q + 1) * B(2 * i + 1, 2 * j - 1) + Q * B(2 * i, 2 * j),
        B(2 * i, 2 * j - 2) - B(2 * i + 1, 2 * j - 1) - Q * B(2 * i - 1, 2 * j - 1) + Q * B(2 * i, 2 * j),
        B(2 * i - 2, 2 * j - 2) - (Q + 1) * B(2 * i - 1, 2 * j - 1) + Q * B(2 * i, 2 * j),
    )


def _symplectic_displays(i, j, n):
    return (
        qpow(Q, 2 * (n - j + i) - 1) * (Q - 1) * (qpow(Q, 2 * (n - j - i)) - 1),
        qpow(Q, 2 * (n - j + i) - 1) * (qpow(Q, 2 * (n - j - i)) * (Q - 1) + 1),
        qpow(Q, 4 * (n - j) - 1) * (Q - 1),
        qpow(Q, 4 * (n - j) - 1) * (Q - 1),
    )


def verify_symplectic_recursion(i: int, j: int, n: int) -> IdentityResult:
    """The four-term recursion for γ_{2i,2j,2n}, its merged three-term form, and the algebra between them."""
    _require_recursion_range(i, j, n, "symplectic")
    p = {"i": i, "j": j, "n": n}
    J = j - i
    D = _symplectic_differences(i, j, n)
    g_up, g_mid, g_down = _sg(i + 1, j - 1, n - 1), _sg(i, j - 1, n - 1), _sg(i - 1, j - 1, n - 1)

    a2 = _count_or_zero(S.alpha_s, 2, 2 * J - 2, 2 * J, Q)
    a0 = _count_or_zero(S.alpha_s, 0, 2 * J - 2, 2 * J, Q)
    c3 = gauss(2 * i, 1, Q) * qpow(Q, 2 * J - 1) * gauss(2 * J, 1, Q) if i and J else 0 * Q
    c4 = gauss(2 * i, 2, Q) * qpow(Q, 4 * J)
    four = [(a2, D[0], g_up), (a0, D[1], g_mid), (c3, D[2], g_mid), (c4, D[3], g_down)]

    anchor = S.beta_s(0, 2 * n - 2 * j, 2 * n, 2 * n - 2, Q)
    lhs = S.gamma_s_span(i, j, n, Q) * anchor
    rhs2 = sum((c * d * g for c, d, g in four if c), 0 * Q)

    q2 = Q * Q
    t1 = RationalFunction((qpow(Q, 2 * J) - 1) * (qpow(Q, 2 * (J - 1)) - 1) * qpow(Q, 2 * (n - j + i) - 1) * (qpow(Q, 2 * (n - j - i)) - 1), q2 - 1)
    t2 = RationalFunction(
        qpow(Q, 2 * n - 3) * (qpow(Q, 2 * J) - 1) * (qpow(Q, 2 * (n - j - i)) * (qpow(Q, 2 * (i + 1)) + qpow(Q, 2 * i + 1) - q2 - 1) + 1),
        q2 - 1,
    )
    t3 = RationalFunction((qpow(Q, 2 * i) - 1) * (qpow(Q, 2 * i - 1) - 1) * qpow(Q, 4 * (n - i) - 1), q2 - 1)
    rhs3 = t1 * g_up + t2 * g_mid + t3 * g_down

    # the intermediate form: α's rewritten, β combinations replaced by their displays
    disp = _symplectic_displays(i, j, n)
    a2_form = gauss(J, 2, q2) * psi("+", 1, 2, Q) if J >= 2 else 0 * Q
    a0_form = qpow(Q, 2 * (J - 1)) * gauss(J, 1, q2) if J >= 1 else 0 * Q
    mid = (
        a2_form * disp[0] * g_up
        + a0_form * disp[1] * g_mid
        + c3 * disp[2] * g_mid
        + c4 * disp[3] * g_down
    )
    parts = [
        _compare("anchor", p, anchor, RationalFunction(qpow(Q, 2 * j - 2) * (qpow(Q, 2 * j) - 1), q2 - 1)),
        _compare("alpha-2-form", p, a2, a2_form),
        _compare("alpha-0-form", p, a0, a0_form),
        _compare("four-term", p, lhs, rhs2),
        _compare("intermediate", p, lhs, mid),
        _compare("three-term", p, lhs, rhs3),
    ]
    return _merge("symplectic-recursion", p, parts)


def verify_beta_differences(geometry: str, i: int, j: int, n: int) -> IdentityResult:
    """The printed β-difference evaluations used in the recursions.

    Each display is checked against the codimension-1 (hermitian) or
    codimension-2 (symplectic) closed form, and also against the general β
    formula whenever every β involved lies in its domain.
    """
    _require_recursion_range(i, j, n, geometry)
    p = {"i": i, "j": j, "n": n}
    parts = []
    if geometry == "hermitian":
        for name, hyperplane, display, general in _hermitian_differences(i, j, n):
            parts.append(_compare(name, p, hyperplane, display))
            if general is not None:
                parts.append(_compare(name + " (general beta)", p, general, display))
    elif geometry == "symplectic":
        q2 = Q * Q
        raw = lambda a, b: qpow(Q, 2 * (n - (b - a) // 2 - 1)) * gauss(n - b + (b - a) // 2, 1, q2)  # noqa: E731
        names = ("D1", "D2", "D3", "D4")
        combos = (
            lambda B: B(2 * i + 2, 2 * j - 2) - (Q + 1) * B(2 * i + 1, 2 * j - 1) + Q * B(2 * i, 2 * j),
            lambda B: B(2 * i, 2 * j - 2) - (Q + 1) * B(2 * i + 1, 2 * j - 1) + Q * B(2 * i, 2 * j),
            lambda B: B(2 * i, 2 * j - 2) - B(2 * i + 1, 2 * j - 1) - Q * B(2 * i - 1, 2 * j - 1) + Q * B(2 * i, 2 * j),
            lambda B: B(2 * i - 2, 2 * j - 2) - (Q + 1) * B(2 * i - 1, 2 * j - 1) + Q * B(2 * i, 2 * j),
        )
        displays = _symplectic_displays(i, j, n)
        for t, (name, combo, display) in enumerate(zip(names, combos, displays)):
            if t >= 2 and i == 0:
                continue  # these involve a negative singular dimension
            parts.append(_compare(name, p, combo(raw), display))
            try:
                general = combo(lambda a, b: S.beta_s(a, b, 2 * n, 2 * n - 2, Q))
            except (ParamOutOfRange, UndefinedParity):
                continue
            parts.append(_compare(name + " (general beta)", p, general, display))
    else:
        raise ValueError(f"unknown geometry {geometry!r}")
    return _merge(f"{geometry}-beta-differences", p, parts)


# -- structural identities ---------------------------------------------------------


def verify_double_count(geometry: str, i: int, j: int, n: int, k: int) -> IdentityResult:
    """α_{i,j,n} β_{i,j,n,k} = α_{0,k,n} α_{i,j,k}; symplectic arguments are raw (n, k even)."""
    p = {"i": i, "j": j, "n": n, "k": k}
    if geometry == "hermitian":
        lhs = H.alpha_h(i, j, n, Q) * H.beta_h(i, j, n, k, Q)
        rhs = H.alpha_h(0, k, n, Q) * H.alpha_h(i, j, k, Q)
    else:
        lhs = S.alpha_s(i, j, n, Q) * S.beta_s(i, j, n, k, Q)
        rhs = S.alpha_s(0, k, n, Q) * S.alpha_s(i, j, k, Q)
    return _compare(f"{geometry}-double-count", p, lhs, rhs)


def verify_gamma_factorization(geometry: str, i: int, j: int, n: int, k: int) -> IdentityResult:
    """Closed form of γ_{i,j,n,k} against β_{i,j,n,k+j} γ_{i,j,k+j} (symplectic: half indices)."""
    p = {"i": i, "j": j, "n": n, "k": k}
    if geometry == "hermitian":
        H.gamma_h(i, j, n, k, Q)  # domain check
        closed = H._gamma_h_closed(i, j, n, k, Q)
        product = 0 if i > k else H._beta_h_raw(i, j, n, k + j, Q) * H._gamma_h_span_raw(i, j, k + j, Q)
    else:
        S.gamma_s(i, j, n, k, Q)
        closed = S._gamma_s_closed(i, j, n, k, Q)
        product = 0 if i > k else S._beta_s_raw(j - i, 2 * j, n, k + j, Q) * S._gamma_s_span_raw(i, j, k + j, Q)
    return _compare(f"{geometry}-gamma-factorization", p, closed, product)


def verify_rho_symmetry(geometry: str, j: int, k: int, n: int) -> IdentityResult:
    """ρ_{j,k,n} = ρ_{k,j,n} and ρ = γ/α (symplectic: half indices)."""
    p = {"j": j, "k": k, "n": n}
    if geometry == "hermitian":
        a, b = H._rho_h_formula(j, k, n, Q), H._rho_h_formula(k, j, n, Q)
        ratio = RationalFunction(H.gamma_h(0, j, n, k, Q), H.alpha_h(0, k, n, Q))
    else:
        a, b = S._rho_s_formula(j, k, n, Q), S._rho_s_formula(k, j, n, Q)
        ratio = RationalFunction(S.gamma_s(0, j, n, k, Q), S.alpha_s(0, 2 * k, 2 * n, Q))
    return _merge(f"{geometry}-rho-symmetry", p, [_compare("symmetry", p, a, b), _compare("gamma-over-alpha", p, a, ratio)])


def verify_partition(geometry: str, j: int, n: int, q=Q) -> IdentityResult:
    """Σ_i α_{i,j,n} equals the number of j-spaces (symplectic n is the raw dimension)."""
    p = {"j": j, "n": n}
    if geometry == "hermitian":
        total = sum(H.alpha_h(i, j, n, q) for i in range(min(j, n - j) + 1))
        expected = gauss(n, j, q * q)
    else:
        total = 0
        for i in range(j + 1):
            total = total + _count_or_zero(S.alpha_s, i, j, n, q)
        expected = gauss(n, j, q)
    return _compare(f"{geometry}-partition", p, total, expected)


# -- sweeps ------------------------------------------------------------------------


def recursion_tuples(max_j: int, max_n: int):
    for n in range(2, max_n + 1):
        for j in range(1, min(max_j, n - 1) + 1):
            for i in range(min(j, n - j) + 1):
                yield i, j, n


def identity_sweep(geometry: str, max_j: int, max_n: int) -> list[IdentityResult]:
    """Recursion plus β-difference checks over every admissible (i, j, n)."""
    verify = verify_hermitian_recursion if geometry == "hermitian" else verify_symplectic_recursion
    out = []
    for i, j, n in recursion_tuples(max_j, max_n):
        out.append(verify(i, j, n))
        out.append(verify_beta_differences(geometry, i, j, n))
    return out


def structural_sweep(max_index: int = 8, max_partition_dim: int = 6) -> list[IdentityResult]:
    """Double counts, γ factorization, ρ symmetry, β anchors and partitions."""
    out = []
    for n in range(1, max_index + 1):
        for j, i in itertools.product(range(n + 1), repeat=2):
            for k in range(j + i, n):
                if i <= min(j, n - j):
                    out.append(verify_double_count("hermitian", i, j, n, k))
        for j in range(n):
            for i in range(min(j, n - j) + 1):
                for k in range(n - j + 1):
                    out.append(verify_gamma_factorization("hermitian", i, j, n, k))
                    out.append(verify_gamma_factorization("symplectic", i, j, n, k))
        for j, k in itertools.product(range(n), repeat=2):
            if j + k <= n:
                out.append(verify_rho_symmetry("hermitian", j, k, n))
                out.append(verify_rho_symmetry("symplectic", j, k, n))
        for j in range(1, n):
            out.append(_compare("hermitian-beta-anchor", {"j": j, "n": n}, H.beta_h(0, n - j, n, n - 1, Q),
                                RationalFunction(qpow(Q, j - 1) * (qpow(Q, j) - _sign(j)), Q + 1)))
            out.append(_compare("symplectic-beta-anchor", {"j": j, "n": n}, S.beta_s(0, 2 * n - 2 * j, 2 * n, 2 * n - 2, Q),
                                RationalFunction(qpow(Q, 2 * j - 2) * (qpow(Q, 2 * j) - 1), Q * Q - 1)))
        for j in range(n + 1):
            out.append(verify_partition("hermitian", j, n))
    for two_n in range(2, 2 * max_index + 1, 2):
        for k in range(0, two_n - 1, 2):
            for j in range(k + 1):
                for i in range(j % 2, j + 1, 2):
                    try:
                        out.append(verify_double_count("symplectic", i, j, two_n, k))
                    except (ParamOutOfRange, UndefinedParity):
                        continue
    for two_n in range(2, max_partition_dim + 1, 2):
        for j in range(two_n + 1):
            for q in (2, 3, 4, 5):
                out.append(verify_partition("symplectic", j, two_n, q))
            out.append(verify_partition("symplectic", j, two_n))
    return out
