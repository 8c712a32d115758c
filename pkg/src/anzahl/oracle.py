"""Brute-force ground truth for α, β, γ, ρ and the Segre count.

Everything here enumerates subspaces and classifies them with the form;
no closed-form count is consulted, except by :func:`run_oracle`, which
puts the two side by side.

Dimensions are raw ambient dimensions for both geometries (a symplectic
form on GF(q)^6 has ``n = 6``).  A form's field is GF(q) for symplectic and
GF(q^2) for hermitian forms; :func:`base_parameter` recovers q.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any

from .errors import DegenerateForm, InstanceTooLarge, NoSuchSubspace, ParamOutOfRange, UndefinedParity
from .field import FieldDescriptor
from .forms import HERMITIAN, SYMPLECTIC, Form, classify, radical
from .qseries import gauss
from .subspaces import (
    Subspace,
    enumerate_subspaces,
    enumerate_superspaces,
    pivot_profiles,
    rank,
    span_sum,
)

DEFAULT_BUDGET = 10**7
STATISTICS = ("alpha", "beta", "gamma", "rho", "segre")


def base_parameter(form: Form) -> int:
    return form.field.sqrt_order if form.kind == HERMITIAN else form.field.order


def _require_form(form: Form) -> None:
    if not form.nondegenerate:
        raise DegenerateForm("the oracle needs a non-degenerate form")


def _grassmann(n: int, j: int, order: int) -> int:
    return gauss(n, j, order) if 0 <= j <= n else 0


def estimate_cost(statistic: str, n: int, order: int, j: int, k: int = 0) -> int:
    """Upper bound on the number of subspaces (or pairs) an oracle call will touch."""
    g = lambda d: _grassmann(n, d, order)  # noqa: E731
    if statistic == "alpha":
        return g(j)
    if statistic == "beta":
        return g(j) + _grassmann(n - j, k - j, order)
    if statistic == "gamma":
        return g(j) + g(k)
    if statistic == "rho":
        return g(j) * g(k) + 2 * (g(j) + g(k))
    if statistic == "segre":
        return 1 + g(j)
    raise ValueError(f"unknown statistic {statistic!r}")


def _guard(cost: int, budget: int | None, what: str) -> None:
    if budget is not None and cost > budget:
        raise InstanceTooLarge(f"{what}: estimated {cost} enumerated objects exceeds budget {budget}")


# Workers live at module level so they can be pickled for a process pool.

def _chunks(profiles, jobs):
    parts = [profiles[t::jobs] for t in range(jobs)]
    return [p for p in parts if p]


def _alpha_worker(form: Form, j: int, profiles) -> dict[int, int]:
    counts: dict[int, int] = {}
    for pi in enumerate_subspaces(form.ambient_dim, j, form.field, profiles):
        i = radical(form, pi).dim
        counts[i] = counts.get(i, 0) + 1
    return counts


def _gamma_worker(form: Form, pi: Subspace, k: int, profiles) -> int:
    good = 0
    for sigma in enumerate_subspaces(form.ambient_dim, k, form.field, profiles):
        if classify(form, sigma).singularity_index:
            continue
        s = span_sum(pi, sigma)
        if s.dim != pi.dim + k:
            continue
        if classify(form, s).singularity_index == 0:
            good += 1
    return good


def _merge_dicts(parts):
    out: dict[int, int] = {}
    for part in parts:
        for key, v in part.items():
            out[key] = out.get(key, 0) + v
    return out


def _fan_out(fn, args, profiles, jobs):
    if jobs <= 1 or len(profiles) < 2:
        return [fn(*args, profiles)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(fn, *args, part) for part in _chunks(profiles, jobs)]
        return [f.result() for f in futures]


@lru_cache(maxsize=64)
def singularity_distribution(form: Form, j: int, jobs: int = 1) -> dict[int, int]:
    """Map i -> number of i-singular j-spaces, by full enumeration."""
    _require_form(form)
    profiles = pivot_profiles(form.ambient_dim, j)
    return _merge_dicts(_fan_out(_alpha_worker, (form, j), profiles, jobs))


def oracle_alpha(form: Form, i: int, j: int, budget: int | None = DEFAULT_BUDGET, jobs: int = 1) -> int:
    _require_form(form)
    n = form.ambient_dim
    if not 0 <= j <= n:
        raise ParamOutOfRange(f"oracle alpha requires 0 <= j <= n (j={j}, n={n})")
    _guard(estimate_cost("alpha", n, form.field.order, j), budget, "alpha")
    return singularity_distribution(form, j, jobs).get(i, 0)


def representatives(form: Form, i: int, j: int, count: int = 1) -> list[Subspace]:
    """The first ``count`` j-spaces of index i in enumeration order."""
    _require_form(form)
    found = []
    for pi in enumerate_subspaces(form.ambient_dim, j, form.field):
        if radical(form, pi).dim == i:
            found.append(pi)
            if len(found) == count:
                return found
    if not found:
        raise NoSuchSubspace(f"no {i}-singular {j}-space for this form")
    raise NoSuchSubspace(f"only {len(found)} {i}-singular {j}-spaces, {count} requested")


def canonical_representative(form: Form, i: int, j: int) -> Subspace:
    return representatives(form, i, j, 1)[0]


def beta_from(form: Form, pi: Subspace, k: int) -> int:
    """Non-singular k-spaces containing ``pi``."""
    return sum(1 for s in enumerate_superspaces(pi, k) if classify(form, s).singularity_index == 0)


def gamma_from(form: Form, pi: Subspace, k: int, jobs: int = 1) -> int:
    """Non-singular k-spaces σ with π ∩ σ = 0 and ⟨π, σ⟩ non-singular."""
    profiles = pivot_profiles(form.ambient_dim, k)
    return sum(_fan_out(_gamma_worker, (form, pi, k), profiles, jobs))


def oracle_beta(form: Form, i: int, j: int, k: int, budget: int | None = DEFAULT_BUDGET, jobs: int = 1) -> int:
    _require_form(form)
    n = form.ambient_dim
    if not 0 <= j <= k <= n:
        raise ParamOutOfRange(f"oracle beta requires 0 <= j <= k <= n (j={j}, k={k}, n={n})")
    _guard(estimate_cost("beta", n, form.field.order, j, k), budget, "beta")
    return beta_from(form, canonical_representative(form, i, j), k)


def oracle_gamma(form: Form, i: int, j: int, k: int, budget: int | None = DEFAULT_BUDGET, jobs: int = 1) -> int:
    _require_form(form)
    n = form.ambient_dim
    if not (0 <= j and 0 <= k and j + k <= n):
        raise ParamOutOfRange(f"oracle gamma requires j + k <= n (j={j}, k={k}, n={n})")
    _guard(estimate_cost("gamma", n, form.field.order, j, k), budget, "gamma")
    return gamma_from(form, canonical_representative(form, i, j), k, jobs)


@lru_cache(maxsize=32)
def _nonsingular_with_columns(form: Form, k: int):
    """Non-singular k-spaces as (rows, columns G·θ(row)) pairs."""
    out = []
    for s in enumerate_subspaces(form.ambient_dim, k, form.field):
        if classify(form, s).singularity_index == 0:
            out.append((s.rows, tuple(tuple(form._gram_times_theta(r)) for r in s.rows)))
    return tuple(out)


def _pair_worker(form: Form, left, right, dim: int) -> int:
    f = form.field
    add, mul = f.add_table, f.mul_table

    def dot(u, v):
        acc = 0
        for a, b in zip(u, v):
            if a and b:
                acc = add[acc][mul[a][b]]
        return acc

    good = 0
    for rows_a, cols_a in left:
        for rows_b, cols_b in right:
            rows = rows_a + rows_b
            cols = cols_a + cols_b
            gram = [[dot(u, c) for c in cols] for u in rows]
            if rank(gram, dim, f) == dim:
                good += 1
    return good


def _rho_pairs(form: Form, j: int, k: int, jobs: int) -> tuple[int, int]:
    left = _nonsingular_with_columns(form, j)
    right = _nonsingular_with_columns(form, k)
    total = len(left) * len(right)
    if jobs <= 1 or len(left) < 2:
        return _pair_worker(form, left, right, j + k), total
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(_pair_worker, form, left[t::jobs], right, j + k) for t in range(jobs)]
        return sum(fu.result() for fu in futures), total


def oracle_rho(form: Form, j: int, k: int, budget: int | None = DEFAULT_BUDGET, jobs: int = 1) -> Fraction:
    """|T_{j,k}| / |S_{j,k}| over ordered pairs of non-singular spaces.

    A pair is good when the Gram matrix of the stacked bases has full rank
    j + k (this forces trivial intersection and a non-singular span).  The
    result is cross-checked against the γ/α ratio from the other oracles.
    """
    _require_form(form)
    n = form.ambient_dim
    if not (0 <= j <= n - 1 and 0 <= k <= n - 1 and j + k <= n):
        raise ParamOutOfRange(f"oracle rho requires 0 <= j,k <= n-1 and j+k <= n (j={j}, k={k}, n={n})")
    _guard(estimate_cost("rho", n, form.field.order, j, k), budget, "rho")
    good, total = _rho_pairs(form, j, k, jobs)
    if total == 0:
        raise NoSuchSubspace(f"no non-singular {j}- or {k}-spaces for this form")
    value = Fraction(good, total)
    ratio = Fraction(gamma_from(form, canonical_representative(form, 0, j), k, jobs), oracle_alpha(form, 0, k, None, jobs))
    assert value == ratio, f"pair count {value} disagrees with gamma/alpha ratio {ratio}"
    return value


def oracle_segre(n: int, k: int, j: int, field: FieldDescriptor, budget: int | None = DEFAULT_BUDGET) -> int:
    """j-spaces meeting the first k-space of the enumeration trivially."""
    if not (0 <= j and 0 <= k and j + k <= n):
        raise ParamOutOfRange(f"segre count requires j + k <= n (j={j}, k={k}, n={n})")
    _guard(estimate_cost("segre", n, field.order, j, k), budget, "segre")
    fixed = next(enumerate_subspaces(n, k, field))
    return sum(1 for s in enumerate_subspaces(n, j, field) if span_sum(fixed, s).dim == j + k)


# -- reports ---------------------------------------------------------------


@dataclass
class OracleReport:
    statistic: str
    geometry: str
    parameters: dict[str, int]
    q: int
    oracle_value: Any = None
    formula_value: Any = None
    enumerated_objects: int = 0
    elapsed: float = 0.0
    skipped: str | None = None
    error: str | None = None

    @property
    def agree(self) -> bool:
        return self.skipped is None and self.error is None and self.oracle_value == self.formula_value

    @property
    def status(self) -> str:
        if self.skipped is not None:
            return "skipped"
        return "pass" if self.agree else "fail"

    def key(self) -> tuple:
        return (self.geometry, self.q, self.statistic, tuple(sorted(self.parameters.items())))


def formula_value(geometry: str, statistic: str, params: dict[str, int], q):
    """The closed-form value matching an oracle call with the same raw parameters."""
    from . import hermitian as H
    from . import symplectic as S

    n, i, j, k = params.get("n"), params.get("i"), params.get("j"), params.get("k")
    if statistic == "segre":
        from .qseries import segre_count

        return segre_count(n, k, j, q)
    if geometry == HERMITIAN:
        return {
            "alpha": lambda: H.alpha_h(i, j, n, q),
            "beta": lambda: H.beta_h(i, j, n, k, q),
            "gamma": lambda: H.gamma_h(i, j, n, k, q),
            "rho": lambda: H.rho_h(j, k, n, q),
        }[statistic]()
    if geometry == SYMPLECTIC:
        return {
            "alpha": lambda: S.alpha_s(i, j, n, q),
            "beta": lambda: S.beta_s(i, j, n, k, q),
            "gamma": lambda: S.gamma_s_raw(i, j, n, k, q),
            "rho": lambda: S.rho_s_raw(j, k, n, q),
        }[statistic]()
    raise ValueError(f"unknown geometry {geometry!r}")


def run_oracle(form: Form, statistic: str, params: dict[str, int], budget: int | None = DEFAULT_BUDGET, jobs: int = 1) -> OracleReport:
    q = base_parameter(form)
    n = form.ambient_dim
    params = {"n": n, **params}
    report = OracleReport(statistic, form.kind, params, q)
    report.formula_value = formula_value(form.kind, statistic, params, q)
    i, j, k = params.get("i", 0), params.get("j", 0), params.get("k", 0)
    cost = estimate_cost(statistic, n, form.field.order, j, k)
    if budget is not None and cost > budget:
        report.skipped = f"estimated {cost} enumerated objects exceeds budget {budget}"
        return report
    start = time.perf_counter()
    try:
        if statistic == "alpha":
            report.oracle_value = oracle_alpha(form, i, j, budget, jobs)
        elif statistic == "beta":
            report.oracle_value = oracle_beta(form, i, j, k, budget, jobs)
        elif statistic == "gamma":
            report.oracle_value = oracle_gamma(form, i, j, k, budget, jobs)
        elif statistic == "rho":
            report.oracle_value = oracle_rho(form, j, k, budget, jobs)
        elif statistic == "segre":
            report.oracle_value = oracle_segre(n, k, j, form.field, budget)
        else:
            raise ValueError(f"unknown statistic {statistic!r}")
    except (NoSuchSubspace, AssertionError) as exc:
        report.error = f"{type(exc).__name__}: {exc}"
    report.elapsed = time.perf_counter() - start
    report.enumerated_objects = cost
    return report


def _fixed_space_exists(geometry: str, n: int, i: int, j: int) -> bool:
    # beta and gamma need a representative i-singular j-space to fix
    try:
        return not formula_value(geometry, "alpha", {"n": n, "i": i, "j": j}, 2) == 0
    except (ParamOutOfRange, UndefinedParity):
        return False


def campaign_tuples(geometry: str, n: int, statistics=("alpha", "beta", "gamma", "rho")):
    """Every (statistic, params) with params in the closed-form domain, in lexicographic order.

    Domain membership is decided by asking the formula itself with a
    symbolic q, so the sweep and the formulas can never drift apart.
    """
    from .qseries import Q

    out = []
    for stat in statistics:
        for i, j, k in itertools.product(range(n + 1), repeat=3):
            if stat == "alpha" and k:
                continue
            if stat == "rho" and i:
                continue
            params = {"n": n, "i": i, "j": j, "k": k}
            if stat == "alpha":
                params.pop("k")
            if stat == "rho":
                params.pop("i")
            if stat in ("beta", "gamma") and not _fixed_space_exists(geometry, n, i, j):
                continue
            try:
                formula_value(geometry, stat, params, Q)
            except (ParamOutOfRange, UndefinedParity):
                continue
            out.append((stat, params))
    return out


def run_campaign(form: Form, statistics=("alpha", "beta", "gamma", "rho"), budget: int | None = DEFAULT_BUDGET, jobs: int = 1) -> list[OracleReport]:
    reports = []
    for stat, params in campaign_tuples(form.kind, form.ambient_dim, statistics):
        p = {key: v for key, v in params.items() if key != "n"}
        reports.append(run_oracle(form, stat, p, budget, jobs))
    return sorted(reports, key=OracleReport.key)
