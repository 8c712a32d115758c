from fractions import Fraction

import pytest

from anzahl.bounds import (
    DEFAULT_QS,
    EQ,
    check_literature_constants,
    check_phi_min_lower,
    check_phi_min_upper,
    check_phi_plus_lower,
    check_psi_min_bounds,
    check_rho_h_bounds,
    check_rho_s_bound,
    check_summand_monotonicity,
    jkn_grid,
    rho_h_one_closed,
    rho_h_one_closed_general,
    sweep,
)
from anzahl.errors import ParamOutOfRange
from anzahl.hermitian import rho_h


def _by_id(checks):
    return {c.bound_id: c for c in checks}


@pytest.mark.parametrize("q", DEFAULT_QS)
def test_psi_min_base_case_is_tight(q):
    for c in check_psi_min_bounds(1, q):
        assert c.holds and c.is_equality


def test_psi_min_examples():
    first, _ = check_psi_min_bounds(2, 2)
    assert (first.lhs, first.rhs) == (3, 3)
    first, _ = check_psi_min_bounds(3, 2)
    assert (first.lhs, first.rhs) == (21, 20) and first.holds


def test_phi_examples():
    up = check_phi_min_upper(2, 0, 2)
    assert up.lhs == 9 and up.rhs == 9 and up.holds and up.is_equality
    low = check_phi_min_lower(2, 0, 2)
    assert (low.lhs, low.rhs) == (9, 8) and low.holds
    plus = check_phi_plus_lower(2, 2)
    assert (plus.lhs, plus.rhs) == (5, 4) and plus.holds


def test_check_domains():
    with pytest.raises(ParamOutOfRange):
        check_psi_min_bounds(0, 2)
    with pytest.raises(ParamOutOfRange):
        check_phi_min_upper(1, 0, 2)
    with pytest.raises(ParamOutOfRange):
        check_summand_monotonicity(1, 1, 0, 2)


@pytest.mark.parametrize("j, k, m, q", [(2, 2, 0, 2), (2, 2, 1, 2), (3, 5, 2, 3)])
def test_summand_examples(j, k, m, q):
    assert check_summand_monotonicity(j, k, m, q).holds


def test_rho_hermitian_examples():
    c = check_rho_h_bounds(1, 1, 2, 3)
    assert c.relation == EQ and c.holds and c.lhs == Fraction(5, 6)
    c = check_rho_h_bounds(2, 2, 4, 2)
    assert c.holds and (c.lhs, c.rhs) == (Fraction(43, 60), Fraction(43, 64))
    c = check_rho_h_bounds(1, 1, 3, 2)
    assert c.relation == EQ and c.holds and c.lhs == Fraction(1, 6)


def test_rho_symplectic_examples():
    c = check_rho_s_bound(1, 1, 2, 2)
    assert (c.lhs, c.rhs) == (Fraction(1, 2), Fraction(3, 8)) and c.holds
    c = check_rho_s_bound(1, 1, 3, 2)
    assert c.rhs == Fraction(3, 8) and c.holds
    assert check_rho_s_bound(2, 2, 4, 3).holds


def test_literature_examples():
    herm = _by_id(check_literature_constants("hermitian", 1, 1, 2, 3))
    assert herm["hermitian-3/2"].holds and herm["hermitian-3/2"].is_equality
    assert herm["hermitian-rho112"].holds
    sym = _by_id(check_literature_constants("symplectic", 1, 1, 2, 2))
    assert sym["symplectic-10/7"].rhs == Fraction(2, 7) and sym["symplectic-10/7"].holds
    assert (sym["symplectic-product"].lhs, sym["symplectic-product"].rhs) == (Fraction(1, 2), Fraction(3, 8))


def test_nine_fifths_fails_at_the_excluded_point():
    # the quoted 9/5 constant does not hold at (j, k, n, q) = (1, 1, 2, 2)
    assert rho_h(1, 1, 2, 2) == Fraction(1, 2) < 1 - Fraction(9, 5) / 4
    assert "hermitian-9/5" not in _by_id(check_literature_constants("hermitian", 1, 1, 2, 2))


@pytest.mark.parametrize("q", DEFAULT_QS)
def test_closed_forms_agree_with_rho(q):
    for k in range(1, 6):
        assert rho_h_one_closed(k, q) == rho_h(1, k, k + 1, q)
        for n in range(k + 2, k + 5):
            assert rho_h_one_closed_general(k, n, q) == rho_h(1, k, n, q)


def test_grid_shape():
    grid = list(jkn_grid(5, 3))
    assert len(grid) == 25 * 4
    assert all(j + k <= n <= j + k + 3 for j, k, n in grid)


def test_single_q_sweep_holds():
    checks = sweep("all", qs=(2,))
    assert checks and all(c.holds for c in checks)


def test_sweep_a_filter():
    checks = sweep("psi-min", qs=(2,), a_values=[1])
    assert len(checks) == 2 and all(c.is_equality for c in checks)
