from fractions import Fraction

import pytest

from anzahl.errors import ParamOutOfRange
from anzahl.hermitian import alpha_h, beta_h, beta_h_hyperplane, gamma_h, gamma_h_span, hermitian_field_order, rho_h
from anzahl.qseries import Q, RationalFunction


def test_field_order_is_q_squared():
    assert hermitian_field_order(2) == 4
    assert hermitian_field_order(3) == 9


def test_alpha_examples():
    assert alpha_h(1, 1, 3, 2) == 9
    assert alpha_h(1, 1, 3, Q) == Q**3 + 1
    assert alpha_h(0, 1, 2, Q) == Q**2 - Q
    assert alpha_h(0, 1, 2, 2) == 2
    for n in range(1, 7):
        assert alpha_h(0, n, n, Q) == 1


@pytest.mark.parametrize("args", [(2, 1, 2), (-1, 1, 3), (0, 4, 3), (2, 3, 4)])
def test_alpha_domain(args):
    with pytest.raises(ParamOutOfRange):
        alpha_h(*args, 2)


def test_beta_examples():
    assert beta_h(0, 1, 3, 2, 2) == 2
    assert beta_h(0, 1, 3, 2, Q) == Q * (Q - 1)
    for n in range(2, 6):
        for j in range(n):
            assert beta_h(0, j, n, j, Q) == 1


def test_beta_hyperplane_form():
    for n in range(2, 8):
        for j in range(0, n):
            for i in range(0, min(j, n - j) + 1):
                if j + i <= n - 1:
                    assert beta_h(i, j, n, n - 1, Q) == beta_h_hyperplane(i, j, n, Q)


def test_gamma_span_examples():
    for n in range(1, 6):
        assert gamma_h_span(0, 0, n, Q) == 1
    assert gamma_h_span(0, 1, 2, Q) == Q**2 - Q - 1
    assert gamma_h_span(0, 1, 2, 2) == 1


def test_gamma_examples():
    assert gamma_h(0, 1, 3, 1, 2) == 2
    for n in range(1, 5):
        for j in range(n):
            assert gamma_h(0, j, n, 0, Q) == 1
    # gamma_{0,2,4,2} = alpha_{0,2,4} * rho_{2,2,4}
    assert gamma_h(0, 2, 4, 2, 2) == alpha_h(0, 2, 4, 2) * Fraction(43, 60)


def test_rho_examples():
    for n in range(1, 6):
        for k in range(n):
            assert rho_h(0, k, n, 3) == 1
    assert rho_h(1, 1, 2, 3) == Fraction(5, 6)
    assert rho_h(2, 2, 4, 2) == Fraction(43, 60)
    assert rho_h(1, 1, 3, 2) == Fraction(1, 6)


def test_rho_symbolic_matches_numeric():
    r = rho_h(1, 1, 2, Q)
    assert isinstance(r, RationalFunction)
    for q in (2, 3, 4, 5):
        assert r(q) == rho_h(1, 1, 2, q)
    # closed form 1 - q^-2 * q/(q-1)
    assert r == 1 - RationalFunction(Q, Q**2 * (Q - 1))


@pytest.mark.parametrize("n", range(1, 9))
def test_rho_symmetric_and_in_unit_interval(n):
    for q in (2, 3, 4, 5):
        for j in range(n):
            for k in range(min(n - 1, n - j) + 1):
                r = rho_h(j, k, n, q)
                assert r == rho_h(k, j, n, q)
                assert 0 <= r <= 1


def test_isotropic_points_of_the_unitary_line():
    assert alpha_h(1, 1, 2, Q) == Q + 1
    assert alpha_h(1, 1, 2, 2) == 3
