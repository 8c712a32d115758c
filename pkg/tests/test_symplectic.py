from fractions import Fraction

import pytest

from anzahl.errors import ParamOutOfRange, UndefinedParity
from anzahl.qseries import Q, gauss
from anzahl.symplectic import (
    alpha_s,
    beta_s,
    gamma_s,
    gamma_s_raw,
    gamma_s_span,
    gamma_s_span_raw,
    rho_s,
    rho_s_raw,
)


def test_alpha_examples():
    assert alpha_s(1, 2, 4, Q) == 0
    assert alpha_s(0, 2, 4, 2) == 20
    assert alpha_s(0, 2, 4, Q) == Q**2 * (Q**2 + 1)
    assert alpha_s(2, 2, 4, 2) == 15
    assert alpha_s(2, 2, 4, Q) == (Q**2 + 1) * (Q + 1)


def test_odd_ambient_rejected():
    with pytest.raises(ParamOutOfRange):
        alpha_s(0, 1, 3, 2)


@pytest.mark.parametrize("two_n", [2, 4, 6, 8])
def test_partition_by_singularity_index(two_n):
    for q in (2, 3):
        for j in range(two_n + 1):
            total = 0
            for i in range(j + 1):
                try:
                    total += alpha_s(i, j, two_n, q)
                except ParamOutOfRange:
                    pass
            assert total == gauss(two_n, j, q)


def test_beta_examples():
    assert beta_s(0, 2, 6, 4, 2) == 20
    assert beta_s(0, 2, 6, 4, Q) == Q**2 * (Q**2 + 1)
    with pytest.raises(UndefinedParity):
        beta_s(1, 2, 6, 4, Q)
    for j in (0, 2, 4):
        assert beta_s(0, j, 8, j, Q) == 1


def test_beta_anchor():
    for n in range(2, 8):
        for j in range(1, n):
            anchor = Q ** (2 * j - 2) * (Q ** (2 * j) - 1)
            assert beta_s(0, 2 * n - 2 * j, 2 * n, 2 * n - 2, Q) * (Q**2 - 1) == anchor


def test_gamma_span_examples():
    for n in range(1, 5):
        assert gamma_s_span(0, 0, n, Q) == 1
    assert gamma_s_span(0, 1, 2, 2) == 10
    assert gamma_s_span(0, 1, 2, Q) == Q**4 - Q**3 + Q
    assert gamma_s_span_raw(1, 2, 6, Q) == 0
    assert gamma_s_span_raw(0, 2, 4, 2) == 10


def test_gamma_examples():
    assert gamma_s(0, 1, 2, 1, 2) == 10
    assert gamma_s_raw(0, 2, 4, 2, 2) == 10
    for n in range(1, 5):
        for j in range(n):
            assert gamma_s(0, j, n, 0, Q) == 1


def test_rho_examples():
    for n in range(1, 5):
        for k in range(n):
            assert rho_s(0, k, n, 2) == 1
    assert rho_s(1, 1, 2, 2) == Fraction(1, 2)
    assert rho_s_raw(2, 2, 4, 2) == Fraction(1, 2)
    with pytest.raises(ParamOutOfRange):
        rho_s_raw(1, 2, 4, 2)


@pytest.mark.parametrize("n", range(1, 7))
def test_rho_symmetric(n):
    for q in (2, 3, 4, 5):
        for j in range(n):
            for k in range(min(n - 1, n - j) + 1):
                assert rho_s(j, k, n, q) == rho_s(k, j, n, q)
