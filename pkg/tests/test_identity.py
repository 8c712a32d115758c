import pytest

from anzahl.errors import ParamOutOfRange
from anzahl.identity import (
    verify_beta_differences,
    verify_double_count,
    verify_gamma_factorization,
    verify_hermitian_recursion,
    verify_partition,
    verify_rho_symmetry,
    verify_symplectic_recursion,
)


@pytest.mark.parametrize("i, j, n", [(0, 1, 2), (1, 1, 2), (0, 3, 7)])
def test_hermitian_recursion_examples(i, j, n):
    r = verify_hermitian_recursion(i, j, n)
    assert r.holds, r.detail
    assert r.witness is None or r.witness.is_zero()


@pytest.mark.parametrize("i, j, n", [(0, 1, 2), (1, 1, 2), (0, 2, 5)])
def test_symplectic_recursion_examples(i, j, n):
    assert verify_symplectic_recursion(i, j, n).holds


@pytest.mark.parametrize("geometry, i, j, n", [("hermitian", 0, 1, 3), ("symplectic", 0, 1, 3), ("symplectic", 1, 2, 4)])
def test_beta_difference_examples(geometry, i, j, n):
    assert verify_beta_differences(geometry, i, j, n).holds


def test_recursion_domain():
    with pytest.raises(ParamOutOfRange):
        verify_hermitian_recursion(0, 0, 3)
    with pytest.raises(ParamOutOfRange):
        verify_symplectic_recursion(2, 3, 4)


def test_structural_examples():
    assert verify_double_count("hermitian", 1, 2, 5, 3).holds
    assert verify_double_count("symplectic", 0, 2, 6, 4).holds
    assert verify_gamma_factorization("hermitian", 0, 2, 5, 2).holds
    assert verify_gamma_factorization("symplectic", 0, 1, 4, 1).holds
    assert verify_rho_symmetry("hermitian", 1, 2, 4).holds
    assert verify_partition("symplectic", 2, 6, 2).holds
    assert verify_partition("hermitian", 1, 3).holds


def test_failure_produces_witness():
    from anzahl.identity import _compare
    from anzahl.qseries import Q

    r = _compare("demo", {"n": 1}, Q + 1, Q)
    assert not r.holds and r.witness == 1
