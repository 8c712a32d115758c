import itertools

import pytest

from anzahl.errors import OddSymplecticDimension, OrderNotSquare
from anzahl.field import construct_field
from anzahl.forms import classify, is_non_singular, perp, radical_dim_by_gram, standard_form
from anzahl.subspaces import enumerate_subspaces, full_space, zero_space


def test_standard_symplectic_gram():
    form = standard_form("symplectic", 4, construct_field(2))
    e = [tuple(1 if c == r else 0 for c in range(4)) for r in range(4)]
    one, zero = form.field.one, form.field.zero
    for a, b in itertools.product(range(4), repeat=2):
        expected = one if {a, b} in ({0, 1}, {2, 3}) else zero
        assert form.evaluate(e[a], e[b]) == expected


def test_standard_hermitian_gram():
    form = standard_form("hermitian", 3, construct_field(4))
    assert form.gram == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_construction_errors():
    with pytest.raises(OddSymplecticDimension):
        standard_form("symplectic", 3, construct_field(2))
    with pytest.raises(OrderNotSquare):
        standard_form("hermitian", 2, construct_field(3))


def _vectors(f, n):
    return itertools.product(list(f.elements()), repeat=n)


def test_symplectic_alternating():
    form = standard_form("symplectic", 4, construct_field(3))
    zero = form.field.zero
    for v in _vectors(form.field, 4):
        assert form.evaluate(v, v) == zero


def test_hermitian_symmetry_and_sesquilinearity():
    form = standard_form("hermitian", 2, construct_field(4))
    f = form.field
    vecs = list(_vectors(f, 2))
    for u, w in itertools.product(vecs, repeat=2):
        assert form.evaluate(u, w) == form.evaluate(w, u).conjugate()
    for lam, mu in itertools.product(list(f.elements()), repeat=2):
        u, w = vecs[5], vecs[11]
        lu = tuple(lam * x for x in u)
        mw = tuple(mu * x for x in w)
        assert form.evaluate(lu, mw) == lam * mu.conjugate() * form.evaluate(u, w)


@pytest.mark.parametrize("kind, n, order", [("symplectic", 4, 2), ("hermitian", 3, 4), ("symplectic", 4, 3)])
def test_perp_involution_and_dimension(kind, n, order):
    form = standard_form(kind, n, construct_field(order))
    assert perp(form, zero_space(n, form.field)) == full_space(n, form.field)
    assert perp(form, full_space(n, form.field)) == zero_space(n, form.field)
    for j in range(n + 1):
        for pi in enumerate_subspaces(n, j, form.field):
            p = perp(form, pi)
            assert p.dim == n - j
            assert perp(form, p) == pi


@pytest.mark.parametrize("kind, n, order", [("symplectic", 4, 2), ("hermitian", 3, 4)])
def test_classify_matches_gram_rank(kind, n, order):
    form = standard_form(kind, n, construct_field(order))
    for j in range(n + 1):
        for pi in enumerate_subspaces(n, j, form.field):
            c = classify(form, pi)
            assert c.singularity_index == radical_dim_by_gram(form, pi)
            assert is_non_singular(form, pi) == c.non_singular
            if kind == "symplectic":
                assert (j - c.singularity_index) % 2 == 0


def test_classify_examples(symplectic4, hermitian3):
    assert classify(symplectic4, full_space(4, symplectic4.field)).singularity_index == 0
    assert all(classify(symplectic4, p).singularity_index == 1 for p in enumerate_subspaces(4, 1, symplectic4.field))
    points = list(enumerate_subspaces(3, 1, hermitian3.field))
    assert len(points) == 21
    assert sum(classify(hermitian3, p).totally_isotropic for p in points) == 9
