import numpy as np
import pytest

from srcore.complex import SimplicialComplex, cycle, points
from srcore.field import FieldConfig
from srcore.monomials import Monomial
from srcore.ring import StanleyReisnerRing, multiply_into_basis, product_span

XY = points(2).with_names(("x", "y"))
XZ = SimplicialComplex.from_facets(3, [[0, 1], [1, 2]], ("x", "y", "z"))


def _coords(r, vec, q):
    basis = r.graded_basis(q).basis
    return {basis[i].format(r.names): int(v) for i, v in enumerate(vec) if v}


def test_graded_basis_sizes():
    r = StanleyReisnerRing(cycle(4))
    assert len(r.graded_basis(0)) == 1
    assert len(r.graded_basis(1)) == 4
    assert len(r.graded_basis(2)) == 8
    assert r.dim == 2


def test_multiply_examples():
    r = StanleyReisnerRing(XY)
    assert _coords(r, multiply_into_basis(r, Monomial((1, 0)), [1, 1]), 2) == {"x^2": 1}
    r = StanleyReisnerRing(XZ)
    got = _coords(r, multiply_into_basis(r, Monomial((0, 1, 0)), [1, 1, 2]), 2)
    assert got == {"x*y": 1, "y^2": 1, "y*z": 2}
    r = StanleyReisnerRing(XY, FieldConfig.prime(2))
    assert _coords(r, multiply_into_basis(r, Monomial((1, 0)), [1, 1]), 2) == {"x^2": 1}


def test_multiply_rejects_vanishing_monomial():
    r = StanleyReisnerRing(XY)
    with pytest.raises(ValueError):
        multiply_into_basis(r, Monomial((1, 1)), [1, 0])


@pytest.mark.parametrize("q", [1, 2, 3])
def test_product_span_matches_single_products(q):
    r = StanleyReisnerRing(cycle(5), FieldConfig.prime(101))
    coeffs = np.random.default_rng(q).integers(0, 101, size=(2, 5))
    span = product_span(r, coeffs, q)
    basis = r.graded_basis(q - 1).basis
    for b, m in enumerate(basis):
        for i in range(2):
            assert np.array_equal(span[b * 2 + i], multiply_into_basis(r, m, coeffs[i]))


def test_rational_ring_products():
    r = StanleyReisnerRing(XZ, FieldConfig.rationals())
    vec = multiply_into_basis(r, Monomial((1, 0, 0)), [1, 2, 3])
    assert _coords(r, vec, 2) == {"x^2": 1, "x*y": 2}
