from itertools import combinations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from families import TRIANGLE_WITH_TAIL
from srcore.complex import SimplicialComplex, complete_skeleton, cycle, disjoint_union, points, simplex
from srcore.monomials import (
    Monomial,
    MonomialIdeal,
    annihilator,
    colon,
    intersect,
    minimal_primes,
    nonzero_monomials,
    polynomial_ring,
    power,
    stanley_reisner_ideal,
    test_ideal,
)

XY = points(2).with_names(("x", "y"))
XY_Z = SimplicialComplex.from_facets(3, [[0, 2], [1, 2]], ("x", "y", "z"))


def _minimal_nonfaces(c):
    n = c.n_vertices
    out = []
    for k in range(1, n + 1):
        for s in combinations(range(n), k):
            mask = sum(1 << v for v in s)
            if not c.is_face(mask) and all(c.is_face(mask & ~(1 << v)) for v in s):
                out.append(s)
    return out


def _all_monomials(n, max_degree):
    for e in product(range(max_degree + 1), repeat=n):
        if sum(e) <= max_degree:
            yield Monomial(e)


def test_stanley_reisner_examples():
    assert stanley_reisner_ideal(TRIANGLE_WITH_TAIL).strings() == ["x1*x4", "x2*x4"]
    assert stanley_reisner_ideal(points(2)).strings() == ["x1*x2"]
    assert stanley_reisner_ideal(cycle(4)).strings() == ["x1*x3", "x2*x4"]


@pytest.mark.parametrize("c", [cycle(4), cycle(6), complete_skeleton(2, 5), complete_skeleton(3, 5), TRIANGLE_WITH_TAIL,
                               disjoint_union(cycle(3), simplex(3))])
def test_stanley_reisner_matches_minimal_nonfaces(c):
    got = {tuple(i for i, e in enumerate(m) if e) for m in stanley_reisner_ideal(c).generators}
    assert got == set(_minimal_nonfaces(c))


def test_minimal_primes_examples():
    assert sorted(p.strings() for p in minimal_primes(TRIANGLE_WITH_TAIL)) == [["x1", "x2"], ["x4"]]
    assert [p.strings() for p in minimal_primes(points(2))] == [["x2"], ["x1"]]
    assert sorted(p.strings() for p in minimal_primes(cycle(3))) == [["x1"], ["x2"], ["x3"]]


@pytest.mark.parametrize("n", range(2, 7))
def test_ideal_is_intersection_of_primes(n):
    for c in [cycle(n) if n >= 3 else points(2), complete_skeleton(max(1, n - 2), n)]:
        primes = [p.with_ambient(polynomial_ring(n)) for p in minimal_primes(c)]
        meet = primes[0]
        for p in primes[1:]:
            meet = intersect(meet, p)
        assert meet == stanley_reisner_ideal(c)


def test_colon_examples():
    ring = polynomial_ring(2).with_names(("x", "y"))
    assert colon(MonomialIdeal.parse(ring, ["x*y"]), MonomialIdeal.parse(ring, ["x"])).strings() == ["y"]
    ring3 = polynomial_ring(3).with_names(("x", "y", "z"))
    got = colon(MonomialIdeal.parse(ring3, ["x^2*y", "y*z"]), MonomialIdeal.parse(ring3, ["y"]))
    assert got == MonomialIdeal.parse(ring3, ["x^2", "z"])


@given(st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)), min_size=1, max_size=3),
       st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)), min_size=1, max_size=2))
def test_colon_brute_force(i_gens, j_gens):
    ring = polynomial_ring(3)
    i = MonomialIdeal(ring, i_gens)
    j = MonomialIdeal(ring, j_gens)
    got = colon(i, j)
    for m in _all_monomials(3, 6):
        assert got.contains(m) == all(i.contains(m * g) for g in j.generators)


def test_annihilator_examples():
    primes = minimal_primes(XY)
    x_prime = next(p for p in primes if p.strings() == ["x"])
    assert annihilator(XY, x_prime).strings() == ["y"]
    y_prime = next(p for p in minimal_primes(XY_Z) if p.strings() == ["y"])
    assert annihilator(XY_Z, y_prime).strings() == ["x"]
    u = disjoint_union(simplex(2), simplex(3))
    anns = sorted(annihilator(u, p).strings() for p in minimal_primes(u))
    assert anns == [["x1", "x2"], ["x3", "x4", "x5"]]


@pytest.mark.parametrize("c", [TRIANGLE_WITH_TAIL, XY_Z, cycle(4), complete_skeleton(2, 4)])
def test_annihilator_brute_force(c):
    n = c.n_vertices
    for p in minimal_primes(c):
        ann = annihilator(c, p)
        for m in _all_monomials(n, 3):
            if m.is_zero_in(c) or m.degree == 0:
                continue
            kills = all((m * g).is_zero_in(c) for g in p.generators)
            assert ann.contains(m) == kills


def test_test_ideal_examples():
    assert test_ideal(XY).strings() == ["x", "y"]
    assert test_ideal(XY_Z).strings() == ["x", "y"]
    u = disjoint_union(simplex(2), simplex(2))
    assert test_ideal(u) == MonomialIdeal.maximal(u)
    assert test_ideal(simplex(3)).is_unit


def test_products_and_powers():
    tau_m = test_ideal(XY_Z) * MonomialIdeal.maximal(XY_Z)
    assert tau_m == MonomialIdeal.parse(XY_Z, ["x^2", "x*z", "y^2", "y*z"])
    assert power(MonomialIdeal.maximal(XY), 2) == MonomialIdeal.parse(XY, ["x^2", "y^2"])
    c = cycle(4)
    assert set(power(MonomialIdeal.maximal(c), 3).generators) == set(nonzero_monomials(c, 3))


def test_graded_pieces_of_examples():
    assert [m.format(XY.names) for m in nonzero_monomials(XY, 2)] == ["x^2", "y^2"]
    assert {m.format(XY_Z.names) for m in nonzero_monomials(XY_Z, 2)} == {"x^2", "x*z", "y^2", "y*z", "z^2"}
    assert len(nonzero_monomials(cycle(4), 2)) == 8


def test_vanishing_monomials_are_not_members():
    m = MonomialIdeal.maximal(XY)
    assert not m.contains(Monomial((1, 1)))
    assert m.contains(Monomial((2, 0)))


ideal_gens = st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)), min_size=1, max_size=4)


@given(ideal_gens, ideal_gens)
def test_operations_brute_force(a, b):
    c = cycle(3)
    i, j = MonomialIdeal(c, a), MonomialIdeal(c, b)
    for m in _all_monomials(3, 6):
        if m.is_zero_in(c):
            continue
        assert (i + j).contains(m) == (i.contains(m) or j.contains(m))
        assert (i & j).contains(m) == (i.contains(m) and j.contains(m))
        prod = any(g.divides(m) and j.contains(m.quotient(g)) for g in i.generators)
        assert (i * j).contains(m) == prod
    assert i <= i + j and (i & j) <= i


@given(ideal_gens)
def test_generators_are_minimal(gens):
    i = MonomialIdeal(polynomial_ring(3), gens)
    for a in i.generators:
        for b in i.generators:
            assert a == b or not a.divides(b)
