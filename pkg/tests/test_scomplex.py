import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from finfpp import library, scomplex, zhomology
from finfpp.scomplex import ComplexError, SimplicialComplex, SimplicialMap


@st.composite
def complexes(draw, max_vertices=6, max_dim=3):
    n = draw(st.integers(1, max_vertices))
    vs = [f"v{i}" for i in range(n)]
    facets = draw(st.lists(st.lists(st.sampled_from(vs), min_size=1, max_size=max_dim + 1, unique=True),
                           min_size=1, max_size=6))
    return SimplicialComplex(facets)


def test_facets_are_maximal_and_sorted():
    K = SimplicialComplex([["b", "a"], ["a"], ["c", "a", "b"], ["d"]])
    assert K.facets == (("a", "b", "c"), ("d",))
    assert K.vertices == ("a", "b", "c", "d")
    assert K.f_vector() == [4, 3, 1]


@pytest.mark.parametrize("facets", [[[]], [["a", "a"]], [["a", 1]]])
def test_invalid_facets(facets):
    with pytest.raises(ComplexError):
        SimplicialComplex(facets)


def test_barycentric_names_and_labels():
    Kp = scomplex.barycentric(library.simplex(1))
    assert Kp.vertices == ("[a,b]", "[a]", "[b]")
    assert Kp.labels["[a,b]"] == ("a", "b")
    assert len(Kp.facets) == 2


@given(complexes())
@settings(max_examples=40, deadline=None)
def test_barycentric_euler_characteristic(K):
    assert scomplex.barycentric(K).euler_characteristic() == K.euler_characteristic()


@given(complexes(max_vertices=5, max_dim=2))
@settings(max_examples=30, deadline=None)
def test_barycentric_facet_count(K):
    Kp = scomplex.barycentric(K)
    expected = sum(math.factorial(len(f)) for f in K.facets) if K.is_pure() else None
    if expected is not None:
        assert len(Kp.facets) == expected


def test_degree_formula_on_torus_vertices():
    K = library.torus7()
    Kp = scomplex.barycentric(K)
    assert all(scomplex.deg(Kp, (f"[{v}]",)) == 2 * scomplex.deg(K, (v,)) for v in K.vertices)
    assert scomplex.deg(K, ("0",)) == 6


def test_stellar_naming_repeats():
    K = library.simplex_boundary(2)
    L = scomplex.stellar_subdivide(K, ("a", "b"))
    assert "b(a,b)#1" in L.vertices
    L2 = scomplex.stellar_subdivide(L, ("a", "b(a,b)#1"))
    assert "b(a,b(a,b)#1)#1" in L2.vertices
    assert len(L.facets) == 4
    assert scomplex.carrier_in(L2, "b(a,b(a,b)#1)#1", K) == ("a", "b")


def test_stellar_rejects_nonsimplex():
    with pytest.raises(ComplexError):
        scomplex.stellar_subdivide(library.cycle(4), ("c0", "c2"))


def test_approximation_to_identity_is_simplicial():
    K = library.simplex_boundary(3)
    L = scomplex.iterated_barycentric(K, 2)
    psi = scomplex.approximation_to_identity(L, K)
    assert psi.target is K
    assert all(psi(v) in scomplex.carrier_in(L, v, K) for v in L.vertices)


def test_map_validation():
    K = library.cycle(4)
    with pytest.raises(ComplexError):
        SimplicialMap(K, K, {"c0": "c0", "c1": "c2", "c2": "c2", "c3": "c3"})
    with pytest.raises(ComplexError):
        SimplicialMap(K, K, {"c0": "c0"})
    phi = SimplicialMap(K, K, {"c0": "c1", "c1": "c2", "c2": "c3", "c3": "c0"})
    assert phi.compose(phi).assign["c0"] == "c2"


def test_pseudomanifold_checks():
    assert scomplex.pseudomanifold_check(library.torus7()).orientable
    rp2 = scomplex.pseudomanifold_check(library.rp2_6())
    assert rp2.closed and not rp2.orientable
    disk = scomplex.pseudomanifold_check(library.simplex(2))
    assert not disk.closed
    two = SimplicialComplex([["a", "b", "c"], ["a", "b", "d"], ["a", "c", "d"], ["b", "c", "d"],
                             ["e", "f", "g"], ["e", "f", "h"], ["e", "g", "h"], ["f", "g", "h"]])
    assert not scomplex.pseudomanifold_check(two).strongly_connected


def test_fundamental_cycle_is_cycle():
    for K in (library.simplex_boundary(3), library.torus7()):
        z = scomplex.pseudomanifold_check(K).orientation.fundamental_chain()
        assert z.norm() == len(K.facets)
        assert not z.boundary()


def test_mapping_cylinder_homotopy_type():
    K = library.simplex_boundary(2)
    Kp = scomplex.barycentric(K)
    psi = scomplex.approximation_to_identity(Kp, K)
    cyl = scomplex.mapping_cylinder(psi)
    assert zhomology.betti(cyl.complex) == zhomology.betti(K) + [0]
    assert cyl.p.compose(cyl.j).is_identity()


def test_mapping_cylinder_order_checked():
    K = library.simplex(1)
    with pytest.raises(ComplexError):
        scomplex.mapping_cylinder(SimplicialMap.identity(K), order=["a"])


def test_carrier_hull():
    hull = scomplex.carrier_hull([("a",), ("b",)])
    assert hull.facets == (("[a,b]", "[a]"), ("[a,b]", "[b]"))
    with pytest.raises(ComplexError):
        scomplex.carrier_hull([("a", "b"), ("b", "c")])


def test_mesh_bound():
    assert scomplex.mesh_and_bound(library.simplex(2), 3) == Fraction(8, 27)
