import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from finfpp import fposet, library, scomplex, zhomology
from finfpp.chains import Chain
from finfpp.fposet import FinitePoset, MonotoneMap
from finfpp.scomplex import SimplicialComplex, SimplicialMap
from finfpp.zhomology import WeightingError


def groups(K):
    return [(H.rank, H.torsion) for H in zhomology.homology(K)]


@st.composite
def complexes(draw):
    n = draw(st.integers(1, 6))
    vs = [f"v{i}" for i in range(n)]
    facets = draw(st.lists(st.lists(st.sampled_from(vs), min_size=1, max_size=4, unique=True),
                           min_size=1, max_size=7))
    return SimplicialComplex(facets)


def klein_bottle():
    # 3x3 grid with the Klein bottle identifications
    names = [["a", "b", "c"], ["d", "e", "f"], ["g", "h", "i"]]

    def v(r, c):
        r, c = r % 3, c % 3
        return names[r][c]

    def w(r, c):
        # crossing the right edge flips the rows
        if c == 3:
            return names[(-r) % 3][0]
        return v(r, c)

    facets = []
    for r in range(3):
        for c in range(3):
            facets.append([w(r, c), w(r + 1, c), w(r, c + 1)])
            facets.append([w(r + 1, c), w(r, c + 1), w(r + 1, c + 1)])
    return SimplicialComplex(facets)


def test_known_groups():
    assert groups(library.simplex(3)) == [(1, []), (0, []), (0, []), (0, [])]
    assert groups(library.rp2_6()) == [(1, []), (0, [2]), (0, [])]
    assert groups(klein_bottle()) == [(1, []), (1, [2]), (0, [])]
    assert zhomology.betti(library.crown()) == [1, 1]


def test_reduced_homology():
    H = zhomology.homology(library.simplex(2), reduced=True)
    assert H[0].rank == 0


@given(complexes())
@settings(max_examples=50, deadline=None)
def test_euler_characteristic(K):
    assert sum((-1) ** k * b for k, b in enumerate(zhomology.betti(K))) == K.euler_characteristic()


@given(complexes())
@settings(max_examples=30, deadline=None)
def test_subdivision_invariance(K):
    assert groups(scomplex.barycentric(K)) == groups(K)


@given(complexes())
@settings(max_examples=40, deadline=None)
def test_boundary_squares_to_zero(K):
    C = zhomology.chain_complex(K)
    for k in range(1, K.dim + 1):
        for s in K.simplices(k):
            assert not Chain(k, {s: 1}).boundary().boundary()


def test_generators_are_cycles():
    for K in (library.torus7(), library.rp2_6(), klein_bottle()):
        for H in zhomology.homology(K, generators=True):
            for g in H.generators + H.torsion_generators:
                assert not g.boundary()


def test_rational_basis_matches_betti():
    for K in (library.torus7(), library.simplex_boundary(3), library.cycle(5), klein_bottle()):
        C = zhomology.chain_complex(K)
        for k, b in enumerate(zhomology.betti(K)):
            basis = zhomology.rational_basis(C, k)
            assert len(basis) == b
            coords = zhomology.HomologyCoordinates(C, k, basis)
            for i, g in enumerate(basis):
                assert coords.coordinates(g) == [Fraction(int(i == j)) for j in range(b)]


def test_lefschetz_examples():
    K = library.torus7()
    assert zhomology.lefschetz(SimplicialMap.identity(K)) == K.euler_characteristic() == 0
    D = library.simplex(2)
    assert zhomology.lefschetz(SimplicialMap(D, D, {"a": "b", "b": "c", "c": "a"})) == 1
    X = library.crown()
    swap = MonotoneMap(X, X, {"x": "y", "y": "x", "z": "w", "w": "z"})
    assert zhomology.lefschetz(swap) == 0
    rot = SimplicialMap(library.cycle(4), library.cycle(4), {"c0": "c1", "c1": "c2", "c2": "c3", "c3": "c0"})
    assert zhomology.lefschetz(rot) == 0
    refl = SimplicialMap(library.cycle(4), library.cycle(4), {"c0": "c0", "c1": "c3", "c2": "c2", "c3": "c1"})
    assert zhomology.lefschetz(refl) == 2


def test_lefschetz_hopf_trace():
    rng = random.Random(7)
    K = library.simplex_boundary(3)
    for _ in range(30):
        while True:
            f = {v: rng.choice(K.vertices) for v in K.vertices}
            try:
                phi = SimplicialMap(K, K, f)
                break
            except scomplex.ComplexError:
                continue
        assert zhomology.lefschetz(phi) == zhomology.lefschetz_chain_level(phi)


def test_homology_functoriality():
    K = library.torus7()
    rng = random.Random(11)
    maps = []
    while len(maps) < 2:
        f = {v: rng.choice(K.vertices) for v in K.vertices}
        try:
            maps.append(SimplicialMap(K, K, f))
        except scomplex.ComplexError:
            pass
    maps.append(SimplicialMap(K, K, {str(i): str((i + 1) % 7) for i in range(7)}))
    for phi in maps:
        for psi in maps:
            A = zhomology.homology_matrices(phi)
            B = zhomology.homology_matrices(psi)
            AB = zhomology.homology_matrices(phi.compose(psi))
            for k in AB:
                prod = [[sum(A[k][i][t] * B[k][t][j] for t in range(len(B[k]))) for j in range(len(B[k][0]))]
                        for i in range(len(A[k]))] if A[k] and B[k] else AB[k]
                assert AB[k] == prod


def test_subdivision_operator_is_chain_map_and_iso():
    K = library.torus7()
    lam = zhomology.subdivision_operator(K)
    for k in range(1, 3):
        for s in K.simplices(k):
            c = Chain(k, {s: 1})
            assert lam(c).boundary() == lam(c.boundary())
    z = scomplex.pseudomanifold_check(K).orientation.fundamental_chain()
    Kp = lam.target
    zp = scomplex.pseudomanifold_check(Kp).orientation.fundamental_chain()
    assert lam(z) in (zp, -zp)
    assert [lam.norm(k) for k in range(3)] == [1, 2, 6]


def test_enumerate_cycles_examples():
    sq = zhomology.enumerate_cycles(library.cycle(4), 1, 4)
    assert len(sq) == 1 and sq[0].norm() == 4
    tri = SimplicialComplex([["a", "b"], ["b", "c"], ["a", "c"]])
    assert [c.norm() for c in zhomology.enumerate_cycles(tri, 1, 3)] == [3]
    cycles = zhomology.enumerate_cycles(library.simplex_boundary(2), 1, 6)
    assert len(cycles) == 2 and sorted(c.norm() for c in cycles) == [3, 6]


def test_class_norm():
    K = library.simplex_boundary(3)
    z = scomplex.pseudomanifold_check(K).orientation.fundamental_chain()
    res = zhomology.homology_class_norm(K, z)
    assert res.value == 4 and res.exact
    b = Chain(2, {("a", "b", "c"): 1}).boundary()
    assert zhomology.homology_class_norm(K, b).value == 0
    g = zhomology.homology(library.cycle(4), generators=True)[1].generators[0]
    assert zhomology.homology_class_norm(library.cycle(4), g).value == 4


def test_class_norm_budget_gives_lower_bound():
    K = scomplex.barycentric(library.simplex_boundary(3))
    z = scomplex.pseudomanifold_check(K).orientation.fundamental_chain()
    res = zhomology.homology_class_norm(K, z, zhomology.SearchBudget(max_nodes=50))
    assert res.value is None and not res.exact and res.lower_bound >= 1


def test_winding_crown():
    X = library.crown()
    weights = {("z", "x"): 0, ("z", "y"): 0, ("w", "x"): 0, ("w", "y"): 1}
    z = Chain.from_terms(1, [(1, ["z", "x"]), (1, ["x", "w"]), (1, ["w", "y"]), (1, ["y", "z"])])
    assert zhomology.winding_eval(X, z, weights) == 1
    assert zhomology.winding_eval(X, z, {}) == 0
    assert zhomology.winding_report(X, weights).iso


def test_winding_rejects_inconsistent_weights():
    X = FinitePoset(["a", "b", "c", "d"], [("a", "b"), ("b", "d"), ("a", "c"), ("c", "d")])
    with pytest.raises(WeightingError):
        zhomology.pair_weights(X, {("a", "b"): 1})


def test_solve_weighting_circle():
    X = library.circle_model(4)
    w, g = zhomology.solve_weighting(X)
    assert abs(zhomology.winding_eval(X, g, w)) == 1


def test_cylinder_retraction_lemma3_report():
    for K in (library.simplex_boundary(2), library.simplex(3), library.torus7()):
        rep = zhomology.cylinder_retraction(K).lemma3_check()
        assert rep["ok"] and rep["saturated_simplices"] >= len(K.simplices(1))
