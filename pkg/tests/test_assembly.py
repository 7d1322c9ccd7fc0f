import itertools
from fractions import Fraction

import pytest

from finfpp import assembly, fixtest, fposet, library, scomplex, zhomology
from finfpp.assembly import AssemblyError, RealizationDatum
from finfpp.chains import Chain
from finfpp.scomplex import SimplicialMap

KUN_COVERS = {
    ("p1", "p3"), ("p1", "p6"), ("p1", "w'"), ("p2", "p4"), ("p2", "p5"), ("p2", "w'"),
    ("p3", "x"), ("p3", "x'"), ("p4", "y"), ("p4", "y'"), ("p5", "x'"), ("p5", "y"),
    ("p6", "x"), ("p6", "y'"), ("w", "p5"), ("w", "p6"), ("w", "z'"), ("w'", "x'"),
    ("w'", "y'"), ("z", "p3"), ("z", "p4"), ("z", "z'"), ("z'", "x'"), ("z'", "y'")}


def test_stirling_and_f_vectors():
    assert [assembly._stirling2(4, k) for k in range(5)] == [0, 1, 7, 6, 1]
    for K in (library.simplex_boundary(3), library.torus7(), library.simplex(2)):
        for s in range(3):
            assert assembly.subdivided_f_vector(K.f_vector(), s) == \
                scomplex.iterated_barycentric(K, s).f_vector()


def test_bound_depth_is_least():
    for N, n in [(24, 2), (10, 2), (1, 1), (7, 3), (100, 4)]:
        s = assembly.bound_depth(N, n)
        ok = lambda t: N * Fraction(n, n + 1) ** t < Fraction(1, n + 1)
        assert ok(s) and (s == 0 or not ok(s - 1))
    assert assembly.bound_depth(24, 2) == 11


def test_star_predicate_examples():
    D = library.simplex(2)
    assert assembly.star_predicate(D, 1, 2) is False
    assert assembly.star_predicate(D, 2, 2) is True
    assert assembly.star_predicate(D, 0, 1) is False  # no open star holds a closed facet
    assert assembly.star_predicate(D, 1, 1) is True


def test_realization_validation(boundary3):
    disk = library.simplex(2)
    with pytest.raises(AssemblyError):
        RealizationDatum(2, disk, SimplicialMap(disk, boundary3, {"a": "a", "b": "b", "c": "c"}))
    M = library.simplex_boundary(3)
    phi = SimplicialMap(M, boundary3, {v: v for v in M.vertices})
    # the fundamental class is not null-homologous
    with pytest.raises(AssemblyError):
        RealizationDatum(2, M, phi, claimed_class=Chain(2))


def test_check_basis_rejects_missing_class(boundary3):
    with pytest.raises(AssemblyError):
        assembly.check_basis(boundary3, [])


def test_plan_and_forecast_match_build(boundary3, realization10):
    plan = assembly.plan_depths(boundary3, [realization10], "explicit", {2: 1})
    assert plan.s == {1: 0, 2: 1} and plan.N == 10 and plan.multiplier == 10
    assert plan.entries and plan.entries[0]["holds"] is False
    out = assembly.assemble_thm4(boundary3, [realization10], plan=plan)
    assert out.log["vertices"] == plan.forecast["vertices"]
    assert out.log["facets"] <= plan.forecast["facets"]
    assert out.log["mode"] == "toy" and not out.checks["certified_depths"]


def test_thm4_refuses_infeasible(boundary3, realization24):
    with pytest.raises(assembly.BuildRefused) as info:
        assembly.assemble_thm4(boundary3, [realization24])
    assert info.value.plan.s_n == 11


def test_thm4_requires_simply_connected_homology():
    K = library.cycle(4)
    M = library.cycle(4, prefix="m")
    R = RealizationDatum(1, M, SimplicialMap(M, K, {f"m{i}": f"c{i}" for i in range(4)}))
    with pytest.raises(AssemblyError):
        assembly.assemble_thm4(K, [R], depths={})


def test_acyclic_base_needs_no_cylinders():
    D = library.simplex(2)
    out = assembly.assemble_thm4(D, [], depths={})
    assert out.space == D
    assert fixtest.fsp_check(out.space).kind == "fsp"


def test_kun_structure(kun):
    X = kun.space
    assert len(X) == 14
    assert set(X.covers) == KUN_COVERS
    assert {"x", "y"} <= set(fposet.weak_points(X))
    rest = fposet.core(X.remove(["x", "y"]))
    assert set(rest.points) == {"x'", "y'", "z'", "w'"}
    assert zhomology.betti(X)[:2] == [1, 1]


def test_kun_report(kun):
    rep = kun.report
    assert rep["degree_1_maps"] == 384 and rep["degree_2_maps"] == 4
    assert rep["verify"]["ok"]


def test_verify_kun_rejects_wrong_names(kun):
    rep = assembly.verify_kun(kun.space, names={"x": "x'", "x'": "x"})
    assert not rep["ok"]


def test_verify_kun_rejects_crown():
    X = fposet.union(library.crown(("x", "y", "z", "w")), library.crown(("x'", "y'", "z'", "w'")))
    rep = assembly.verify_kun(X)
    assert not rep["ok"] and not rep["checks"]["a_size"]["ok"]


def test_monotone_maps_enumeration():
    S, D = library.circle_model(4), library.crown()
    maps = list(assembly.monotone_maps(S, D))
    count = sum(1 for im in itertools.product(D.points, repeat=len(S))
                if all(D.leq(im[S.points.index(a)], im[S.points.index(b)]) for a, b in S.covers))
    assert len(maps) == count


def test_map_degree():
    S = library.circle_model(4)
    D = library.crown(("d1", "d2", "d3", "d4"))
    g = assembly.crown_cycle("d1", "d2", "d3", "d4")
    assert not g.boundary()
    const = {p: "d1" for p in S.points}
    assert assembly.map_degree(S, D, const, g) == 0
    degs = {assembly.map_degree(S, D, f, g) for f in assembly.monotone_maps(S, D)}
    assert degs == {-2, -1, 0, 1, 2}


def test_main_toy_structure(kun):
    K = library.cycle(4)
    M = library.cycle(4, prefix="m")
    R = RealizationDatum(1, M, SimplicialMap(M, K, {f"m{i}": f"c{i}" for i in range(4)}))
    out = assembly.assemble_main(K, [R], kun=kun)
    X = out.space
    assert out.checks["homology_X"] and out.checks["kun_copies_ok"]
    kun_pts = set(out.subobjects["Kun1"].values())
    # dropping the Kun copy leaves X(L), which still carries the circle of K
    B = X.remove(kun_pts)
    assert zhomology.betti(B)[:2] == [1, 1]
    assert out.plan.theorem == "main" and out.plan.multiplier == 2
