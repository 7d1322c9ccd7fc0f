"""Acceptance criteria 1-11.

Run ``pytest tests/test_acceptance.py`` (or this file directly); the terminal
summary prints one PASS/FAIL line per criterion.
"""
import io
import itertools
import json
import math
import random
import sys
import time
from fractions import Fraction

import pytest

from finfpp import assembly, cli, fixtest, fposet, library, scomplex, zhomology
from finfpp.chains import Chain
from finfpp.fposet import FinitePoset
from finfpp.scomplex import SimplicialComplex, SimplicialMap


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.dispatch([str(a) for a in argv], out, err)
    return code, json.loads(out.getvalue())


@pytest.mark.acceptance(1, "Kun suite: build then verify, six checks")
def test_kun_suite(tmp_path, request):
    t0 = time.monotonic()
    path = tmp_path / "kun.pos"
    code, rep = run_cli("kun", "build", "-o", path)
    assert code == 0
    code, rep = run_cli("kun", "verify", path)
    elapsed = time.monotonic() - t0
    assert code == 0 and rep["result"]["ok"]
    checks = rep["result"]["checks"]
    assert set(checks) == {"a_size", "b_homology", "c_weak_points", "d_fpp", "e_unique_double",
                           "f_crown_double"}
    assert all(c["ok"] for c in checks.values())
    assert checks["a_size"]["points"] == 14
    assert elapsed < 600
    request.node.acceptance_detail = f"{elapsed:.2f}s"


@pytest.mark.acceptance(2, "Degree formula on the tetrahedron boundary and the 7-vertex torus")
def test_degree_formula():
    for K in (library.simplex_boundary(3), library.torus7()):
        Kp = scomplex.barycentric(K)
        n = K.dim
        for s in K.simplices():
            k = len(s) - 1
            expected = math.factorial(k + 1) * math.factorial(n - k) * scomplex.deg(K, s)
            assert scomplex.deg(Kp, (scomplex.bary_name(s),)) == expected


def _random_simplicial_map(rng):
    n = rng.randint(1, 8)
    vs = [f"s{i}" for i in range(n)]
    facets = [rng.sample(vs, rng.randint(1, min(n, 4))) for _ in range(rng.randint(1, 5))]
    S = SimplicialComplex(facets + [[v] for v in vs])
    m = rng.randint(1, 8)
    ws = [f"t{i}" for i in range(m)]
    f = {v: rng.choice(ws) for v in vs}
    extra = [rng.sample(ws, rng.randint(1, min(m, 3))) for _ in range(rng.randint(0, 3))]
    T = SimplicialComplex([sorted({f[v] for v in F}) for F in S.facets] + extra + [[w] for w in ws])
    return SimplicialMap(S, T, f)


@pytest.mark.acceptance(3, "Norm calculus: subdivision operator and simplicial maps")
def test_norm_calculus():
    lam = zhomology.subdivision_operator(library.simplex(3))
    assert [lam.norm(k) for k in range(4)] == [1, 2, 6, 24]
    rng = random.Random(314159)
    for _ in range(100):
        phi = _random_simplicial_map(rng)
        for cols in zhomology.induced_chain_map(phi).values():
            assert zhomology.operator_norm(cols) <= 1
        for k in range(phi.source.dim + 1):
            c = Chain(k, {s: rng.randint(-3, 3) for s in phi.source.simplices(k)})
            assert zhomology.push(phi, c).norm() <= c.norm()


@pytest.mark.acceptance(4, "Cylinder retraction bounds, exhaustive over simplices")
def test_lemma3():
    for K in (library.simplex_boundary(2), library.simplex_boundary(3), library.simplex(2)):
        cr = zhomology.cylinder_retraction(K)
        Z = cr.cylinder.complex
        incl = cr.cylinder.i
        coarse = set(cr.cylinder.target_names.values())
        lab = cr.subdivision.labels
        # the ordering lists barycenters of larger simplices first
        dims = [len(lab[v]) for v in cr.ordering]
        assert dims == sorted(dims, reverse=True)
        assert all(cr.psi(v) in lab[v] for v in cr.subdivision.vertices)
        for S in Z.simplices():
            k = len(S) - 1
            rS = cr.r[S]
            if k:
                bd = Chain(k - 1)
                for i in range(k + 1):
                    bd = bd + (-1) ** i * cr.r[S[:i] + S[i + 1:]]
                assert rS.boundary() == bd
            assert rS.norm() <= math.factorial(k + 1)
            if k >= 1 and rS.norm() == math.factorial(k + 1):
                assert set(S) <= coarse
        for s in cr.subdivision.simplices():
            img = tuple(sorted(incl(v) for v in s))
            assert cr.r[img] == Chain(len(s) - 1, {img: 1})


@pytest.mark.acceptance(5, "Homology regression and subdivision invariance")
def test_homology_regression():
    cases = [(library.simplex_boundary(2), [1, 1], [[], []]),
             (library.simplex_boundary(3), [1, 0, 1], [[], [], []]),
             (library.torus7(), [1, 2, 1], [[], [], []]),
             (library.rp2_6(), [1, 0, 0], [[], [2], []])]
    for K, betti, torsion in cases:
        for j in range(3):
            groups = zhomology.homology(scomplex.iterated_barycentric(K, j))
            assert [H.rank for H in groups] == betti
            assert [H.torsion for H in groups] == torsion


def _poset_corpus(seed=20240601, size=200):
    rng = random.Random(seed)
    for _ in range(size):
        n = rng.randint(1, 7)
        pts = [f"p{j}" for j in range(n)]
        p = rng.choice([0.15, 0.3, 0.5])
        rel = [(pts[a], pts[b]) for a, b in itertools.combinations(range(n), 2) if rng.random() < p]
        yield FinitePoset.from_relations(pts, rel)


def _complex_corpus(seed=27182, size=100):
    rng = random.Random(seed)
    for _ in range(size):
        n = rng.randint(1, 6)
        vs = [f"v{j}" for j in range(n)]
        facets = [rng.sample(vs, rng.randint(1, min(n, 4))) for _ in range(rng.randint(1, 6))]
        yield SimplicialComplex(facets + [[v] for v in vs])


@pytest.mark.acceptance(6, "Fixed-point searches agree with naive enumeration")
def test_oracles(request):
    refuted = 0
    for X in _poset_corpus():
        cert = fixtest.fpp_check(X)
        count = fixtest.naive_fpp_count(X)
        assert (cert.kind == "refuted") == (count > 0)
        if count:
            refuted += 1
            f = cert.witness["map"]
            fposet.MonotoneMap(X, X, f)
            assert not any(p == q for p, q in f.items())
    srefuted = 0
    for K in _complex_corpus():
        cert = fixtest.fsp_check(K)
        count = fixtest.naive_fsp_count(K)
        assert (cert.kind == "refuted") == (count > 0)
        if count:
            srefuted += 1
            assert fixtest.has_fixed_simplex(SimplicialMap(K, K, cert.witness["map"])) is None
    request.node.acceptance_detail = f"200 posets ({refuted} refuted), 100 complexes ({srefuted} refuted)"


@pytest.mark.acceptance(7, "Asymmetrize the tetrahedron boundary")
def test_asymmetrize(boundary3, request):
    t0 = time.monotonic()
    res = fixtest.asymmetrize(boundary3)
    L = res.complex
    degs = sorted((scomplex.deg(L, (v,)) for v in L.vertices), reverse=True)
    assert degs[0] > degs[1]
    assert scomplex.max_degree(L) == (degs[0], (res.v0,))
    ok, v = fixtest.is_asymmetric(L)
    assert ok and v == res.v0
    auts = fixtest.automorphisms(L)
    assert all(g[res.v0] == res.v0 for g in auts)
    Lp = scomplex.barycentric(L)
    assert scomplex.max_degree(Lp) == (2 * degs[0], (scomplex.bary_name((res.v0,)),))
    elapsed = time.monotonic() - t0
    assert elapsed < 300
    request.node.acceptance_detail = f"v0={res.v0}, d(L)={degs[0]}, {len(auts)} automorphisms, {elapsed:.2f}s"


@pytest.mark.acceptance(8, "Fixed simplex property of the asymmetrized tetrahedron boundary")
def test_fsp_instance(asym_boundary3, request):
    L = asym_boundary3.complex
    cert = fixtest.fsp_check(L)
    if cert.kind == "inconclusive":
        cert = fixtest.decomposition_check(L, asym_boundary3.v0)
    assert cert.kind == "fsp"
    request.node.acceptance_detail = f"certificate {cert.kind}, {cert.stats.get('nodes')} nodes"


@pytest.mark.acceptance(9, "Toy assembly over the tetrahedron boundary at depths (0, 1)")
def test_thm4_toy(boundary3, realization10, request):
    out = assembly.assemble_thm4(boundary3, [realization10], depths={2: 1})
    assert out.plan.s == {1: 0, 2: 1}
    L = out.space
    hL = [(H.rank, H.torsion) for H in zhomology.homology(L)]
    hK = [(H.rank, H.torsion) for H in zhomology.homology(boundary3)]
    # L has dimension n + 1 because of the cylinders; the extra group must vanish
    assert hL == hK + [(0, [])] * (len(hL) - len(hK))
    expected = {"K^s", "C2.1/free"} | {f"C2.1/b{i}" for i in range(out.plan.multiplier + 1)}
    assert expected <= set(out.subobjects)
    for name, names in out.subobjects.items():
        assert set(names.values()) <= L.vertices_set
        orig = out.originals[name]
        assert out.extract(name) == orig.rename(names)
    (det,) = out.checks["retraction_details"]
    k = det["k"]
    assert det["is_fundamental"] and det["saturated"]
    stages = len(det["stages"])
    assert det["end_norm"] == det["start_norm"] * math.factorial(k + 1) ** stages == det["bound"]
    assert all(out.checks[c] for c in ("homology", "basis", "coordinates", "free_extremes_full",
                                      "retraction_norms"))
    request.node.acceptance_detail = (f"{len(L.vertices)} vertices, {len(L.facets)} facets, "
                                      f"norm {det['start_norm']} -> {det['end_norm']}")


@pytest.mark.acceptance(10, "Toy main construction over the 4-cycle")
def test_main_toy(kun, request):
    K = library.cycle(4)
    M = library.cycle(4, prefix="m")
    phi = SimplicialMap(M, K, {f"m{i}": f"c{i}" for i in range(4)})
    out = assembly.assemble_main(K, [assembly.RealizationDatum(1, M, phi)], kun=kun)
    X = out.space
    H = zhomology.homology(X)
    assert (H[1].rank, H[1].torsion) == (1, [])
    copies = [n for n in out.subobjects if n.startswith("Kun")]
    assert copies == ["Kun1"]
    assert X.subposet(out.subobjects["Kun1"].values()) == kun.space.rename(out.subobjects["Kun1"])
    (h,) = out.log["h"]
    assert h["degree"] in (1, -1) and h["degree_in_kun"] in (1, -1)
    request.node.acceptance_detail = f"{len(X)} points, h of degree {h['degree']}"


@pytest.mark.acceptance(11, "Bound-mode plan for the tetrahedron boundary is refused")
def test_plan_honesty(boundary3, realization24, write_realization, request):
    assert realization24.facets == 24
    third = Fraction(1, 3)
    assert 24 * Fraction(2, 3) ** 11 < third <= 24 * Fraction(2, 3) ** 10
    kpath, rpath = write_realization(boundary3, [realization24])
    code, rep = run_cli("thm4", "plan", "--complex", kpath, "--realizations", rpath, "--mode", "bound")
    assert code == 0
    plan = rep["result"]
    assert plan["s"]["2"] == 11 and plan["N"] == 24
    assert plan["forecast"]["facets"] > 10 ** 9 and not plan["feasible"]
    code, rep = run_cli("thm4", "build", "--complex", kpath, "--realizations", rpath, "--mode", "bound")
    assert code == cli.EXIT_INCONCLUSIVE and rep["result"] == "refused"
    request.node.acceptance_detail = f"s=11, forecast {plan['forecast']['facets']} facets"


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
