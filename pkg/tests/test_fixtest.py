import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from finfpp import fixtest, fposet, library, scomplex
from finfpp.budget import SearchBudget
from finfpp.fposet import FinitePoset, MonotoneMap
from finfpp.scomplex import SimplicialComplex, SimplicialMap


@st.composite
def posets(draw, max_points=6):
    n = draw(st.integers(1, max_points))
    pts = [f"p{i}" for i in range(n)]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return FinitePoset.from_relations(pts, [(pts[i], pts[j]) for i, j in chosen])


def brute_force_free_maps(X):
    pts = X.points
    out = []
    for images in itertools.product(pts, repeat=len(pts)):
        f = dict(zip(pts, images))
        if any(f[p] == p for p in pts):
            continue
        if all(X.leq(f[a], f[b]) for a, b in X.covers):
            out.append(images)
    return out


@pytest.mark.parametrize("K,count", [
    (library.simplex_boundary(2), 6), (library.simplex_boundary(3), 24), (library.simplex(2), 6),
    (library.cycle(5), 10), (library.torus7(), 42), (library.rp2_6(), 60)])
def test_automorphism_counts(K, count):
    auts = fixtest.automorphisms(K)
    assert len(auts) == count
    assert auts[0] == {v: v for v in K.vertices}


def test_poset_automorphisms():
    assert len(fixtest.automorphisms(library.crown())) == 4
    assert len(fixtest.automorphisms(library.chain_poset(4))) == 1


def test_asymmetry():
    assert fixtest.is_asymmetric(library.simplex_boundary(3)) == (False, None)
    X = SimplicialComplex([["a", "b"], ["b", "c"], ["c", "d"], ["b", "e"]])
    ok, v = fixtest.is_asymmetric(X)
    assert ok and v == "b"


def test_asymmetrize_refuses_circles():
    with pytest.raises(fixtest.AsymmetrizeError):
        fixtest.asymmetrize(library.cycle(5))
    with pytest.raises(fixtest.AsymmetrizeError):
        fixtest.asymmetrize(library.simplex(2))


def test_asymmetrize_torus():
    res = fixtest.asymmetrize(library.torus7())
    cert = res.certificate
    assert cert["strict_gap"] and cert["all_fix_v0"] and cert["subdivided_prediction"]
    assert scomplex.max_degree(res.complex)[1] == (res.v0,)


def test_fsp_examples():
    cert = fixtest.fsp_check(library.simplex_boundary(2))
    assert cert.kind == "refuted" and cert.witness["map"] == {"a": "b", "b": "c", "c": "a"}
    assert fixtest.fsp_check(library.simplex(2)).kind == "fsp"
    assert fixtest.fsp_check(library.rp2_6()).kind == "fsp"
    assert fixtest.fsp_check(library.simplex_boundary(3)).kind == "refuted"


def test_fsp_budget_is_inconclusive():
    cert = fixtest.fsp_check(library.rp2_6(), SearchBudget(max_nodes=5))
    assert cert.kind == "inconclusive" and cert.status == fixtest.INCONCLUSIVE


@pytest.mark.parametrize("K,count", [
    (library.simplex_boundary(3), 6), (library.rp2_6(), 0), (library.cycle(6), 5),
    (library.simplex(3), 0), (library.simplex_boundary(2), 2), (library.cycle(4), 3)])
def test_naive_fsp_counts(K, count):
    assert fixtest.naive_fsp_count(K) == count


def test_self_map_enumeration_matches_naive():
    K = library.cycle(5)
    maps = list(fixtest.simplicial_self_maps(K))
    free = [f for f in maps if fixtest.has_fixed_simplex(SimplicialMap(K, K, f)) is None]
    assert len(free) == fixtest.naive_fsp_count(K)
    assert len({tuple(sorted(f.items())) for f in maps}) == len(maps)


def test_decomposition_certificate(asym_boundary3):
    cert = fixtest.decomposition_check(asym_boundary3.complex, asym_boundary3.v0)
    assert cert.kind == "fsp"
    assert cert.stats["automorphisms_fixing_v0"] >= 1


def test_decomposition_does_not_apply_to_symmetric():
    cert = fixtest.decomposition_check(library.simplex_boundary(3), "a")
    assert cert.kind in ("refuted", "inconclusive")
    assert cert.kind != "fsp"


def test_fsp_parallel_matches_sequential(asym_boundary3):
    for K in (asym_boundary3.complex, library.simplex_boundary(3)):
        seq = fixtest.fsp_check(K)
        par = fixtest.fsp_check(K, jobs=3)
        assert (seq.kind, seq.witness) == (par.kind, par.witness)


def test_fpp_examples():
    cert = fixtest.fpp_check(library.crown())
    assert cert.kind == "refuted"
    assert cert.witness["map"] == {"w": "z", "x": "y", "y": "x", "z": "w"}
    assert fixtest.naive_fpp_count(library.crown()) == 1
    assert fixtest.fpp_check(library.chain_poset(3)).kind == "fpp"
    assert fixtest.fpp_check(fposet.face_poset(library.simplex(2))).kind == "fpp"
    assert fixtest.naive_fpp_count(library.circle_model(4)) == 3


@given(posets())
@settings(max_examples=80, deadline=None)
def test_fpp_witness_is_least(X):
    free = brute_force_free_maps(X)
    cert = fixtest.fpp_check(X)
    if not free:
        assert cert.kind == "fpp"
    else:
        assert cert.kind == "refuted"
        assert tuple(cert.witness["map"][p] for p in X.points) == min(free)


@given(posets(max_points=5))
@settings(max_examples=40, deadline=None)
def test_monotone_self_maps_complete(X):
    found = fixtest.monotone_self_maps(X)
    expected = [dict(zip(X.points, im)) for im in itertools.product(X.points, repeat=len(X))
                if all(X.leq(im[X.points.index(a)], im[X.points.index(b)]) for a, b in X.covers)]
    key = lambda f: tuple(f[p] for p in X.points)
    assert sorted(map(key, found)) == sorted(map(key, expected))


def test_fpp_parallel_matches_sequential(kun):
    rng = random.Random(5)
    spaces = [kun.space, library.crown(), library.circle_model(4)]
    for _ in range(10):
        pts = [f"p{i}" for i in range(7)]
        rel = [(a, b) for a, b in itertools.combinations(pts, 2) if rng.random() < 0.3]
        spaces.append(FinitePoset.from_relations(pts, rel))
    for X in spaces:
        seq = fixtest.fpp_check(X)
        par = fixtest.fpp_check(X, jobs=2)
        assert (seq.kind, seq.witness) == (par.kind, par.witness)


def test_fpp_budget():
    cert = fixtest.fpp_check(library.circle_model(6), SearchBudget(max_nodes=2))
    assert cert.kind == "inconclusive"


def test_lift_from_fixed_simplices():
    rep = fixtest.fsp_to_fpp_lift(library.simplex(2))
    assert rep.ok and rep.maps_checked == rep.lifted > 0


def test_certificate_json():
    cert = fixtest.fpp_check(library.crown())
    assert cert.to_json()["kind"] == "refuted" and cert.status == fixtest.REFUTED
