import pytest
from hypothesis import given, settings, strategies as st

from finfpp import fposet, library, scomplex, zhomology
from finfpp.fposet import FinitePoset, MonotoneMap, PosetError


def betti(X):
    b = zhomology.betti(X)
    while len(b) > 1 and b[-1] == 0:
        b.pop()
    return b


@st.composite
def posets(draw, max_points=7):
    n = draw(st.integers(1, max_points))
    pts = [f"p{i}" for i in range(n)]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return FinitePoset.from_relations(pts, [(pts[i], pts[j]) for i, j in chosen])


def test_cover_validation():
    with pytest.raises(PosetError):
        FinitePoset(["a", "b"], [("a", "b"), ("b", "a")])
    with pytest.raises(PosetError):
        FinitePoset(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")])
    X = FinitePoset(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")], repair=True)
    assert X.covers == (("a", "b"), ("b", "c"))
    with pytest.raises(PosetError):
        FinitePoset(["a"], [("a", "z")])


def test_order_queries():
    X = library.chain_poset(3)
    assert X.leq("p0", "p2") and not X.lt("p2", "p0")
    assert X.minimal() == ["p0"] and X.maximal() == ["p2"]
    assert X.height() == 2


def test_face_poset_and_order_complex():
    K = library.simplex_boundary(2)
    X = fposet.face_poset(K)
    assert len(X) == 6
    Kp = fposet.order_complex(X)
    assert Kp == scomplex.barycentric(K)


@given(posets())
@settings(max_examples=40, deadline=None)
def test_face_poset_of_order_complex_matches_homology(X):
    K = fposet.order_complex(X)
    XK = fposet.face_poset(K)
    assert betti(fposet.order_complex(XK)) == betti(K)


@given(posets())
@settings(max_examples=60, deadline=None)
def test_core_preserves_homology(X):
    C = fposet.core(X)
    assert not fposet.beat_points(C)
    assert betti(C) == betti(X)


def test_core_of_contractible():
    assert fposet.is_contractible(library.chain_poset(4))
    assert not fposet.is_contractible(library.crown())
    assert fposet.core(library.circle_model(4)) == library.circle_model(4)


def test_monotone_map_checked():
    X = library.chain_poset(2)
    with pytest.raises(PosetError):
        MonotoneMap(X, X, {"p0": "p1", "p1": "p0"})
    f = MonotoneMap(X, X, {"p0": "p1", "p1": "p1"})
    assert f.fixed_points() == ["p1"]


def test_nh_cylinder_retracts_to_target():
    S = library.circle_model(4)
    D = library.crown()
    f = MonotoneMap(S, D, {"a0": "z", "a1": "z", "a2": "w", "a3": "w",
                           "b0": "x", "b1": "x", "b2": "x", "b3": "x"})
    B, xs, ys = fposet.nh_cylinder(f)
    assert len(B) == 12
    assert B.lt(xs["a0"], ys["z"]) and B.lt(xs["a0"], ys["x"])
    assert not B.lt(xs["a2"], ys["z"])
    assert betti(B) == betti(D)


def test_nh_cylinder_name_collision():
    X = library.chain_poset(2)
    with pytest.raises(PosetError):
        fposet.nh_cylinder(MonotoneMap.identity(X), x_tag=None, y_tag=None)


def test_union_checks_embedding():
    A = FinitePoset(["a", "b"], [("a", "b")])
    B = FinitePoset(["b", "c"], [("b", "c")])
    U = fposet.union(A, B)
    assert U.lt("a", "c")
    with pytest.raises(PosetError):
        fposet.union(A, B, FinitePoset(["a", "c"]))


def test_weak_points():
    X = library.crown()
    assert fposet.weak_points(X) == []
    # t sits over a circle, so only the crown points become weak
    Y = FinitePoset.from_relations(["x", "y", "z", "w", "t"],
                                   [("z", "x"), ("z", "y"), ("w", "x"), ("w", "y"),
                                    ("x", "t"), ("y", "t")])
    assert fposet.weak_points(Y) == ["w", "x", "y", "z"]


def test_functor_maps_commute_with_names():
    K = library.simplex_boundary(2)
    phi = scomplex.SimplicialMap(K, K, {"a": "b", "b": "c", "c": "a"})
    Xphi = fposet.functor_maps(phi)
    assert Xphi("[a,b]") == "[b,c]"
    assert fposet.functor_maps(Xphi).assign == Xphi.assign


def test_dot_export():
    dot = library.crown().to_dot()
    assert dot.startswith("digraph") and '"z" -> "x"' in dot
