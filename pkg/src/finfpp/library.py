"""Small standard complexes and posets used throughout the tests and demos."""
from __future__ import annotations

import itertools
import string

from .fposet import FinitePoset
from .scomplex import SimplicialComplex


def _names(n):
    return list(string.ascii_lowercase[:n]) if n <= 26 else [f"v{i}" for i in range(n)]


def simplex(n: int) -> SimplicialComplex:
    return SimplicialComplex([_names(n + 1)])


def simplex_boundary(n: int) -> SimplicialComplex:
    """Boundary of the ``n``-simplex, an ``(n-1)``-sphere."""
    vs = _names(n + 1)
    return SimplicialComplex(itertools.combinations(vs, n))


def cycle(m: int, prefix: str = "c") -> SimplicialComplex:
    vs = [f"{prefix}{i}" for i in range(m)]
    return SimplicialComplex([(vs[i], vs[(i + 1) % m]) for i in range(m)])


def path(m: int) -> SimplicialComplex:
    vs = _names(m)
    return SimplicialComplex([(vs[i], vs[i + 1]) for i in range(m - 1)])


def torus7() -> SimplicialComplex:
    """Möbius' minimal 7-vertex triangulation of the torus."""
    facets = []
    for i in range(7):
        facets.append([str(i), str((i + 1) % 7), str((i + 3) % 7)])
        facets.append([str(i), str((i + 2) % 7), str((i + 3) % 7)])
    return SimplicialComplex(facets)


def rp2_6() -> SimplicialComplex:
    """Minimal 6-vertex triangulation of the real projective plane."""
    tri = ["123", "134", "145", "156", "162", "235", "346", "452", "563", "624"]
    return SimplicialComplex([list(t) for t in tri])


def crown(names=("x", "y", "z", "w")) -> FinitePoset:
    """4-point model of the circle: two maxima above two minima."""
    x, y, z, w = names
    return FinitePoset([x, y, z, w], [(z, x), (z, y), (w, x), (w, y)])


def chain_poset(n: int) -> FinitePoset:
    pts = [f"p{i}" for i in range(n)]
    return FinitePoset(pts, [(pts[i], pts[i + 1]) for i in range(n - 1)])


def circle_model(m: int = 4, prefix: str = "") -> FinitePoset:
    """``2m``-point circle: minima ``a_i`` below maxima ``b_i`` and ``b_{i-1}``."""
    a = [f"{prefix}a{i}" for i in range(m)]
    b = [f"{prefix}b{i}" for i in range(m)]
    covers = []
    for i in range(m):
        covers.append((a[i], b[i]))
        covers.append((a[(i + 1) % m], b[i]))
    return FinitePoset(a + b, covers)
