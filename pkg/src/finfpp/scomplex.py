"""Finite abstract simplicial complexes.

Vertices are opaque strings.  A simplex is a sorted tuple of vertex names and a
complex is stored through its facets (maximal simplices).  Barycentric
subdivision names the barycenter of a simplex ``(a, b)`` as ``"[a,b]"`` and
records that simplex in ``labels``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .chains import Chain, Simplex


class ComplexError(ValueError):
    """Malformed complex, map or simplex argument."""


def bary_name(simplex: Sequence[str]) -> str:
    return "[" + ",".join(simplex) + "]"


def _faces(simplex: Simplex) -> Iterable[Simplex]:
    for r in range(1, len(simplex) + 1):
        yield from itertools.combinations(simplex, r)


class SimplicialComplex:
    """A finite abstract simplicial complex given by its facets.

    ``labels`` maps a vertex to the simplex of ``parent`` it was created from
    (barycenters, stellar vertices).  Values are never mutated after
    construction.
    """

    def __init__(self, facets: Iterable[Iterable[str]] = (), labels: Optional[Mapping[str, Simplex]] = None,
                 parent: Optional["SimplicialComplex"] = None, extra_vertices: Iterable[str] = ()):
        raw = []
        for f in facets:
            f = list(f)
            if not f:
                raise ComplexError("empty facet")
            if len(set(f)) != len(f):
                raise ComplexError(f"duplicate vertex inside facet {f}")
            for v in f:
                if not isinstance(v, str):
                    raise ComplexError(f"vertex names must be strings, got {v!r}")
            raw.append(tuple(sorted(f)))
        raw.extend((v,) for v in extra_vertices)
        raw = sorted(set(raw), key=lambda s: (-len(s), s))
        kept: List[frozenset] = []
        facets_out = []
        for s in raw:
            fs = frozenset(s)
            if any(fs <= k for k in kept):
                continue
            kept.append(fs)
            facets_out.append(s)
        self.facets: Tuple[Simplex, ...] = tuple(sorted(facets_out))
        self.vertices: Tuple[str, ...] = tuple(sorted({v for f in self.facets for v in f}))
        self.labels: Dict[str, Simplex] = dict(labels or {})
        self.parent = parent

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def __repr__(self):
        return f"SimplicialComplex(dim={self.dim}, vertices={len(self.vertices)}, facets={len(self.facets)})"

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self.facets == other.facets

    def __hash__(self):
        return hash(self.facets)

    @cached_property
    def vertices_set(self) -> frozenset:
        return frozenset(self.vertices)

    @cached_property
    def _simplex_set(self) -> frozenset:
        return frozenset(s for f in self.facets for s in _faces(f))

    @cached_property
    def _by_dim(self) -> Dict[int, List[Simplex]]:
        out: Dict[int, List[Simplex]] = {}
        for s in self._simplex_set:
            out.setdefault(len(s) - 1, []).append(s)
        for k in out:
            out[k].sort()
        return out

    def simplices(self, k: Optional[int] = None) -> List[Simplex]:
        if k is None:
            return sorted(self._simplex_set, key=lambda s: (len(s), s))
        return list(self._by_dim.get(k, []))

    def f_vector(self) -> List[int]:
        return [len(self._by_dim.get(k, [])) for k in range(self.dim + 1)]

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * n for k, n in enumerate(self.f_vector()))

    def __contains__(self, simplex) -> bool:
        return tuple(sorted(simplex)) in self._simplex_set

    def is_simplex(self, vertices: Iterable[str]) -> bool:
        return tuple(sorted(set(vertices))) in self._simplex_set

    @cached_property
    def _vertex_facets(self) -> Dict[str, List[Simplex]]:
        out: Dict[str, List[Simplex]] = {v: [] for v in self.vertices}
        for f in self.facets:
            for v in f:
                out[v].append(f)
        return out

    def facets_containing(self, simplex: Sequence[str]) -> List[Simplex]:
        simplex = tuple(simplex)
        if not simplex:
            return list(self.facets)
        fs = set(simplex)
        return [f for f in self._vertex_facets.get(simplex[0], []) if fs <= set(f)]

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def subcomplex(self, simplices: Iterable[Iterable[str]]) -> "SimplicialComplex":
        sub = SimplicialComplex(simplices)
        for f in sub.facets:
            if f not in self._simplex_set:
                raise ComplexError(f"{f} is not a simplex of the complex")
        return sub

    def induced_subcomplex(self, vertices: Iterable[str]) -> "SimplicialComplex":
        vs = set(vertices)
        return SimplicialComplex(
            [tuple(v for v in f if v in vs) for f in self.facets if any(v in vs for v in f)])

    def is_full_subcomplex(self, sub: "SimplicialComplex") -> bool:
        if any(f not in self._simplex_set for f in sub.facets):
            return False
        return self.induced_subcomplex(sub.vertices) == sub

    def rename(self, names: Mapping[str, str] | Callable[[str], str]) -> "SimplicialComplex":
        f = names if callable(names) else names.__getitem__
        return SimplicialComplex([[f(v) for v in s] for s in self.facets])

    def to_json(self) -> dict:
        out = {"facets": [list(f) for f in self.facets]}
        if self.labels:
            out["labels"] = {v: list(s) for v, s in sorted(self.labels.items())}
        return out


def validate(raw_facets: Iterable[Iterable[str]]) -> SimplicialComplex:
    """Canonical complex from a list of vertex sets (non-maximal sets absorbed)."""
    return SimplicialComplex(raw_facets)


def deg(K: SimplicialComplex, simplex: Sequence[str]) -> int:
    """Number of facets of ``K`` containing ``simplex``."""
    simplex = tuple(sorted(simplex))
    if simplex not in K:
        raise ComplexError(f"{simplex} is not a simplex of the complex")
    return len(K.facets_containing(simplex))


def max_degree(K: SimplicialComplex) -> Tuple[int, Tuple[str, ...]]:
    if not K.facets:
        raise ComplexError("max_degree of the empty complex")
    degs = {v: len(K._vertex_facets[v]) for v in K.vertices}
    d = max(degs.values())
    return d, tuple(v for v in K.vertices if degs[v] == d)


# -- subdivisions ---------------------------------------------------------

def barycentric(K: SimplicialComplex) -> SimplicialComplex:
    """First barycentric subdivision; facets are maximal flags of faces."""
    facets = []
    for f in K.facets:
        for perm in itertools.permutations(f):
            facets.append([bary_name(tuple(sorted(perm[:i + 1]))) for i in range(len(perm))])
    labels = {bary_name(s): s for s in K.simplices()}
    return SimplicialComplex(facets, labels=labels, parent=K)


def iterated_barycentric(K: SimplicialComplex, j: int) -> SimplicialComplex:
    for _ in range(j):
        K = barycentric(K)
    return K


class SimplicialMap:
    """Vertex map certified to send simplices to simplices."""

    def __init__(self, source: SimplicialComplex, target: SimplicialComplex, assign: Mapping[str, str]):
        self.source = source
        self.target = target
        missing = [v for v in source.vertices if v not in assign]
        if missing:
            raise ComplexError(f"map undefined on vertices {missing[:5]}")
        self.assign: Dict[str, str] = {v: assign[v] for v in source.vertices}
        for w in self.assign.values():
            if w not in target.vertices_set:
                raise ComplexError(f"{w!r} is not a vertex of the target")
        for f in source.facets:
            if not target.is_simplex(self.assign[v] for v in f):
                raise ComplexError(f"image of {f} is not a simplex of the target")

    def __call__(self, v: str) -> str:
        return self.assign[v]

    def image(self, simplex: Sequence[str]) -> Simplex:
        return tuple(sorted({self.assign[v] for v in simplex}))

    def compose(self, other: "SimplicialMap") -> "SimplicialMap":
        """``self`` after ``other``."""
        return SimplicialMap(other.source, self.target, {v: self.assign[w] for v, w in other.assign.items()})

    @classmethod
    def identity(cls, K: SimplicialComplex) -> "SimplicialMap":
        return cls(K, K, {v: v for v in K.vertices})

    def is_identity(self) -> bool:
        return all(k == v for k, v in self.assign.items())

    def __eq__(self, other):
        return (isinstance(other, SimplicialMap) and self.source == other.source
                and self.target == other.target and self.assign == other.assign)

    def __repr__(self):
        return f"SimplicialMap({len(self.assign)} vertices)"


def induced_barycentric_map(phi: SimplicialMap, j: int = 1,
                            source_sub: Optional[SimplicialComplex] = None,
                            target_sub: Optional[SimplicialComplex] = None) -> SimplicialMap:
    """The map ``b(s) -> b(phi(s))`` on barycentric subdivisions, iterated ``j`` times."""
    for _ in range(j):
        src = source_sub or barycentric(phi.source)
        tgt = target_sub or barycentric(phi.target)
        assign = {bary_name(s): bary_name(phi.image(s)) for s in phi.source.simplices()}
        phi = SimplicialMap(src, tgt, assign)
        source_sub = target_sub = None
    return phi


def _fresh_stellar_name(K: SimplicialComplex, simplex: Simplex) -> str:
    base = f"b({','.join(simplex)})#"
    existing = set(K.vertices)
    t = 1
    while f"{base}{t}" in existing:
        t += 1
    return f"{base}{t}"


def stellar_subdivide(K: SimplicialComplex, simplex: Sequence[str], name: Optional[str] = None) -> SimplicialComplex:
    """Star ``simplex`` at a fresh vertex.

    The new vertex is labelled by ``simplex``; old vertices by themselves.
    """
    simplex = tuple(sorted(simplex))
    if simplex not in K:
        raise ComplexError(f"{simplex} is not a simplex of the complex")
    b = name or _fresh_stellar_name(K, simplex)
    sset = set(simplex)
    facets = []
    for f in K.facets:
        if sset <= set(f):
            for w in simplex:
                facets.append([b] + [v for v in f if v != w])
        else:
            facets.append(list(f))
    labels = {v: (v,) for v in K.vertices}
    labels[b] = simplex
    return SimplicialComplex(facets, labels=labels, parent=K)


def carrier_in(sub: SimplicialComplex, vertex: str, ancestor: SimplicialComplex) -> Simplex:
    """Simplex of ``ancestor`` whose interior contains ``vertex`` of ``sub``.

    Walks the ``parent`` chain recorded by ``barycentric`` and
    ``stellar_subdivide``.
    """
    current = sub
    support = {vertex}
    while current is not ancestor:
        if current.parent is None:
            raise ComplexError("ancestor not reached through subdivision provenance")
        support = {w for v in support for w in current.labels[v]}
        current = current.parent
    return tuple(sorted(support))


def approximation_to_identity(sub: SimplicialComplex, ancestor: SimplicialComplex) -> SimplicialMap:
    """Vertex map sending each vertex to the least vertex of its carrier."""
    return SimplicialMap(sub, ancestor, {v: carrier_in(sub, v, ancestor)[0] for v in sub.vertices})


# -- pseudomanifolds --------------------------------------------------------

@dataclass
class Orientation:
    complex: SimplicialComplex
    signs: Dict[Simplex, int]

    def fundamental_chain(self) -> Chain:
        return Chain(self.complex.dim, dict(self.signs))


@dataclass
class PseudomanifoldReport:
    pure: bool
    strongly_connected: bool
    closed: bool
    orientable: bool
    orientation: Optional[Orientation] = None
    dim: int = -1

    def to_json(self) -> dict:
        return {"dim": self.dim, "pure": self.pure, "strongly_connected": self.strongly_connected,
                "closed": self.closed, "orientable": self.orientable}


def pseudomanifold_check(K: SimplicialComplex) -> PseudomanifoldReport:
    """Purity, ridge pairing, strong connectivity and orientability.

    Orientations are propagated breadth-first from the least facet, which gets
    sign +1 relative to its sorted vertex order.
    """
    n = K.dim
    pure = K.is_pure() and bool(K.facets)
    ridges: Dict[Simplex, List[Simplex]] = {}
    for f in K.facets:
        if len(f) == n + 1:
            for i in range(len(f)):
                ridges.setdefault(f[:i] + f[i + 1:], []).append(f)
    paired = pure and n >= 1 and all(len(fs) == 2 for fs in ridges.values())
    # strong connectivity via ridges
    seen = {K.facets[0]} if K.facets else set()
    queue = list(seen)
    while queue:
        f = queue.pop()
        for i in range(len(f)):
            for g in ridges.get(f[:i] + f[i + 1:], []):
                if g not in seen:
                    seen.add(g)
                    queue.append(g)
    connected = pure and len(seen) == len(K.facets)
    closed = pure and paired and connected
    if not closed:
        return PseudomanifoldReport(pure, connected, False, False, None, n)
    signs = {K.facets[0]: 1}
    order = [K.facets[0]]
    orientable = True
    head = 0
    while head < len(order) and orientable:
        f = order[head]
        head += 1
        for i in range(len(f)):
            ridge = f[:i] + f[i + 1:]
            induced = signs[f] * (-1) ** i
            for g in ridges[ridge]:
                if g == f:
                    continue
                j = next(idx for idx, v in enumerate(g) if v not in ridge)
                want = -induced * (-1) ** j
                if g in signs:
                    if signs[g] != want:
                        orientable = False
                else:
                    signs[g] = want
                    order.append(g)
    orientation = Orientation(K, signs) if orientable else None
    return PseudomanifoldReport(True, True, True, orientable, orientation, n)


# -- mapping cylinders ------------------------------------------------------

@dataclass
class Cylinder:
    complex: SimplicialComplex
    i: SimplicialMap
    j: SimplicialMap
    p: SimplicialMap
    order: List[str]
    source_names: Dict[str, str] = field(default_factory=dict)
    target_names: Dict[str, str] = field(default_factory=dict)


def _namer(names, tag):
    if names is None:
        return lambda v: f"{tag}{v}"
    if callable(names):
        return names
    return names.__getitem__


def mapping_cylinder(phi: SimplicialMap, order: Optional[Sequence[str]] = None,
                     source_names=None, target_names=None) -> Cylinder:
    """Simplicial mapping cylinder of ``phi`` relative to a total vertex order.

    Simplices are those of the target plus
    ``{v_0..v_l, phi(v_l or v_{l+1})..phi(v_m)}`` for ordered simplices of the
    source.  By default source vertices are renamed ``"s:v"`` and target
    vertices ``"t:v"``; pass dicts or callables to control naming.
    """
    src, tgt = phi.source, phi.target
    order = list(order) if order is not None else list(src.vertices)
    if sorted(order) != list(src.vertices):
        raise ComplexError("order must list every source vertex exactly once")
    rank = {v: i for i, v in enumerate(order)}
    sname = _namer(source_names, "s:")
    tname = _namer(target_names, "t:")
    smap = {v: sname(v) for v in src.vertices}
    tmap = {v: tname(v) for v in tgt.vertices}
    if set(smap.values()) & set(tmap.values()):
        raise ComplexError("source and target names collide in the cylinder")
    facets = [[tmap[v] for v in f] for f in tgt.facets]
    for f in src.facets:
        vs = sorted(f, key=rank.__getitem__)
        for l in range(len(vs)):
            facets.append([smap[v] for v in vs[:l + 1]] + sorted({tmap[phi.assign[v]] for v in vs[l:]}))
    Z = SimplicialComplex(facets)
    i = SimplicialMap(src, Z, smap)
    j = SimplicialMap(tgt, Z, tmap)
    passign = {tmap[v]: v for v in tgt.vertices}
    passign.update({smap[v]: phi.assign[v] for v in src.vertices})
    p = SimplicialMap(Z, tgt, passign)
    return Cylinder(Z, i, j, p, order, smap, tmap)


# -- convex hulls of barycenters -------------------------------------------

def _comparable_or_disjoint(a: frozenset, b: frozenset) -> bool:
    return a <= b or b <= a or not (a & b)


def carrier_hull(sets: Sequence[Sequence[str]]) -> SimplicialComplex:
    """Convex hull of the barycenters of ``sets`` as a subcomplex of the subdivision.

    The faces must be pairwise comparable or disjoint.  Disjoint pairs with
    the largest union are split at the barycenter of that union until every
    remaining family is a chain.  Vertices are barycenter names.
    """
    fams = [frozenset(s) for s in sets]
    for a, b in itertools.combinations(fams, 2):
        if not _comparable_or_disjoint(a, b):
            raise ComplexError(f"faces {sorted(a)} and {sorted(b)} are neither comparable nor disjoint")
    out = set()
    _hull(frozenset(fams), out)
    faces = [[bary_name(tuple(sorted(s))) for s in chain] for chain in out]
    labels = {bary_name(tuple(sorted(s))): tuple(sorted(s)) for chain in out for s in chain}
    return SimplicialComplex(faces, labels=labels)


def _hull(fam: frozenset, out: set):
    best = None
    for a, b in itertools.combinations(sorted(fam, key=lambda s: (len(s), sorted(s))), 2):
        if not (a & b):
            u = a | b
            if best is None or len(u) > len(best[2]):
                best = (a, b, u)
    if best is None:
        out.add(fam)
        return
    a, b, u = best
    _hull((fam - {a}) | {u}, out)
    _hull((fam - {b}) | {u}, out)


def mesh_and_bound(K: SimplicialComplex, s: int) -> Fraction:
    """Upper bound ``(n/(n+1))**s`` on simplex diameters of the ``s``-th subdivision."""
    if not K.facets:
        raise ComplexError("mesh bound of the empty complex")
    n = K.dim
    return Fraction(n, n + 1) ** s
