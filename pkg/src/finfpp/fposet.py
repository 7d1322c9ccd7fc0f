"""Finite T0 spaces as posets.

A poset is stored through its Hasse diagram.  Points are strings; the order
is the reflexive-transitive closure of the covers.
"""
from __future__ import annotations

from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from .scomplex import SimplicialComplex, SimplicialMap, bary_name


class PosetError(ValueError):
    pass


def _topological(points, succ):
    indeg = {p: 0 for p in points}
    for p in points:
        for q in succ[p]:
            indeg[q] += 1
    ready = sorted(p for p in points if indeg[p] == 0)
    out = []
    while ready:
        p = ready.pop(0)
        out.append(p)
        for q in sorted(succ[p]):
            indeg[q] -= 1
            if indeg[q] == 0:
                ready.append(q)
        ready.sort()
    if len(out) != len(points):
        raise PosetError("cover relation has a cycle")
    return out


class FinitePoset:
    """Finite poset given by cover pairs ``(a, b)`` meaning ``a < b`` is a cover."""

    def __init__(self, points: Iterable[str], covers: Iterable[Tuple[str, str]] = (),
                 labels: Optional[Mapping[str, object]] = None, repair: bool = False):
        pts = list(points)
        if len(set(pts)) != len(pts):
            raise PosetError("duplicate point")
        self.points: Tuple[str, ...] = tuple(sorted(pts))
        pset = set(pts)
        succ: Dict[str, set] = {p: set() for p in pts}
        for a, b in covers:
            if a not in pset or b not in pset:
                raise PosetError(f"cover ({a}, {b}) mentions an unknown point")
            if a == b:
                raise PosetError(f"cover ({a}, {b}) is reflexive")
            succ[a].add(b)
        order = _topological(self.points, succ)
        up: Dict[str, FrozenSet[str]] = {}
        for p in reversed(order):
            acc = set()
            for q in succ[p]:
                acc.add(q)
                acc |= up[q]
            up[p] = frozenset(acc)
        redundant = [(a, b) for a in self.points for b in succ[a]
                     if any(b in up[c] for c in succ[a] if c != b)]
        if redundant and not repair:
            raise PosetError(f"cover {redundant[0]} is implied by transitivity")
        for a, b in redundant:
            succ[a].discard(b)
        self.covers: Tuple[Tuple[str, str], ...] = tuple(sorted((a, b) for a in self.points for b in succ[a]))
        self._up = up
        self._order = order
        self.labels: Dict[str, object] = dict(labels or {})

    @classmethod
    def from_relations(cls, points: Iterable[str], relations: Iterable[Tuple[str, str]],
                       labels=None) -> "FinitePoset":
        """Poset generated by arbitrary ``a < b`` pairs (transitively reduced)."""
        return cls(points, set(relations), labels=labels, repair=True)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p):
        return p in self._up

    def __eq__(self, other):
        return isinstance(other, FinitePoset) and self.points == other.points and self.covers == other.covers

    def __hash__(self):
        return hash((self.points, self.covers))

    def __repr__(self):
        return f"FinitePoset({len(self.points)} points, {len(self.covers)} covers)"

    def up(self, p: str) -> FrozenSet[str]:
        """Strict up-set ``X_{>p}``."""
        return self._up[p]

    @cached_property
    def _down(self) -> Dict[str, FrozenSet[str]]:
        down: Dict[str, set] = {p: set() for p in self.points}
        for p in self.points:
            for q in self._up[p]:
                down[q].add(p)
        return {p: frozenset(s) for p, s in down.items()}

    def down(self, p: str) -> FrozenSet[str]:
        """Strict down-set ``X_{<p}``."""
        return self._down[p]

    def leq(self, a: str, b: str) -> bool:
        return a == b or b in self._up[a]

    def lt(self, a: str, b: str) -> bool:
        return b in self._up[a]

    @cached_property
    def upper_covers(self) -> Dict[str, Tuple[str, ...]]:
        out: Dict[str, list] = {p: [] for p in self.points}
        for a, b in self.covers:
            out[a].append(b)
        return {p: tuple(v) for p, v in out.items()}

    @cached_property
    def lower_covers(self) -> Dict[str, Tuple[str, ...]]:
        out: Dict[str, list] = {p: [] for p in self.points}
        for a, b in self.covers:
            out[b].append(a)
        return {p: tuple(v) for p, v in out.items()}

    def linear_extension(self) -> List[str]:
        """Lexicographically smallest linear extension."""
        return list(self._order)

    def minimal(self) -> List[str]:
        return [p for p in self.points if not self.lower_covers[p]]

    def maximal(self) -> List[str]:
        return [p for p in self.points if not self.upper_covers[p]]

    def relations(self) -> List[Tuple[str, str]]:
        return [(a, b) for a in self.points for b in sorted(self._up[a])]

    def subposet(self, pts: Iterable[str]) -> "FinitePoset":
        keep = set(pts)
        missing = keep - set(self.points)
        if missing:
            raise PosetError(f"unknown points {sorted(missing)[:5]}")
        rel = [(a, b) for a in keep for b in self._up[a] if b in keep]
        return FinitePoset.from_relations(keep, rel, labels={p: l for p, l in self.labels.items() if p in keep})

    def remove(self, pts: Iterable[str]) -> "FinitePoset":
        drop = set(pts)
        return self.subposet(p for p in self.points if p not in drop)

    def opposite(self) -> "FinitePoset":
        return FinitePoset(self.points, [(b, a) for a, b in self.covers], labels=self.labels)

    def rename(self, names) -> "FinitePoset":
        f = names if callable(names) else names.__getitem__
        return FinitePoset([f(p) for p in self.points], [(f(a), f(b)) for a, b in self.covers],
                           labels={f(p): l for p, l in self.labels.items()})

    def is_down_set(self, pts: Iterable[str]) -> bool:
        s = set(pts)
        return all(self._down[p] <= s for p in s)

    def is_up_set(self, pts: Iterable[str]) -> bool:
        s = set(pts)
        return all(self._up[p] <= s for p in s)

    def height(self) -> int:
        """Length of a longest chain minus one."""
        h: Dict[str, int] = {}
        for p in self._order:
            h[p] = max((h[q] + 1 for q in self.lower_covers[p]), default=0)
        return max(h.values(), default=-1)

    def to_json(self) -> dict:
        return {"points": list(self.points), "covers": [list(c) for c in self.covers]}

    def to_dot(self) -> str:
        lines = ["digraph hasse {", "  rankdir=BT;"]
        lines += [f'  "{p}";' for p in self.points]
        lines += [f'  "{a}" -> "{b}";' for a, b in self.covers]
        lines.append("}")
        return "\n".join(lines) + "\n"


class MonotoneMap:
    """Order-preserving map, checked on covers at construction."""

    def __init__(self, source: FinitePoset, target: FinitePoset, assign: Mapping[str, str]):
        self.source = source
        self.target = target
        missing = [p for p in source.points if p not in assign]
        if missing:
            raise PosetError(f"map undefined on {missing[:5]}")
        self.assign: Dict[str, str] = {p: assign[p] for p in source.points}
        for q in self.assign.values():
            if q not in target:
                raise PosetError(f"{q!r} is not a point of the target")
        for a, b in source.covers:
            if not target.leq(self.assign[a], self.assign[b]):
                raise PosetError(f"map is not order preserving on {a} < {b}")

    def __call__(self, p: str) -> str:
        return self.assign[p]

    def compose(self, other: "MonotoneMap") -> "MonotoneMap":
        """``self`` after ``other``."""
        return MonotoneMap(other.source, self.target, {p: self.assign[q] for p, q in other.assign.items()})

    @classmethod
    def identity(cls, X: FinitePoset) -> "MonotoneMap":
        return cls(X, X, {p: p for p in X.points})

    def fixed_points(self) -> List[str]:
        return [p for p, q in self.assign.items() if p == q]

    def __eq__(self, other):
        return (isinstance(other, MonotoneMap) and self.source == other.source
                and self.target == other.target and self.assign == other.assign)

    def __repr__(self):
        return f"MonotoneMap({len(self.assign)} points)"


# -- functors ---------------------------------------------------------------

def face_poset(K: SimplicialComplex) -> FinitePoset:
    """Simplices ordered by inclusion, named like barycenters."""
    pts = [bary_name(s) for s in K.simplices()]
    covers = []
    for s in K.simplices():
        if len(s) > 1:
            for i in range(len(s)):
                covers.append((bary_name(s[:i] + s[i + 1:]), bary_name(s)))
    return FinitePoset(pts, covers, labels={bary_name(s): s for s in K.simplices()})


def order_complex(X: FinitePoset) -> SimplicialComplex:
    """Complex of nonempty chains; its facets are the maximal chains."""
    facets = []

    def extend(chain):
        ups = X.upper_covers[chain[-1]]
        if not ups:
            facets.append(list(chain))
            return
        for q in ups:
            chain.append(q)
            extend(chain)
            chain.pop()

    for p in X.minimal():
        extend([p])
    return SimplicialComplex(facets)


def chain_of(X: FinitePoset, simplex: Sequence[str]) -> List[str]:
    """Vertices of a simplex of ``K(X)`` listed in increasing order."""
    return sorted(simplex, key=lambda p: len(X.down(p)))


def face_map(phi: SimplicialMap, source: Optional[FinitePoset] = None,
             target: Optional[FinitePoset] = None) -> MonotoneMap:
    """``X(phi)``: a simplex goes to its image simplex."""
    source = source or face_poset(phi.source)
    target = target or face_poset(phi.target)
    return MonotoneMap(source, target, {bary_name(s): bary_name(phi.image(s)) for s in phi.source.simplices()})


def chain_map_of(f: MonotoneMap, source: Optional[SimplicialComplex] = None,
                 target: Optional[SimplicialComplex] = None) -> SimplicialMap:
    """``K(f)``: the same point map viewed on order complexes."""
    return SimplicialMap(source or order_complex(f.source), target or order_complex(f.target), f.assign)


def functor_maps(m):
    """``X(m)`` for a simplicial map, ``K(m)`` for a monotone map."""
    if isinstance(m, SimplicialMap):
        return face_map(m)
    if isinstance(m, MonotoneMap):
        return chain_map_of(m)
    raise TypeError(f"expected a SimplicialMap or MonotoneMap, got {type(m).__name__}")


# -- cylinders and gluing ---------------------------------------------------

def _prefixer(tag):
    if tag is None or tag == "":
        return lambda p: p
    if callable(tag):
        return tag
    return lambda p: f"{tag}{p}"


def nh_cylinder(f: MonotoneMap, x_tag="X:", y_tag="Y:") -> Tuple[FinitePoset, Dict[str, str], Dict[str, str]]:
    """Non-Hausdorff mapping cylinder ``B_f``.

    Returns the poset and the renaming dictionaries of the two inclusions.
    ``x < y`` across the parts exactly when ``f(x) <= y``.
    """
    fx, fy = _prefixer(x_tag), _prefixer(y_tag)
    xs = {p: fx(p) for p in f.source.points}
    ys = {q: fy(q) for q in f.target.points}
    if set(xs.values()) & set(ys.values()):
        raise PosetError("point names of the two ends collide; pass distinct tags")
    rel = [(xs[a], xs[b]) for a, b in f.source.covers]
    rel += [(ys[a], ys[b]) for a, b in f.target.covers]
    for p, q in f.assign.items():
        rel.append((xs[p], ys[q]))
    B = FinitePoset.from_relations(list(xs.values()) + list(ys.values()), rel)
    return B, xs, ys


def union(*posets: FinitePoset) -> FinitePoset:
    """Poset generated by the orders of ``posets`` on the union of their points.

    Shared point names are identified.  Each input must embed as a subposet
    of the result; a violation raises.
    """
    pts = set()
    rel = set()
    labels = {}
    for P in posets:
        pts |= set(P.points)
        rel |= set(P.covers)
        labels.update(P.labels)
    U = FinitePoset.from_relations(pts, rel, labels=labels)
    for P in posets:
        for a in P.points:
            for b in P.points:
                if U.lt(a, b) != P.lt(a, b):
                    raise PosetError(f"gluing changes the order between {a} and {b}")
    return U


# -- Stong reductions -------------------------------------------------------

def up_beat_points(X: FinitePoset) -> List[str]:
    return [p for p in X.points if len(X.upper_covers[p]) == 1]


def down_beat_points(X: FinitePoset) -> List[str]:
    return [p for p in X.points if len(X.lower_covers[p]) == 1]


def beat_points(X: FinitePoset) -> List[str]:
    return sorted(set(up_beat_points(X)) | set(down_beat_points(X)))


def core(X: FinitePoset) -> FinitePoset:
    """Remove the least beat point until none is left."""
    while True:
        beats = beat_points(X)
        if not beats:
            return X
        X = X.remove([beats[0]])


def is_contractible(X: FinitePoset) -> bool:
    """True when ``X`` dismantles to a point.

    A poset whose core is not a point may still be contractible in the weak
    sense; callers that need the distinction should look at ``core`` directly.
    """
    return len(X) > 0 and len(core(X)) == 1


def is_weak_point(X: FinitePoset, p: str) -> bool:
    if p not in X:
        raise PosetError(f"{p!r} is not a point")
    below, above = X.down(p), X.up(p)
    return bool(below and is_contractible(X.subposet(below))) or bool(above and is_contractible(X.subposet(above)))


def weak_points(X: FinitePoset) -> List[str]:
    return [p for p in X.points if is_weak_point(X, p)]
