"""Exhaustive certification: automorphisms, asymmetry, fixed simplices and fixed points.

Searches report three outcomes: the property holds (exhaustive), it is
refuted (with a re-checkable witness), or the budget ran out.
"""
from __future__ import annotations

import math
from fractions import Fraction
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple, Union

from .budget import BudgetExceeded, Counter, SearchBudget
from .fposet import FinitePoset, MonotoneMap, face_poset
from .scomplex import (ComplexError, SimplicialComplex, SimplicialMap, barycentric, bary_name,
                       deg, max_degree, pseudomanifold_check, stellar_subdivide)

HOLDS, REFUTED, INCONCLUSIVE = "holds", "refuted", "inconclusive"


@dataclass
class Certificate:
    kind: str                      # asymmetric | fsp | fpp | refuted | inconclusive
    witness: Optional[dict] = None
    stats: Dict[str, object] = field(default_factory=dict)

    @property
    def status(self) -> str:
        if self.kind == "refuted":
            return REFUTED
        if self.kind == "inconclusive":
            return INCONCLUSIVE
        return HOLDS

    def to_json(self) -> dict:
        return {"kind": self.kind, "witness": self.witness, "stats": self.stats}


# -- automorphisms ----------------------------------------------------------

def _complex_structure(K: SimplicialComplex):
    verts = list(K.vertices)
    idx = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for f in K.facets:
        m = 0
        for v in f:
            m |= 1 << idx[v]
        for v in f:
            adj[idx[v]] |= m & ~(1 << idx[v])
    facet_masks = {sum(1 << idx[v] for v in f) for f in K.facets}
    inv = []
    for v in verts:
        sizes = tuple(sorted(len(f) for f in K._vertex_facets[v]))
        inv.append((sizes, bin(adj[idx[v]]).count("1")))
    vfacets = [[sum(1 << idx[w] for w in f) for f in K._vertex_facets[v]] for v in verts]
    return verts, adj, inv, facet_masks, vfacets


def _poset_structure(X: FinitePoset):
    verts = list(X.points)
    idx = {v: i for i, v in enumerate(verts)}
    up = [sum(1 << idx[q] for q in X.upper_covers[p]) for p in verts]
    down = [sum(1 << idx[q] for q in X.lower_covers[p]) for p in verts]
    inv = [(len(X.up(p)), len(X.down(p)), len(X.upper_covers[p]), len(X.lower_covers[p])) for p in verts]
    return verts, up, down, inv


def _search_order(n, adj):
    order, seen = [], set()
    for start in range(n):
        if start in seen:
            continue
        queue = [start]
        seen.add(start)
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in range(n):
                if adj[v] >> w & 1 and w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


def automorphisms(obj: Union[SimplicialComplex, FinitePoset], budget: Optional[SearchBudget] = None,
                  limit: Optional[int] = None) -> List[Dict[str, str]]:
    """All automorphisms as vertex (point) dictionaries; identity first."""
    counter = Counter(budget)
    if isinstance(obj, FinitePoset):
        verts, up, down, inv = _poset_structure(obj)
        n = len(verts)
        adj = [up[i] | down[i] for i in range(n)]

        def consistent(f, v, w):
            for u in range(n):
                fu = f[u]
                if fu < 0:
                    continue
                if (up[v] >> u & 1) != (up[w] >> fu & 1) or (down[v] >> u & 1) != (down[w] >> fu & 1):
                    return False
            return True

        def final_ok(f):
            return True
    else:
        verts, adj, inv, facet_masks, vfacets = _complex_structure(obj)
        n = len(verts)

        def consistent(f, v, w):
            for u in range(n):
                fu = f[u]
                if fu >= 0 and (adj[v] >> u & 1) != (adj[w] >> fu & 1):
                    return False
            for m in vfacets[v]:
                img = 0
                full = True
                for u in range(n):
                    if m >> u & 1:
                        fu = w if u == v else f[u]
                        if fu < 0:
                            full = False
                            break
                        img |= 1 << fu
                if full and img not in facet_masks:
                    return False
            return True

        def final_ok(f):
            return {sum(1 << f[u] for u in range(n) if m >> u & 1) for m in facet_masks} == facet_masks

    order = _search_order(n, adj)
    f = [-1] * n
    used = [False] * n
    out = []

    def dfs(i):
        counter.tick()
        if limit is not None and len(out) >= limit:
            return
        if i == n:
            if final_ok(f):
                out.append({verts[u]: verts[f[u]] for u in range(n)})
            return
        v = order[i]
        cands = [v] + [w for w in range(n) if w != v]
        for w in cands:
            if used[w] or inv[w] != inv[v] or not consistent(f, v, w):
                continue
            f[v], used[w] = w, True
            dfs(i + 1)
            f[v], used[w] = -1, False

    dfs(0)
    return out


def is_asymmetric(K, budget: Optional[SearchBudget] = None) -> Tuple[bool, Optional[str]]:
    """Whether some vertex is fixed by every automorphism (and the least such)."""
    auts = automorphisms(K, budget)
    verts = K.points if isinstance(K, FinitePoset) else K.vertices
    fixed = [v for v in verts if all(a[v] == v for a in auts)]
    return (True, fixed[0]) if fixed else (False, None)


# -- asymmetric subdivisions ------------------------------------------------

class AsymmetrizeError(ValueError):
    pass


@dataclass
class AsymmetrizeResult:
    complex: SimplicialComplex
    v0: str
    certificate: Dict[str, object]


def degree_formula_holds(L: SimplicialComplex, Lp: Optional[SimplicialComplex] = None) -> bool:
    """Check ``deg_{L'}(b(s)) = (k+1)!(n-k)! deg_L(s)`` for every simplex ``s``."""
    Lp = Lp or barycentric(L)
    n = L.dim
    for s in L.simplices():
        k = len(s) - 1
        if deg(Lp, (bary_name(s),)) != math.factorial(k + 1) * math.factorial(n - k) * deg(L, s):
            return False
    return True


def asymmetrize(M: SimplicialComplex, max_passes: int = 10, budget: Optional[SearchBudget] = None) -> AsymmetrizeResult:
    """Subdivide a closed pseudomanifold until one vertex has strictly maximal degree.

    Each pass stars every facet containing the chosen vertex.  The result is
    accepted only after an exhaustive automorphism check and a check of the
    subdivision degree formula on ``L'``.
    """
    rep = pseudomanifold_check(M)
    n = M.dim
    if n == 1:
        raise AsymmetrizeError("no 1-dimensional pseudomanifold is asymmetric")
    if n < 1 or not rep.closed:
        raise AsymmetrizeError("input is not a closed pseudomanifold of dimension >= 2")
    d_in, attainers = max_degree(M)
    v0 = attainers[0]
    L = M
    passes = 0
    while True:
        d, att = max_degree(L)
        if att == (v0,):
            break
        if passes >= max_passes:
            raise AsymmetrizeError(f"degrees not separated after {passes} passes: max {d} attained by {att[:6]}")
        for f in L.facets_containing((v0,)):
            L = stellar_subdivide(L, f)
        passes += 1
    degs = sorted((len(L.facets_containing((v,))) for v in L.vertices), reverse=True)
    auts = automorphisms(L, budget)
    fixes_v0 = all(a[v0] == v0 for a in auts)
    Lp = barycentric(L)
    formula = degree_formula_holds(L, Lp)
    dLp, attLp = max_degree(Lp)
    cert = {
        "passes": passes,
        "input_max_degree": d_in,
        "input_is_simplex_boundary": d_in == n + 1 and len(M.vertices) == n + 2,
        "v0": v0,
        "degree_v0": degs[0],
        "next_degree": degs[1] if len(degs) > 1 else 0,
        "strict_gap": degs[0] > (degs[1] if len(degs) > 1 else 0),
        "automorphisms": len(auts),
        "all_fix_v0": fixes_v0,
        "degree_formula": formula,
        "subdivided_max_degree": dLp,
        "subdivided_attainers": list(attLp),
        "subdivided_prediction": dLp == math.factorial(n) * degs[0] and attLp == (bary_name((v0,)),),
    }
    if not (cert["strict_gap"] and fixes_v0 and formula and cert["subdivided_prediction"]):
        raise AsymmetrizeError(f"certification failed: {cert}")
    return AsymmetrizeResult(L, v0, cert)


# -- fixed simplex property -------------------------------------------------

def _fsp_setup(K: SimplicialComplex):
    verts = list(K.vertices)
    idx = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    simplices = {sum(1 << idx[v] for v in s) for s in K.simplices()}
    # sorted vertex order keeps the first witness lexicographically least
    order = list(range(n))
    vfacets = [[sum(1 << idx[w] for w in f) for f in K._vertex_facets[v]] for v in verts]
    return verts, simplices, order, vfacets


def _fsp_search(K: SimplicialComplex, max_nodes: int, first: Optional[int] = None):
    verts, simplices, order, vfacets = _fsp_setup(K)
    n = len(verts)
    counter = Counter(SearchBudget(max_nodes=max_nodes))
    f = [-1] * n
    found = []

    def ok(v, w):
        for m in vfacets[v]:
            img = 1 << w
            mm = m & ~(1 << v)
            u = 0
            while mm:
                if mm & 1 and f[u] >= 0:
                    img |= 1 << f[u]
                mm >>= 1
                u += 1
            if img not in simplices:
                return False
        # cycle closed through v whose vertex set is a simplex means a fixed simplex
        x, cyc = w, 1 << v
        steps = 0
        while x != v and f[x] >= 0 and steps <= n:
            cyc |= 1 << x
            x = f[x]
            steps += 1
        if x == v and cyc in simplices:
            return False
        return True

    def dfs(i):
        counter.tick()
        if i == n:
            found.append(list(f))
            return True
        v = order[i]
        cands = range(n) if not (i == 0 and first is not None) else [first]
        for w in cands:
            if w == v or not ok(v, w):
                continue
            f[v] = w
            if dfs(i + 1):
                return True
            f[v] = -1
        return False

    try:
        dfs(0)
    except BudgetExceeded:
        return None, counter.nodes, True
    wit = {verts[u]: verts[found[0][u]] for u in range(n)} if found else None
    return wit, counter.nodes, False


def _fsp_worker(args):
    K, max_nodes, first = args
    return _fsp_search(K, max_nodes, first)


def has_fixed_simplex(phi: SimplicialMap) -> Optional[Tuple[str, ...]]:
    for s in phi.source.simplices():
        if phi.image(s) == s:
            return s
    return None


def fsp_check(K: SimplicialComplex, budget: Optional[SearchBudget] = None, jobs: int = 1) -> Certificate:
    """Search for a simplicial self-map fixing no simplex.

    Branches die as soon as the partial map closes a cycle whose vertex set
    is a simplex.  With ``jobs > 1`` the first vertex's images are split
    across processes; the witness is the same as in the sequential run.
    """
    budget = budget or SearchBudget()
    if not K.facets:
        return Certificate("fsp", None, {"nodes": 0})
    if jobs <= 1:
        wit, nodes, over = _fsp_search(K, budget.max_nodes)
    else:
        n = len(K.vertices)
        _, _, order, _ = _fsp_setup(K)
        with ProcessPoolExecutor(jobs) as ex:
            results = list(ex.map(_fsp_worker, [(K, budget.max_nodes, w) for w in range(n) if w != order[0]]))
        wit, nodes, over = None, 0, False
        for w_, nd, ov in results:
            nodes += nd
            if wit is None:
                if ov:
                    over = True
                    break
                if w_ is not None:
                    wit = w_
        if wit is not None:
            over = False
    if wit is not None:
        phi = SimplicialMap(K, K, wit)
        assert has_fixed_simplex(phi) is None
        return Certificate("refuted", {"map": wit}, {"nodes": nodes})
    if over:
        return Certificate("inconclusive", None, {"nodes": nodes})
    return Certificate("fsp", None, {"nodes": nodes})


def simplicial_self_maps(K: SimplicialComplex, budget: Optional[SearchBudget] = None) -> Iterator[Dict[str, str]]:
    """Every simplicial self-map of ``K``."""
    verts, simplices, order, vfacets = _fsp_setup(K)
    n = len(verts)
    counter = Counter(budget)
    f = [-1] * n

    def ok(v, w):
        for m in vfacets[v]:
            img = 1 << w
            for u in range(n):
                if m >> u & 1 and u != v and f[u] >= 0:
                    img |= 1 << f[u]
            if img not in simplices:
                return False
        return True

    def rec(i):
        counter.tick()
        if i == n:
            yield {verts[u]: verts[f[u]] for u in range(n)}
            return
        v = order[i]
        for w in range(n):
            if ok(v, w):
                f[v] = w
                yield from rec(i + 1)
                f[v] = -1

    yield from rec(0)


def decomposition_check(L: SimplicialComplex, v0: str, budget: Optional[SearchBudget] = None) -> Certificate:
    """FSP for an asymmetric closed oriented pseudomanifold, one map at a time.

    Every simplicial self-map either has nonzero Lefschetz number (checked on
    rational homology) or pushes the fundamental cycle to a cycle of full norm,
    in which case it must be an automorphism and fix ``v0``.  Any map falling
    in neither class refutes the certificate.
    """
    from .zhomology import HomologyCoordinates, IntChainComplex, push, rational_basis

    rep = pseudomanifold_check(L)
    if not (rep.closed and rep.orientable):
        raise ComplexError("decomposition check needs a closed oriented pseudomanifold")
    fund = rep.orientation.fundamental_chain()
    C = IntChainComplex(L)
    bases = {k: rational_basis(C, k) for k in range(L.dim + 1)}
    coords = {k: HomologyCoordinates(C, k, b) for k, b in bases.items()}
    n_lef = n_aut = 0
    nfacets = len(L.facets)
    try:
        for assign in simplicial_self_maps(L, budget):
            phi = SimplicialMap(L, L, assign)
            lam = Fraction(0)
            for k, b in bases.items():
                for i, g in enumerate(b):
                    lam += (-1) ** k * coords[k].coordinates(push(phi, g))[i]
            if lam != 0:
                n_lef += 1
                continue
            img = push(phi, fund)
            if img.norm() == nfacets and len(set(assign.values())) == len(assign) and assign[v0] == v0:
                n_aut += 1
                continue
            stats = {"maps": n_lef + n_aut}
            if has_fixed_simplex(phi) is None:
                return Certificate("refuted", {"map": assign, "lefschetz": str(lam)}, stats)
            stats["reason"] = "decomposition does not apply"
            return Certificate("inconclusive", {"map": assign, "lefschetz": str(lam)}, stats)
    except BudgetExceeded as e:
        return Certificate("inconclusive", None, {"nodes": e.nodes, "maps": n_lef + n_aut})
    return Certificate("fsp", {"method": "decomposition", "v0": v0},
                       {"maps": n_lef + n_aut, "lefschetz_nonzero": n_lef, "automorphisms_fixing_v0": n_aut})


# -- fixed point property of finite spaces ----------------------------------

class _MonotoneSearch:
    """Backtracking over order-preserving maps ``X -> X`` with full propagation.

    Every point keeps a bitmask of admissible images.  Assigning ``x -> v``
    cuts every point above ``x`` to the up-set of ``v`` and every point below
    to its down-set, so monotonicity on all comparable pairs is maintained and
    a branch dies as soon as some domain empties.  Branching is on the
    smallest remaining domain.
    """

    def __init__(self, X: FinitePoset, fixed_free: bool = True):
        self.points = list(X.points)
        idx = {p: i for i, p in enumerate(self.points)}
        n = self.n = len(self.points)
        self.upmask = [sum(1 << idx[q] for q in X.up(p)) | (1 << idx[p]) for p in self.points]
        self.downmask = [sum(1 << idx[q] for q in X.down(p)) | (1 << idx[p]) for p in self.points]
        self.above = [[idx[q] for q in sorted(X.up(p)) if q != p] for p in self.points]
        self.below = [[idx[q] for q in sorted(X.down(p)) if q != p] for p in self.points]
        full = (1 << n) - 1
        self.initial = [full & ~(1 << i) if fixed_free else full for i in range(n)]

    def assign(self, doms, x, v):
        """New domain list with ``x -> v``, or None on a wipe-out."""
        d = list(doms)
        d[x] = 1 << v
        up, down = self.upmask[v], self.downmask[v]
        for u in self.above[x]:
            d[u] &= up
            if not d[u]:
                return None
        for u in self.below[x]:
            d[u] &= down
            if not d[u]:
                return None
        return d

    def _pick(self, doms, done):
        best, bsize = -1, None
        for i in range(self.n):
            if done >> i & 1:
                continue
            s = bin(doms[i]).count("1")
            if bsize is None or s < bsize:
                best, bsize = i, s
        return best

    def solve(self, doms, counter, collect=None, done=0):
        """First complete map below ``doms`` (as an index list), or None.

        With ``collect`` a list, every map is appended and None is returned.
        """
        counter.tick()
        if done == (1 << self.n) - 1:
            f = [d.bit_length() - 1 for d in doms]
            if collect is None:
                return f
            collect.append(f)
            return None
        x = self._pick(doms, done)
        d = doms[x]
        while d:
            low = d & -d
            d ^= low
            nd = self.assign(doms, x, low.bit_length() - 1)
            if nd is None:
                continue
            r = self.solve(nd, counter, collect, done | 1 << x)
            if r is not None:
                return r
        return None

    def least(self, doms, counter):
        """Lexicographically least map (in point order) below ``doms``."""
        if self.solve(doms, counter) is None:
            return None
        for x in range(self.n):
            d = doms[x]
            while d:
                low = d & -d
                d ^= low
                nd = self.assign(doms, x, low.bit_length() - 1)
                if nd is not None and self.solve(nd, counter) is not None:
                    doms = nd
                    break
        return [d.bit_length() - 1 for d in doms]

    def to_dict(self, f):
        return {self.points[i]: self.points[v] for i, v in enumerate(f)}


def _fpp_branch(args):
    X, max_nodes, v = args
    S = _MonotoneSearch(X)
    counter = Counter(SearchBudget(max_nodes=max_nodes))
    x = S._pick(S.initial, 0)
    doms = S.assign(S.initial, x, v)
    try:
        found = doms is not None and S.solve(doms, counter, done=1 << x) is not None
    except BudgetExceeded:
        return None, counter.nodes
    return found, counter.nodes


def fpp_check(X: FinitePoset, budget: Optional[SearchBudget] = None, jobs: int = 1) -> Certificate:
    """Exhaustive search for a fixed-point-free order-preserving self-map.

    A refutation carries the lexicographically least such map with points
    taken in sorted order.  With ``jobs > 1`` the branches of the first
    decision run in separate processes; the outcome and witness do not depend
    on ``jobs``.
    """
    budget = budget or SearchBudget()
    if len(X) == 0:
        return Certificate("refuted", {"map": {}}, {"nodes": 0})
    S = _MonotoneSearch(X)
    counter = Counter(budget)
    try:
        if jobs <= 1:
            exists = S.solve(S.initial, counter) is not None
        else:
            x = S._pick(S.initial, 0)
            vals = [v for v in range(S.n) if S.initial[x] >> v & 1]
            with ProcessPoolExecutor(jobs) as ex:
                results = list(ex.map(_fpp_branch, [(X, budget.max_nodes, v) for v in vals]))
            counter.tick(sum(nd for _, nd in results))
            if any(r is True for r, _ in results):
                exists = True
            elif any(r is None for r, _ in results):
                raise BudgetExceeded(counter.nodes)
            else:
                exists = False
        if not exists:
            return Certificate("fpp", None, {"nodes": counter.nodes})
        f = S.to_dict(S.least(S.initial, counter))
    except BudgetExceeded as e:
        return Certificate("inconclusive", None, {"nodes": e.nodes})
    assert not MonotoneMap(X, X, f).fixed_points()
    return Certificate("refuted", {"map": f}, {"nodes": counter.nodes})


def monotone_self_maps(X: FinitePoset, budget: Optional[SearchBudget] = None) -> List[Dict[str, str]]:
    """Every order-preserving self-map of ``X``."""
    S = _MonotoneSearch(X, fixed_free=False)
    out: List[List[int]] = []
    S.solve(S.initial, Counter(budget), collect=out)
    return [S.to_dict(f) for f in sorted(out)]


# -- brute-force oracles ----------------------------------------------------

def _all_maps(n: int, chunk: int = 1 << 18):
    import numpy as np

    total = n ** n
    for start in range(0, total, chunk):
        codes = np.arange(start, min(total, start + chunk), dtype=np.int64)
        out = np.empty((len(codes), n), dtype=np.int8)
        for i in range(n):
            out[:, i] = codes % n
            codes //= n
        yield out


def naive_fpp_count(X: FinitePoset) -> int:
    """Number of fixed-point-free monotone self-maps, by enumerating all ``n^n`` maps."""
    import numpy as np

    pts = list(X.points)
    n = len(pts)
    if n == 0:
        return 1
    idx = {p: i for i, p in enumerate(pts)}
    leq = np.array([[X.leq(a, b) for b in pts] for a in pts], dtype=bool)
    covers = [(idx[a], idx[b]) for a, b in X.covers]
    count = 0
    for F in _all_maps(n):
        ok = np.ones(len(F), dtype=bool)
        for i in range(n):
            ok &= F[:, i] != i
        for a, b in covers:
            ok &= leq[F[:, a], F[:, b]]
        count += int(ok.sum())
    return count


def naive_fsp_count(K: SimplicialComplex) -> int:
    """Number of simplicial self-maps fixing no simplex, by brute force."""
    import numpy as np

    verts = list(K.vertices)
    n = len(verts)
    idx = {v: i for i, v in enumerate(verts)}
    table = np.zeros(1 << n, dtype=bool)
    smasks = []
    for s in K.simplices():
        m = sum(1 << idx[v] for v in s)
        table[m] = True
        smasks.append([idx[v] for v in s])
    fmasks = [[idx[v] for v in f] for f in K.facets]
    count = 0
    for F in _all_maps(n):
        bits = (1 << F.astype(np.int64))
        ok = np.ones(len(F), dtype=bool)
        for f in fmasks:
            img = np.zeros(len(F), dtype=np.int64)
            for i in f:
                img |= bits[:, i]
            ok &= table[img]
        for s in smasks:
            img = np.zeros(len(F), dtype=np.int64)
            for i in s:
                img |= bits[:, i]
            ok &= img != sum(1 << i for i in s)
        count += int(ok.sum())
    return count


# -- from fixed simplices to fixed points -----------------------------------

@dataclass
class LiftReport:
    maps_checked: int
    lifted: int
    failures: List[dict]
    fixed_points: Dict[str, int]

    @property
    def ok(self) -> bool:
        return not self.failures and self.lifted == self.maps_checked

    def to_json(self) -> dict:
        return {"maps_checked": self.maps_checked, "lifted": self.lifted,
                "failures": self.failures[:5], "ok": self.ok}


def lift_fixed_point(K: SimplicialComplex, X: FinitePoset, f: Dict[str, str]) -> Tuple[Optional[str], dict]:
    """Fixed point of ``f`` on ``X(K)`` obtained from a fixed simplex of a lower vertex map."""
    lab = X.labels
    g_assign = {v: lab[f[bary_name((v,))]][0] for v in K.vertices}
    try:
        g = SimplicialMap(K, K, g_assign)
    except ComplexError:
        return None, {"reason": "vertex map not simplicial"}
    for s in K.simplices():
        if not X.leq(bary_name(g.image(s)), f[bary_name(s)]):
            return None, {"reason": "X(g) not below f"}
    sigma = has_fixed_simplex(g)
    if sigma is None:
        return None, {"reason": "lower map has no fixed simplex", "g": g_assign}
    p = bary_name(sigma)
    for _ in range(len(X) + 1):
        q = f[p]
        if q == p:
            return p, {}
        if not X.lt(p, q):
            return None, {"reason": "iterates not increasing"}
        p = q
    return None, {"reason": "no fixed point reached"}


def fsp_to_fpp_lift(K: SimplicialComplex, maps: Optional[List[Dict[str, str]]] = None,
                    budget: Optional[SearchBudget] = None) -> LiftReport:
    """Run the fixed-simplex-to-fixed-point argument on self-maps of ``X(K)``."""
    X = face_poset(K)
    maps = maps if maps is not None else monotone_self_maps(X, budget)
    failures, fixed = [], {}
    lifted = 0
    for f in maps:
        MonotoneMap(X, X, f)
        p, info = lift_fixed_point(K, X, f)
        if p is None:
            failures.append({"map": f, **info})
        else:
            lifted += 1
            fixed[p] = fixed.get(p, 0) + 1
    return LiftReport(len(maps), lifted, failures, fixed)
