"""Headline constructions: the Kun space, the fixed-simplex complex L and the space X.

Everything here is built from the lower-level modules and checked before it
is returned.  Depth plans are computed in exact arithmetic; anything whose
forecast size exceeds the build ceiling is reported, never materialized.
"""
from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from .budget import SearchBudget
from .chains import Chain
from .fixtest import fpp_check, fsp_check, is_asymmetric
from .fposet import (FinitePoset, MonotoneMap, chain_map_of, core, face_poset, is_weak_point,
                     nh_cylinder, order_complex, union)
from .library import circle_model, crown
from .scomplex import (ComplexError, SimplicialComplex, SimplicialMap, barycentric, carrier_in,
                       induced_barycentric_map, mapping_cylinder, pseudomanifold_check)
from .zhomology import (HomologyCoordinates, IntChainComplex, _homologous, cylinder_retraction,
                        enumerate_cycles, homology, integral_generators, push, rational_basis,
                        solve_weighting, winding_eval, WeightingError)

DEFAULT_CEILING = 200_000


class AssemblyError(ValueError):
    pass


class BuildRefused(AssemblyError):
    def __init__(self, plan: "DepthPlan"):
        super().__init__(f"forecast of {plan.forecast['facets']} facets exceeds the ceiling {plan.ceiling}")
        self.plan = plan


# -- realizations -----------------------------------------------------------

@dataclass
class RealizationDatum:
    """A closed oriented ``k``-pseudomanifold mapped into ``K`` to realize a class."""
    k: int
    M: SimplicialComplex
    phi: SimplicialMap
    claimed_class: Optional[Chain] = None

    def __post_init__(self):
        if self.phi.source != self.M:
            raise AssemblyError("realization map must start at M")
        rep = pseudomanifold_check(self.M)
        if rep.dim != self.k or not (rep.closed and rep.orientable):
            raise AssemblyError(f"M is not a closed oriented {self.k}-pseudomanifold")
        self.fundamental = rep.orientation.fundamental_chain()
        pushed = push(self.phi, self.fundamental)
        if self.claimed_class is None:
            self.claimed_class = pushed
        else:
            C = IntChainComplex(self.phi.target)
            if not C.is_cycle(self.claimed_class) or not _homologous(C, pushed, self.claimed_class):
                raise AssemblyError("phi_# of the fundamental cycle is not homologous to the claimed class")

    @property
    def facets(self) -> int:
        return len(self.M.facets)


def check_basis(K: SimplicialComplex, realizations: Sequence[RealizationDatum]) -> Dict[int, int]:
    """Check that the claimed classes form a rational basis in each degree."""
    C = IntChainComplex(K)
    out = {}
    for k in range(1, K.dim + 1):
        data = [r for r in realizations if r.k == k]
        basis = rational_basis(C, k)
        if len(data) != len(basis):
            raise AssemblyError(f"degree {k}: {len(data)} realizations for rational rank {len(basis)}")
        if basis:
            coords = HomologyCoordinates(C, k, basis)
            rows = [coords.coordinates(r.claimed_class) for r in data]
            if _rank([[Fraction(x) for x in row] for row in rows]) != len(basis):
                raise AssemblyError(f"degree {k}: realized classes are not a rational basis")
        out[k] = len(data)
    for r in realizations:
        if r.k > K.dim or r.k < 1:
            raise AssemblyError(f"realization of dimension {r.k} does not fit K")
    return out


def _rank(rows: List[List[Fraction]]) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c] / rows[rank][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


# -- depth plans ------------------------------------------------------------

@lru_cache(maxsize=None)
def _stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * _stirling2(n - 1, k) + _stirling2(n - 1, k - 1)


def subdivided_f_vector(f: Sequence[int], s: int) -> List[int]:
    """Exact f-vector of the ``s``-th barycentric subdivision."""
    f = list(f)
    for _ in range(s):
        f = [sum(f[j] * math.factorial(i + 1) * _stirling2(j + 1, i + 1) for j in range(i, len(f)))
             for i in range(len(f))]
    return f


def subdivided_facets(K: SimplicialComplex, s: int) -> int:
    return sum(math.factorial(len(f)) ** s for f in K.facets)


def bound_depth(N: int, n: int, floor: int = 0) -> int:
    """Least ``s >= floor`` with ``N (n/(n+1))^s < 1/(n+1)``."""
    if N <= 0 or n <= 0:
        return floor
    r = Fraction(n, n + 1)
    s = floor
    val = N * r ** s
    while not val < Fraction(1, n + 1):
        s += 1
        val *= r
    return s


def star_predicate(P: SimplicialComplex, s: int, N: int, ceiling: int = 200_000) -> Optional[bool]:
    """Whether every connected union of at most ``N`` facets of ``P^s`` lies in one open star of ``P``.

    A closed simplex lies in the open star of ``v`` exactly when the carrier
    of each of its vertices contains ``v``; facets suffice because every
    simplex sits in one.  Returns None when more than ``ceiling`` sets would
    have to be examined.
    """
    Ps = P
    for _ in range(s):
        Ps = barycentric(Ps)
    carrier = {v: frozenset(carrier_in(Ps, v, P)) for v in Ps.vertices}
    facets = list(Ps.facets)
    fcar = []
    for f in facets:
        acc = None
        for v in f:
            acc = carrier[v] if acc is None else acc & carrier[v]
        fcar.append(acc)
    by_vertex: Dict[str, List[int]] = {}
    for i, f in enumerate(facets):
        for v in f:
            by_vertex.setdefault(v, []).append(i)
    nbrs = [{j for v in f for j in by_vertex[v] if j != i} for i, f in enumerate(facets)]
    seen = 0

    def extend(sub: set, near: set, ext: set, root: int, inter: frozenset) -> Optional[bool]:
        # each connected set is produced once (extension-set enumeration)
        nonlocal seen
        seen += 1
        if seen > ceiling:
            return None
        if not inter:
            return False
        if len(sub) == N:
            return True
        ext = set(ext)
        while ext:
            w = min(ext)
            ext.discard(w)
            new_ext = ext | {u for u in nbrs[w] if u > root and u not in near}
            r = extend(sub | {w}, near | nbrs[w] | {w}, new_ext, root, inter & fcar[w])
            if r is not True:
                return r
        return True

    for i in range(len(facets)):
        r = extend({i}, nbrs[i] | {i}, {j for j in nbrs[i] if j > i}, i, fcar[i])
        if r is not True:
            return r
    return True


@dataclass
class DepthPlan:
    n: int
    mode: str
    s: Dict[int, int]
    N_k: Dict[int, int]
    N: int
    multiplier: int
    entries: List[dict]
    forecast: Dict[str, object]
    ceiling: int
    theorem: str = "thm4"

    @property
    def s_n(self) -> int:
        return self.s.get(self.n, 0)

    def s_prev(self, k: int) -> int:
        return self.s.get(k - 1, 0)

    @property
    def feasible(self) -> bool:
        return self.forecast["facets"] <= self.ceiling

    @property
    def verified(self) -> bool:
        return all(e.get("holds") is True for e in self.entries)

    def to_json(self) -> dict:
        return {"n": self.n, "mode": self.mode, "theorem": self.theorem,
                "s": {str(k): v for k, v in sorted(self.s.items())},
                "N_k": {str(k): v for k, v in sorted(self.N_k.items())}, "N": self.N,
                "multiplier": self.multiplier, "entries": self.entries, "forecast": self.forecast,
                "ceiling": self.ceiling, "feasible": self.feasible, "verified": self.verified}


def plan_depths(K: SimplicialComplex, realizations: Sequence[RealizationDatum], mode: str = "bound",
                depths: Optional[Mapping[int, int]] = None, theorem: str = "thm4",
                multiplier: Optional[int] = None, ceiling: int = DEFAULT_CEILING,
                predicate_ceiling: int = 200_000) -> DepthPlan:
    """Subdivision depths ``s_k``, cylinder lengths and exact size forecasts.

    ``mode="bound"`` picks each ``s`` as the least value passing the
    inequality ``N (n_P/(n_P+1))^s < 1/(n_P+1)`` for every target ``P``.
    ``mode="explicit"`` takes ``depths`` (a mapping ``k -> s_k``) and checks
    the star predicate exhaustively when that is cheap enough.
    """
    if mode not in ("bound", "explicit"):
        raise AssemblyError(f"unknown plan mode {mode!r}")
    if theorem not in ("thm4", "main"):
        raise AssemblyError(f"unknown theorem {theorem!r}")
    n = K.dim
    if theorem == "thm4" and any(r.k == 1 for r in realizations):
        raise AssemblyError("1-dimensional realizations belong to the main construction")
    dims = {}
    for r in realizations:
        dims.setdefault(r.k, []).append(r)
    s: Dict[int, int] = {0: 0, 1: 0}
    N_k: Dict[int, int] = {}
    if theorem == "main":
        N_k[1] = 1 if dims.get(1) else 0
    entries: List[dict] = []
    if mode == "explicit":
        if depths is None:
            raise AssemblyError("explicit mode needs depths")
        depths = {int(k): int(v) for k, v in depths.items()}
        if depths.get(1, 0) != 0:
            raise AssemblyError("s_1 must be 0")
        prev = 0
        for k in range(2, n + 1):
            v = depths.get(k, prev)
            if v < prev:
                raise AssemblyError("depths must be non-decreasing")
            prev = s[k] = v

    def check(P, Pname, s_val, Nval, stage):
        entry = {"stage": stage, "target": Pname, "dim": P.dim, "N": Nval, "s": s_val,
                 "bound": f"{Nval}*({P.dim}/{P.dim + 1})^{s_val} < 1/{P.dim + 1}"}
        bound_ok = Nval * Fraction(P.dim, P.dim + 1) ** s_val < Fraction(1, P.dim + 1)
        entry["bound_holds"] = bound_ok
        if mode == "bound" or bound_ok:
            entry["holds"] = bound_ok
            entry["method"] = "bound"
        else:
            res = star_predicate(P, s_val, Nval, predicate_ceiling)
            entry["holds"] = "inconclusive" if res is None else res
            entry["method"] = "enumeration"
        entries.append(entry)

    for k in range(2, n + 1):
        N_k[k] = max((r.facets * math.factorial(k + 1) ** s[k - 1] for r in dims.get(k, [])), default=0)
        if k < n:
            targets = [(r.M, f"M{r.k}.{i + 1}") for kk in range(k + 1, n + 1)
                       for i, r in enumerate(dims.get(kk, []))]
            if mode == "bound":
                s[k] = max([s[k - 1]] + [bound_depth(N_k[k], P.dim, s[k - 1]) for P, _ in targets])
            for P, name in targets:
                if N_k[k]:
                    check(P, name, s[k], N_k[k], k)
    N = max([v for v in N_k.values()], default=0)
    if n >= 2:
        if mode == "bound":
            s[n] = max(s[n - 1], bound_depth(N, n, s[n - 1]))
        if N:
            check(K, "K", s[n], N, n)
    mult = multiplier if multiplier is not None else (
        math.factorial(n + 1) * N if theorem == "main" else N)
    s = {k: v for k, v in s.items() if 1 <= k <= max(n, 1)}
    plan = DepthPlan(n, mode, s, {k: v for k, v in N_k.items()}, N, mult, entries, {}, ceiling, theorem)
    plan.forecast = forecast(K, realizations, plan)
    return plan


def forecast(K: SimplicialComplex, realizations: Sequence[RealizationDatum], plan: DepthPlan) -> Dict[str, object]:
    """Exact facet and vertex counts (facets of cylinders are upper bounds)."""
    sn = plan.s_n
    kf = subdivided_facets(K, sn)
    kv = subdivided_f_vector(K.f_vector(), sn)[0]
    parts = []
    total_f, total_v = kf, kv
    for idx, r in enumerate(realizations):
        k = r.k
        Fm = lambda m: r.facets * math.factorial(k + 1) ** m
        Vm = lambda m: subdivided_f_vector(r.M.f_vector(), m)[0]
        sk1 = plan.s_prev(k)
        a = (k + 1) * Fm(sn)
        b = plan.multiplier * (k + 1) * Fm(sn)
        c = sum((k + 1) * Fm(m) for m in range(sk1 + 1, sn + 1))
        v = (plan.multiplier + 1) * Vm(sn) + sum(Vm(m) for m in range(sk1, sn))
        parts.append({"k": k, "l": idx + 1, "a": a, "b": b, "c": c, "vertices": v,
                      "free_extreme_facets": Fm(sk1)})
        total_f += a + b + c
        total_v += v
    return {"K_facets": kf, "K_vertices": kv, "cylinders": parts, "facets": total_f, "vertices": total_v}


# -- cylinder chains --------------------------------------------------------

@dataclass
class Fragment:
    kind: str
    complex: SimplicialComplex
    subobjects: Dict[str, Dict[str, str]]
    originals: Dict[str, SimplicialComplex]
    log: List[dict] = field(default_factory=list)
    retractions: list = field(default_factory=list)


def _namer(k: int, l: int, tag: str):
    return lambda v: f"C{k}.{l}|{tag}|{v}"


def _rename_dict(K: SimplicialComplex, f) -> Dict[str, str]:
    return {v: f(v) for v in K.vertices}


def subdivision_levels(M: SimplicialComplex, top: int) -> List[SimplicialComplex]:
    levels = [M]
    for _ in range(top):
        levels.append(barycentric(levels[-1]))
    return levels


def build_cylinder_chain(kind: str, datum: RealizationDatum, plan: DepthPlan, l: int = 1,
                         levels: Optional[List[SimplicialComplex]] = None) -> Fragment:
    """One of the three parts of the cylinder attached for ``datum``.

    ``a``: cylinder of ``phi^{s_n}`` into ``K^{s_n}`` (target names unchanged).
    ``b``: ``multiplier`` identity cylinders stacked base to base.
    ``c``: the Lemma-3 cylinders of ``M^m -> M^{m-1}`` for ``s_{k-1} < m <= s_n``,
    with their chain retractions.
    """
    k, sn, sk1, mult = datum.k, plan.s_n, plan.s_prev(datum.k), plan.multiplier
    levels = levels or subdivision_levels(datum.M, sn)
    Ms = levels[sn]
    pre = f"C{k}.{l}"
    if kind == "a":
        phi = induced_barycentric_map(datum.phi, sn) if sn else datum.phi
        phi = SimplicialMap(Ms, phi.target, phi.assign)
        names = _rename_dict(Ms, _namer(k, l, "b0"))
        cyl = mapping_cylinder(phi, order=sorted(Ms.vertices), source_names=names,
                               target_names={v: v for v in phi.target.vertices})
        return Fragment("a", cyl.complex, {f"{pre}/b0": names}, {f"{pre}/b0": Ms},
                        [{"part": "a", "facets": len(cyl.complex.facets), "order": "lexicographic"}])
    if kind == "b":
        facets, subs, origs = [], {}, {}
        for i in range(mult):
            src = _rename_dict(Ms, _namer(k, l, f"b{i}"))
            tgt = _rename_dict(Ms, _namer(k, l, f"b{i + 1}"))
            cyl = mapping_cylinder(SimplicialMap.identity(Ms), source_names=src, target_names=tgt)
            facets.extend(cyl.complex.facets)
            subs[f"{pre}/b{i}"], subs[f"{pre}/b{i + 1}"] = src, tgt
            origs[f"{pre}/b{i}"] = origs[f"{pre}/b{i + 1}"] = Ms
        if not mult:
            names = _rename_dict(Ms, _namer(k, l, "b0"))
            return Fragment("b", Ms.rename(names), {f"{pre}/b0": names}, {f"{pre}/b0": Ms},
                            [{"part": "b", "cylinders": 0}])
        return Fragment("b", SimplicialComplex(facets), subs, origs,
                        [{"part": "b", "cylinders": mult, "copies": mult + 1}])
    if kind == "c":
        def level_names(m):
            tag = f"b{mult}" if m == sn else f"c{m}"
            return tag, _rename_dict(levels[m], _namer(k, l, tag))

        facets, subs, origs, rets = list(levels[sn].rename(level_names(sn)[1]).facets), {}, {}, []
        tag, names = level_names(sn)
        subs[f"{pre}/{tag}"], origs[f"{pre}/{tag}"] = names, levels[sn]
        for m in range(sn, sk1, -1):
            stag, snames = level_names(m)
            ttag, tnames = level_names(m - 1)
            cr = cylinder_retraction(levels[m - 1], subdivision=levels[m], source_names=snames,
                                     target_names=tnames)
            facets.extend(cr.cylinder.complex.facets)
            subs[f"{pre}/{ttag}"], origs[f"{pre}/{ttag}"] = tnames, levels[m - 1]
            rets.append((m, cr))
        log = [{"part": "c", "stages": sn - sk1, "order": "decreasing simplex dimension, then name"}]
        return Fragment("c", SimplicialComplex(facets), subs, origs, log, rets)
    raise AssemblyError(f"unknown cylinder part {kind!r}")


# -- assembled spaces -------------------------------------------------------

@dataclass
class AssembledSpace:
    space: object
    subobjects: Dict[str, Dict[str, str]]
    originals: Dict[str, object]
    plan: Optional[DepthPlan]
    log: Dict[str, object]
    checks: Dict[str, object]

    def extract(self, name: str):
        names = self.subobjects[name]
        if isinstance(self.space, FinitePoset):
            return self.space.subposet(names.values())
        return self.space.induced_subcomplex(names.values())

    def to_json(self) -> dict:
        return {"kind": "poset" if isinstance(self.space, FinitePoset) else "complex",
                "size": len(self.space) if isinstance(self.space, FinitePoset) else len(self.space.facets),
                "subobjects": sorted(self.subobjects), "plan": self.plan.to_json() if self.plan else None,
                "log": self.log, "checks": self.checks}


def _same_homology(a, b) -> bool:
    ha, hb = homology(a), homology(b)
    top = max(len(ha), len(hb))
    sig = lambda h, i: (h[i].rank, tuple(h[i].torsion)) if i < len(h) else (0, ())
    return all(sig(ha, i) == sig(hb, i) for i in range(top))


def _glue_check(frags: Sequence[Fragment], name: str, log: list):
    """Each fragment sharing ``name`` must see the same interface complex."""
    seen = None
    for fr in frags:
        if name not in fr.subobjects:
            continue
        got = fr.complex.induced_subcomplex(fr.subobjects[name].values())
        if seen is None:
            seen = got
        elif got != seen:
            raise AssemblyError(f"base mismatch at {name}")
    log.append({"glue": name, "vertices": len(seen.vertices) if seen else 0})


def build_L(K: SimplicialComplex, realizations: Sequence[RealizationDatum], plan: DepthPlan):
    """Union of ``K^{s_n}`` and every cylinder ``C_{k,l}``; no checks beyond gluing."""
    sn = plan.s_n
    Ks = subdivision_levels(K, sn)[sn]
    facets = list(Ks.facets)
    subobjects = {"K^s": {v: v for v in Ks.vertices}}
    originals = {"K^s": Ks}
    frags_by = {}
    glue_log: List[dict] = []
    counters: Dict[int, int] = {}
    for r in realizations:
        counters[r.k] = counters.get(r.k, 0) + 1
        l = counters[r.k]
        levels = subdivision_levels(r.M, sn)
        frags = [build_cylinder_chain(kind, r, plan, l, levels) for kind in "abc"]
        for fr in frags:
            clash = set() if fr.kind == "a" else set(fr.complex.vertices) & set(Ks.vertices)
            if clash:
                raise AssemblyError(f"cylinder names collide with K^s: {sorted(clash)[:3]}")
            facets.extend(fr.complex.facets)
            subobjects.update(fr.subobjects)
            originals.update(fr.originals)
        pre = f"C{r.k}.{l}"
        _glue_check(frags, f"{pre}/b0", glue_log)
        _glue_check(frags, f"{pre}/b{plan.multiplier}", glue_log)
        free_tag = f"c{plan.s_prev(r.k)}" if plan.s_prev(r.k) < sn else f"b{plan.multiplier}"
        frags_by[(r.k, l)] = (r, frags, levels, f"{pre}/{free_tag}")
        subobjects[f"{pre}/free"] = subobjects[f"{pre}/{free_tag}"]
        originals[f"{pre}/free"] = levels[plan.s_prev(r.k)]
    L = SimplicialComplex(facets)
    return L, Ks, subobjects, originals, frags_by, glue_log


def _verify_L(K, L, Ks, plan, subobjects, originals, frags_by) -> Dict[str, object]:
    checks: Dict[str, object] = {}
    checks["homology"] = _same_homology(L, K)
    if not checks["homology"]:
        raise AssemblyError("H_*(L) differs from H_*(K)")
    CL = IntChainComplex(L)
    basis_ok, coord_ok, full_ok, norm_ok = True, True, True, True
    details = []
    for k in sorted({key[0] for key in frags_by}):
        keys = sorted(key for key in frags_by if key[0] == k)
        free_cycles = []
        for key in keys:
            r, frags, levels, free_name = frags_by[key]
            names = subobjects[free_name]
            Mfree = levels[plan.s_prev(k)]
            full_ok &= L.is_full_subcomplex(Mfree.rename(names))
            fund = pseudomanifold_check(Mfree).orientation.fundamental_chain()
            free_cycles.append(_rename_chain(fund, names))
        rb = rational_basis(CL, k)
        if len(rb) != len(free_cycles):
            basis_ok = False
            continue
        coords = HomologyCoordinates(CL, k, free_cycles)
        basis_ok &= all(coords.coordinates(g) is not None for g in rb)
        for idx, key in enumerate(keys):
            r, frags, levels, free_name = frags_by[key]
            sn = plan.s_n
            top = levels[sn]
            fund_top = pseudomanifold_check(top).orientation.fundamental_chain()
            phi = induced_barycentric_map(r.phi, sn) if sn else r.phi
            phi = SimplicialMap(top, Ks, phi.assign)
            img = push(phi, fund_top)
            got = coords.coordinates(img)
            want = [Fraction(int(i == idx)) for i in range(len(keys))]
            # sign of the free cycle is fixed by orientation choice; accept +-e_l
            ok = got is not None and (got == want or [-x for x in got] == want)
            coord_ok &= ok
            if k >= 2:
                rep = _composed_retraction_check(r, frags, levels, plan, subobjects, key)
                norm_ok &= rep["ok"]
                details.append(rep)
    checks.update({"basis": basis_ok, "coordinates": coord_ok, "free_extremes_full": full_ok,
                   "retraction_norms": norm_ok, "retraction_details": details})
    if not (basis_ok and coord_ok and full_ok and norm_ok):
        raise AssemblyError(f"verification failed: {checks}")
    return checks


def _rename_chain(c: Chain, names: Mapping[str, str]) -> Chain:
    return Chain.from_terms(c.dim, [(v, [names[x] for x in s]) for s, v in c.coeffs.items()])


def _composed_retraction_check(r, frags, levels, plan, subobjects, key) -> dict:
    """Push the free-extreme fundamental cycle through every ``R_m`` of ``C^c``."""
    k, l = key
    frag_c = next(fr for fr in frags if fr.kind == "c")
    sk1, sn = plan.s_prev(k), plan.s_n
    pre = f"C{k}.{l}"
    free_tag = f"c{sk1}" if sk1 < sn else f"b{plan.multiplier}"
    names = subobjects[f"{pre}/{free_tag}"]
    c = _rename_chain(pseudomanifold_check(levels[sk1]).orientation.fundamental_chain(), names)
    start = c.norm()
    fk = math.factorial(k + 1)
    stages = []
    for m, cr in sorted(frag_c.retractions, key=lambda t: t[0]):
        before = c.norm()
        c = cr.apply(c)
        stages.append({"m": m, "before": before, "after": c.norm(), "ok": c.norm() <= fk * before})
    top_names = subobjects[f"{pre}/b{plan.multiplier}"]
    top = _rename_chain(pseudomanifold_check(levels[sn]).orientation.fundamental_chain(), top_names)
    bound = fk ** (sn - sk1) * start
    ok = all(s["ok"] for s in stages) and c.norm() <= bound
    return {"k": k, "l": l, "start_norm": start, "end_norm": c.norm(), "bound": bound,
            "saturated": c.norm() == bound, "is_fundamental": c == top or c == -top,
            "stages": stages, "ok": ok and (c == top or c == -top)}


def assemble_thm4(K: SimplicialComplex, realizations: Sequence[RealizationDatum],
                  plan: Optional[DepthPlan] = None, depths: Optional[Mapping[int, int]] = None,
                  multiplier: Optional[int] = None, ceiling: int = DEFAULT_CEILING,
                  fsp_budget: Optional[SearchBudget] = None) -> AssembledSpace:
    """Build and check the complex ``L`` with the fixed simplex property.

    Without a feasible plan the build is refused with the forecast attached.
    Depths below the certified ones give a toy build: every invariant is still
    checked, but the fixed simplex property is not implied.
    """
    t0 = time.monotonic()
    H1 = homology(K)
    if len(H1) > 1 and (H1[1].rank or H1[1].torsion):
        raise AssemblyError("this construction needs H_1(K) = 0")
    check_basis(K, realizations)
    for r in realizations:
        ok, _ = is_asymmetric(r.M)
        if not ok:
            raise AssemblyError(f"realizing pseudomanifold of dimension {r.k} is not asymmetric")
    if plan is None:
        plan = plan_depths(K, realizations, "explicit" if depths is not None else "bound", depths,
                           multiplier=multiplier, ceiling=ceiling)
    if not plan.feasible:
        raise BuildRefused(plan)
    L, Ks, subobjects, originals, frags_by, glue_log = build_L(K, realizations, plan)
    checks = _verify_L(K, L, Ks, plan, subobjects, originals, frags_by)
    checks["certified_depths"] = plan.mode == "bound" or plan.verified
    if fsp_budget is not None:
        checks["fsp"] = fsp_check(L, fsp_budget).kind
    log = {"facets": len(L.facets), "vertices": len(L.vertices), "f_vector": L.f_vector(),
           "glue": glue_log, "seconds": round(time.monotonic() - t0, 3),
           "mode": "certified" if checks["certified_depths"] else "toy"}
    return AssembledSpace(L, subobjects, originals, plan, log, checks)


# -- the Kun space ----------------------------------------------------------

def monotone_maps(X: FinitePoset, Y: FinitePoset) -> Iterator[Dict[str, str]]:
    """Every order-preserving map ``X -> Y`` in lexicographic order."""
    order = X.linear_extension()
    pos = {p: i for i, p in enumerate(order)}
    lower = {p: X.lower_covers[p] for p in order}
    f: Dict[str, str] = {}

    def rec(i):
        if i == len(order):
            yield {p: f[p] for p in X.points}
            return
        p = order[i]
        cands = set(Y.points)
        for a in lower[p]:
            cands &= set(Y.up(f[a])) | {f[a]}
        for q in sorted(cands):
            f[p] = q
            yield from rec(i + 1)
        f.pop(p, None)

    yield from rec(0)


def crown_cycle(x, y, z, w) -> Chain:
    """``zx + xw + wy + yz`` in the order complex."""
    return Chain.from_terms(1, [(1, [z, x]), (1, [x, w]), (1, [w, y]), (1, [y, z])])


def map_degree(X: FinitePoset, Y: FinitePoset, f: Mapping[str, str], y_generator: Chain,
               x_generator: Optional[Chain] = None, KX: Optional[SimplicialComplex] = None,
               coords: Optional[HomologyCoordinates] = None) -> Optional[int]:
    """Coordinate of ``K(f)_*`` of a generator of ``H_1(K(X))`` along ``y_generator``."""
    KX = KX or order_complex(X)
    if x_generator is None:
        frees, _ = integral_generators(IntChainComplex(KX), 1)
        if len(frees) != 1:
            return None
        x_generator = frees[0]
    KY = coords.C.complex if coords is not None else order_complex(Y)
    phi = chain_map_of(MonotoneMap(X, Y, f), source=KX, target=KY)
    coords = coords or HomologyCoordinates(IntChainComplex(KY), 1, [y_generator])
    c = coords.coordinates(push(phi, x_generator))
    if c is None or c[0].denominator != 1:
        return None
    return int(c[0])


KUN_NAMES = ("x", "y", "z", "w", "x'", "y'", "z'", "w'")


def _kun_roles(X: FinitePoset, gen_coords) -> List[Tuple[str, str, str, str]]:
    out = []
    pts = X.points
    for z, w in itertools.combinations(pts, 2):
        if X.leq(z, w) or X.leq(w, z):
            continue
        ups = sorted((set(X.up(z)) & set(X.up(w))) - {z, w})
        for x, y in itertools.combinations(ups, 2):
            if X.leq(x, y) or X.leq(y, x):
                continue
            co = gen_coords.coordinates(crown_cycle(x, y, z, w))
            if co is None or abs(co[0]) != 2:
                continue
            if not (is_weak_point(X, x) and is_weak_point(X, y)):
                continue
            if len(core(X.remove([x, y]))) != 4:
                continue
            out.append((x, y, z, w))
    return out


def _name_kun(X: FinitePoset, roles: Tuple[str, str, str, str]) -> Dict[str, str]:
    x, y, z, w = roles
    R = core(X.remove([x, y]))
    mins = [p for p in R.points if not R.lower_covers[p]]
    maxs = sorted(p for p in R.points if R.lower_covers[p])
    above = set(X.up(z)) & set(X.up(w))
    zp = next(p for p in sorted(mins) if p in above)
    wp = next(p for p in sorted(mins) if p != zp)
    names = {x: "x", y: "y", z: "z", w: "w", maxs[0]: "x'", maxs[1]: "y'", zp: "z'", wp: "w'"}
    crown_pts = {x, y, z, w}
    down = set(crown_pts)
    for q in crown_pts:
        down |= set(X.down(q))
    rest = sorted(down - crown_pts)
    for i, p in enumerate(rest):
        names[p] = f"p{i + 1}"
    left = [p for p in X.points if p not in names]
    if left:
        raise AssemblyError(f"unnamed points in the Kun candidate: {left}")
    return names


@dataclass
class KunResult:
    space: FinitePoset
    names: Dict[str, str]
    report: Dict[str, object]


def build_kun(budget: Optional[SearchBudget] = None) -> KunResult:
    """Glue cylinders of a degree-1 and a degree-2 map out of the 8-point circle; take the core.

    Candidate pairs of maps are tried in a fixed order and the first core that
    passes ``verify_kun`` is returned with canonical point names.
    """
    t0 = time.monotonic()
    S = circle_model(4)
    D = crown(("d1", "d2", "d3", "d4"))
    E = crown(("e1", "e2", "e3", "e4"))
    gD, gE = crown_cycle("d1", "d2", "d3", "d4"), crown_cycle("e1", "e2", "e3", "e4")
    KS = order_complex(S)
    gS = integral_generators(IntChainComplex(KS), 1)[0][0]
    cD = HomologyCoordinates(IntChainComplex(order_complex(D)), 1, [gD])
    cE = HomologyCoordinates(IntChainComplex(order_complex(E)), 1, [gE])
    deg2 = [f for f in monotone_maps(S, D) if abs(map_degree(S, D, f, gD, gS, KS, cD) or 0) == 2]
    deg1 = [f for f in monotone_maps(S, E) if abs(map_degree(S, E, f, gE, gS, KS, cE) or 0) == 1]
    tried = 0
    for f2 in deg2:
        B2, _, _ = nh_cylinder(MonotoneMap(S, D, f2), x_tag=None, y_tag=None)
        for f1 in deg1:
            tried += 1
            B1, _, _ = nh_cylinder(MonotoneMap(S, E, f1), x_tag=None, y_tag=None)
            X = core(union(B1, B2))
            if len(X) != 14:
                continue
            KX = order_complex(X)
            C = IntChainComplex(KX)
            frees, tors = integral_generators(C, 1)
            if len(frees) != 1 or tors:
                continue
            roles = _kun_roles(X, HomologyCoordinates(C, 1, frees))
            if len(roles) != 1:
                continue
            names = _name_kun(X, roles[0])
            Kun = X.rename(names)
            rep = verify_kun(Kun, budget=budget)
            if rep["ok"]:
                weights, _ = solve_weighting(Kun)
                report = {"candidates_tried": tried, "degree_1_maps": len(deg1), "degree_2_maps": len(deg2),
                          "f1": f1, "f2": f2, "names": {v: k for k, v in names.items()},
                          "weights": {f"{a}<{b}": w for (a, b), w in sorted(weights.items())},
                          "verify": rep, "seconds": round(time.monotonic() - t0, 3)}
                return KunResult(Kun, {v: v for v in Kun.points}, report)
    raise AssemblyError(f"no candidate among {tried} passed the Kun checks")


def _is_cycle_of(C: IntChainComplex, c: Chain) -> bool:
    idx = C.index[c.dim] if c.dim <= C.dim else {}
    return all(s in idx for s in c.coeffs) and C.is_cycle(c)


def verify_kun(X: FinitePoset, names: Optional[Mapping[str, str]] = None,
               budget: Optional[SearchBudget] = None) -> Dict[str, object]:
    """The six checks (a)-(f) on a candidate Kun space with named crowns."""
    t0 = time.monotonic()
    nm = {k: k for k in KUN_NAMES}
    nm.update(names or {})
    x, y, z, w, xp, yp, zp, wp = (nm[k] for k in KUN_NAMES)
    checks: Dict[str, dict] = {}
    missing = [p for p in (x, y, z, w, xp, yp, zp, wp) if p not in X]
    if missing:
        raise AssemblyError(f"named points missing from the poset: {missing}")
    checks["a_size"] = {"ok": len(X) == 14, "points": len(X)}
    H = homology(X)
    sig = [(h.rank, list(h.torsion)) for h in H]
    circle = len(H) >= 2 and sig[0] == (1, []) and sig[1] == (1, []) and all(s == (0, []) for s in sig[2:])
    checks["b_homology"] = {"ok": circle, "groups": [str(h) for h in H]}
    R = core(X.remove([x, y]))
    retract_ok = set(R.points) == {xp, yp, zp, wp} and all(
        X.lt(a, b) for a in (zp, wp) for b in (xp, yp))
    weak = is_weak_point(X, x) and is_weak_point(X, y)
    checks["c_weak_points"] = {"ok": weak and retract_ok, "weak": weak, "retract": sorted(R.points)}
    cert = fpp_check(X, budget)
    checks["d_fpp"] = {"ok": cert.kind == "fpp", "result": cert.kind, "nodes": cert.stats.get("nodes")}
    KX = order_complex(X)
    C = IntChainComplex(KX)
    gprime = crown_cycle(xp, yp, zp, wp)
    c = crown_cycle(x, y, z, w)
    frees, _ = integral_generators(C, 1)
    gen_ok = False
    doubles: List[Chain] = []
    if len(frees) == 1 and _is_cycle_of(C, gprime):
        co = HomologyCoordinates(C, 1, frees).coordinates(gprime)
        gen_ok = co is not None and abs(co[0]) == 1
        hc = HomologyCoordinates(C, 1, [gprime])
        for cyc in enumerate_cycles(KX, 1, 4):
            v = hc.coordinates(cyc)
            if v is not None and abs(v[0]) == 2:
                doubles.append(cyc)
    unique = len(doubles) == 1 and doubles[0] in (c, -c)
    checks["e_unique_double"] = {"ok": gen_ok and unique, "primed_crown_generates": gen_ok,
                                 "double_cycles": [d.to_json() for d in doubles]}
    try:
        weights, _ = solve_weighting(X)
        wc, wg = winding_eval(X, c, weights), winding_eval(X, gprime, weights)
        f_ok = abs(wg) == 1 and abs(wc) == 2
        checks["f_crown_double"] = {"ok": f_ok, "winding_crown": wc, "winding_primed": wg}
    except (WeightingError, ComplexError) as e:  # reported as a failed check
        checks["f_crown_double"] = {"ok": False, "error": str(e)}
    ok = all(v["ok"] for v in checks.values())
    return {"ok": ok, "checks": checks, "seconds": round(time.monotonic() - t0, 3)}


# -- the main theorem -------------------------------------------------------

def assemble_main(K: SimplicialComplex, realizations: Sequence[RealizationDatum],
                  plan: Optional[DepthPlan] = None, depths: Optional[Mapping[int, int]] = None,
                  kun: Optional[KunResult] = None, ceiling: int = DEFAULT_CEILING,
                  fpp_budget: Optional[SearchBudget] = None) -> AssembledSpace:
    """``X = X(L)`` with one cylinder ``B_h`` into a fresh Kun copy per 1-dimensional class."""
    t0 = time.monotonic()
    check_basis(K, realizations)
    for r in realizations:
        if r.k >= 2 and not is_asymmetric(r.M)[0]:
            raise AssemblyError(f"realizing pseudomanifold of dimension {r.k} is not asymmetric")
    if plan is None:
        plan = plan_depths(K, realizations, "explicit" if depths is not None else "bound", depths,
                           theorem="main", ceiling=ceiling)
    if not plan.feasible:
        raise BuildRefused(plan)
    kun = kun or build_kun()
    L, Ks, subobjects, originals, frags_by, glue_log = build_L(K, realizations, plan)
    checks = _verify_L(K, L, Ks, plan, subobjects, originals, frags_by)
    XL = face_poset(L)
    pieces = [XL]
    gprime = crown_cycle("x'", "y'", "z'", "w'")
    h_log = []
    one_dim = sorted(key for key in frags_by if key[0] == 1)
    for copy_no, key in enumerate(one_dim, start=1):
        r, frags, levels, free_name = frags_by[key]
        Mfree = levels[plan.s_prev(1)].rename(subobjects[free_name])
        XM = XL.subposet(face_poset(Mfree).points)
        tag = f"Kun{copy_no}|"
        Kc = kun.space.rename(lambda p: tag + p)
        R = Kc.subposet([tag + p for p in ("x'", "y'", "z'", "w'")])
        g_R = crown_cycle(*(tag + p for p in ("x'", "y'", "z'", "w'")))
        h = None
        for cand in monotone_maps(XM, R):
            d = map_degree(XM, R, cand, g_R)
            if d in (1, -1):
                h, deg = cand, d
                break
        if h is None:
            raise AssemblyError(f"no wrap-once map for the {key} realization")
        deg_kun = map_degree(XM, Kc, h, g_R)
        if deg_kun not in (1, -1):
            raise AssemblyError("h fails the degree certificate in the Kun copy")
        B, _, _ = nh_cylinder(MonotoneMap(XM, Kc, h), x_tag=None, y_tag=None)
        pieces.append(B)
        subobjects[f"Kun{copy_no}"] = {p: tag + p for p in kun.space.points}
        originals[f"Kun{copy_no}"] = kun.space
        h_log.append({"realization": f"{key[0]}.{key[1]}", "copy": tag.rstrip("|"), "degree": deg,
                      "degree_in_kun": deg_kun, "map": h})
    X = union(*pieces)
    kun_copies = [n for n in subobjects if n.startswith("Kun")]
    copies_ok = len(kun_copies) == len(one_dim) and all(
        X.subposet(subobjects[n].values()) == originals[n].rename(subobjects[n]) for n in kun_copies)
    disjoint = len({p for n in kun_copies for p in subobjects[n].values()}) == 14 * len(kun_copies)
    hom_ok = _same_homology(X, K)
    checks.update({"kun_copies": len(kun_copies), "kun_copies_ok": copies_ok and disjoint,
                   "h_degrees": [e["degree"] for e in h_log], "homology_X": hom_ok})
    if not (copies_ok and disjoint and hom_ok):
        raise AssemblyError(f"main construction failed its checks: {checks}")
    checks["certified_depths"] = plan.mode == "bound" or plan.verified
    if fpp_budget is not None:
        checks["fpp"] = fpp_check(X, fpp_budget).kind
    log = {"points": len(X), "L_facets": len(L.facets), "glue": glue_log, "h": h_log,
           "seconds": round(time.monotonic() - t0, 3),
           "mode": "certified" if checks["certified_depths"] else "toy"}
    return AssembledSpace(X, subobjects, originals, plan, log, checks)
