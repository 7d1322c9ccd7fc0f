"""Integral simplicial homology, chain norms and norm-controlled chain maps."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from . import linalg
from .budget import BudgetExceeded, Counter, SearchBudget
from .chains import Chain, Simplex, orient, permutation_sign
from .fposet import FinitePoset, MonotoneMap, chain_map_of, order_complex
from .scomplex import (ComplexError, SimplicialComplex, SimplicialMap, barycentric, bary_name,
                       carrier_hull, mapping_cylinder)


def _as_complex(obj) -> SimplicialComplex:
    if isinstance(obj, FinitePoset):
        return order_complex(obj)
    return obj


def _as_simplicial_map(m) -> SimplicialMap:
    if isinstance(m, MonotoneMap):
        return chain_map_of(m)
    return m


class IntChainComplex:
    """Simplicial chain complex with the sorted-vertex orientation basis."""

    def __init__(self, K: SimplicialComplex):
        self.complex = K
        self.dim = K.dim
        self.bases: List[List[Simplex]] = [K.simplices(k) for k in range(self.dim + 1)]
        self.index: List[Dict[Simplex, int]] = [{s: i for i, s in enumerate(b)} for b in self.bases]

    def size(self, k: int) -> int:
        return len(self.bases[k]) if 0 <= k <= self.dim else 0

    @cached_property
    def _boundaries(self) -> Dict[int, linalg.SparseColumns]:
        out = {}
        for k in range(1, self.dim + 1):
            idx = self.index[k - 1]
            cols = []
            for s in self.bases[k]:
                cols.append({idx[s[:i] + s[i + 1:]]: (-1) ** i for i in range(len(s))})
            out[k] = cols
        return out

    def boundary(self, k: int) -> linalg.SparseColumns:
        """Columns of the boundary map from ``C_k`` to ``C_{k-1}``."""
        if k <= 0 or k > self.dim:
            return [dict() for _ in range(self.size(k))]
        return self._boundaries[k]

    def boundary_dense(self, k: int) -> linalg.Matrix:
        return linalg.dense(self.boundary(k), self.size(k - 1))

    def vector(self, c: Chain) -> Dict[int, int]:
        idx = self.index[c.dim]
        try:
            return {idx[s]: v for s, v in c.coeffs.items()}
        except KeyError as e:
            raise ComplexError(f"simplex {e.args[0]} is not in the complex") from None

    def chain(self, k: int, vec) -> Chain:
        return Chain(k, {self.bases[k][i]: v for i, v in (vec.items() if isinstance(vec, dict) else enumerate(vec))
                         if v})

    @cached_property
    def _factors(self) -> Dict[int, List[int]]:
        return {k: linalg.invariant_factors(self.boundary(k), self.size(k - 1)) for k in range(1, self.dim + 1)}

    def factors(self, k: int) -> List[int]:
        return self._factors.get(k, [])

    def is_cycle(self, c: Chain) -> bool:
        return not c.boundary() if c.dim > 0 else True


def chain_complex(K) -> IntChainComplex:
    return IntChainComplex(_as_complex(K))


@dataclass
class HomologyGroup:
    dim: int
    rank: int
    torsion: List[int] = field(default_factory=list)
    generators: Optional[List[Chain]] = None
    torsion_generators: Optional[List[Chain]] = None

    def to_json(self) -> dict:
        out = {"dim": self.dim, "rank": self.rank, "torsion": self.torsion}
        if self.generators is not None:
            out["generators"] = [g.to_json() for g in self.generators]
        return out

    def __str__(self):
        parts = (["Z^%d" % self.rank] if self.rank > 1 else ["Z"] if self.rank == 1 else []) + \
                [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) or "0"


def homology(obj, reduced: bool = False, generators: bool = False) -> List[HomologyGroup]:
    """Integral homology in every dimension ``0..dim``.

    Posets are handled through their order complexes.  Ranks and torsion come
    from sparse elimination; generators, when asked for, from dense Smith
    normal forms.
    """
    C = obj if isinstance(obj, IntChainComplex) else chain_complex(obj)
    out = []
    for k in range(C.dim + 1):
        fk, fk1 = C.factors(k), C.factors(k + 1)
        rank = C.size(k) - len(fk) - len(fk1)
        H = HomologyGroup(k, rank, [d for d in fk1 if d > 1])
        if generators:
            H.generators, H.torsion_generators = integral_generators(C, k)
        out.append(H)
    if reduced and out:
        out[0].rank -= 1
        if out[0].generators:
            out[0].generators = [g - out[0].generators[0] for g in out[0].generators[1:]]
    return out


def betti(obj) -> List[int]:
    return [H.rank for H in homology(obj)]


def integral_generators(C: IntChainComplex, k: int) -> Tuple[List[Chain], List[Chain]]:
    """Cycles generating the free part and the torsion part of ``H_k``."""
    n = C.size(k)
    if k == 0 or n == 0:
        kb = linalg.identity(n)
        r = 0
        Qinv = linalg.identity(n)
        Q = kb
    else:
        A = C.boundary_dense(k)
        _, D, Q, _, Qinv = linalg.snf_transforms(A)
        r = sum(1 for d in linalg.diagonal(D) if d)
    z = n - r
    if z == 0:
        return [], []
    kernel = [[Q[i][j] for j in range(r, n)] for i in range(n)]
    B = C.boundary_dense(k + 1) if k < C.dim else [[] for _ in range(n)]
    m = len(B[0]) if B and B[0] else 0
    if m:
        M = linalg.matmul(Qinv, B)[r:]
        _, D2, _, P2inv, _ = linalg.snf_transforms(M)
        d2 = linalg.diagonal(D2)
    else:
        P2inv = linalg.identity(z)
        d2 = []
    frees, tors = [], []
    for i in range(z):
        d = d2[i] if i < len(d2) else 0
        if d == 1:
            continue
        coords = [P2inv[row][i] for row in range(z)]
        vec = linalg.matvec(kernel, coords)
        g = _shorten(C, k, C.chain(k, vec))
        (tors if d > 1 else frees).append(g)
    return frees, tors


def _shorten(C: IntChainComplex, k: int, g: Chain, passes: int = 4) -> Chain:
    """Greedy norm reduction of a cycle by adding boundaries."""
    if k >= C.dim:
        return g.canonical_sign()
    bnd = [C.chain(k, col) for col in C.boundary(k + 1)]
    for _ in range(passes):
        improved = False
        for b in bnd:
            if not any(s in g.coeffs for s in b.coeffs):
                continue
            for cand in (g + b, g - b):
                if cand.norm() < g.norm():
                    g, improved = cand, True
                    break
        if not improved:
            break
    return g.canonical_sign()


class HomologyCoordinates:
    """Coordinates of cycles in a chosen basis of ``H_k(.; Q)``.

    The basis is given by cycles; they must be independent modulo boundaries.
    """

    def __init__(self, C: IntChainComplex, k: int, basis: Sequence[Chain]):
        self.C, self.k = C, k
        self.basis = list(basis)
        self._red = linalg.Reducer()
        if k < C.dim:
            for col in C.boundary(k + 1):
                self._red.add(dict(col))
        for i, g in enumerate(self.basis):
            if g.boundary():
                raise ComplexError(f"basis element {i} is not a cycle")
            if not self._red.add(C.vector(g), {i: 1}):
                raise ComplexError(f"basis element {i} is dependent modulo boundaries")

    def coordinates(self, z: Chain) -> Optional[List[Fraction]]:
        """Coordinates of ``[z]`` or ``None`` when the class is outside the span."""
        if not z:
            return [Fraction(0)] * len(self.basis)
        if z.boundary():
            raise ComplexError("chain is not a cycle")
        res, tag = self._red.reduce(self.C.vector(z))
        if res:
            return None
        return [Fraction(tag.get(i, 0)) for i in range(len(self.basis))]

    def is_boundary(self, z: Chain) -> bool:
        c = self.coordinates(z)
        return c is not None and not any(c)


def rational_basis(C: IntChainComplex, k: int) -> List[Chain]:
    """Integral cycles whose classes form a basis of ``H_k(.; Q)``.

    Sparse elimination over Q: kernel vectors of the boundary come from the
    tags of columns that reduce to zero, and are kept when independent modulo
    boundaries.  Suited to complexes too large for the dense Smith form.
    """
    n = C.size(k)
    if n == 0:
        return []
    bnd = linalg.Reducer()
    if k < C.dim:
        for col in C.boundary(k + 1):
            bnd.add(dict(col))
    rank_b = len(bnd)
    if k == 0:
        cycles = [{j: 1} for j in range(n)]
        rank_k = 0
    else:
        cols = linalg.Reducer()
        cycles = []
        for j, col in enumerate(C.boundary(k)):
            res, tag = cols.reduce(dict(col))
            if res:
                cols.add(dict(col), {j: 1})
            else:
                vec = {i: -Fraction(v) for i, v in tag.items()}
                vec[j] = vec.get(j, 0) + 1
                cycles.append(vec)
        rank_k = len(cols)
    betti = n - rank_k - rank_b
    out = []
    for vec in cycles:
        if len(out) >= betti:
            break
        den = 1
        for v in vec.values():
            den = den * Fraction(v).denominator // math.gcd(den, Fraction(v).denominator)
        ivec = {i: int(Fraction(v) * den) for i, v in vec.items() if v}
        g = math.gcd(*ivec.values()) if ivec else 1
        ivec = {i: v // g for i, v in ivec.items()}
        if bnd.add(dict(ivec)):
            out.append(C.chain(k, [ivec.get(i, 0) for i in range(n)]).canonical_sign())
    return out


# -- chain maps --------------------------------------------------------------

def push(phi, c: Chain) -> Chain:
    """Image of a chain under the chain map of a simplicial map."""
    phi = _as_simplicial_map(phi)
    acc: Dict[Simplex, int] = {}
    for s, v in c.coeffs.items():
        sign, t = orient([phi.assign[x] for x in s])
        if sign:
            acc[t] = acc.get(t, 0) + sign * v
    return Chain(c.dim, acc)


def induced_chain_map(phi, source: Optional[IntChainComplex] = None,
                      target: Optional[IntChainComplex] = None) -> Dict[int, linalg.SparseColumns]:
    """Matrices of ``phi_#`` in every dimension, as sparse columns."""
    phi = _as_simplicial_map(phi)
    S = source or IntChainComplex(phi.source)
    T = target or IntChainComplex(phi.target)
    out = {}
    for k in range(S.dim + 1):
        cols = []
        idx = T.index[k] if k <= T.dim else {}
        for s in S.bases[k]:
            sign, t = orient([phi.assign[x] for x in s])
            cols.append({idx[t]: sign} if sign else {})
        out[k] = cols
    return out


def chain_norm(c: Union[Chain, Mapping, Sequence[int]]) -> int:
    if isinstance(c, Chain):
        return c.norm()
    vals = c.values() if isinstance(c, Mapping) else c
    return sum(abs(v) for v in vals)


def operator_norm(M) -> int:
    """Largest column L1 norm (0 for an empty domain).

    Accepts sparse columns or a dense row-major matrix.
    """
    if not M:
        return 0
    if isinstance(M[0], dict):
        return max((sum(abs(v) for v in col.values()) for col in M), default=0)
    ncols = len(M[0])
    return max((sum(abs(row[j]) for row in M) for j in range(ncols)), default=0)


def homology_matrices(phi, source_bases: Optional[Dict[int, List[Chain]]] = None,
                      target_bases: Optional[Dict[int, List[Chain]]] = None) -> Dict[int, List[List[Fraction]]]:
    """Rational matrices of ``phi_*`` on ``H_k`` in the given cycle bases.

    Defaults to the free generators from ``homology(..., generators=True)``.
    """
    phi = _as_simplicial_map(phi)
    S, T = IntChainComplex(phi.source), IntChainComplex(phi.target)
    out = {}
    for k in range(S.dim + 1):
        sb = (source_bases or {}).get(k)
        if sb is None:
            sb = rational_basis(S, k)
        if k > T.dim:
            out[k] = []
            continue
        tb = (target_bases or {}).get(k)
        if tb is None:
            tb = rational_basis(T, k)
        coords = HomologyCoordinates(T, k, tb)
        cols = []
        for g in sb:
            c = coords.coordinates(push(phi, g))
            if c is None:
                raise ComplexError(f"target basis in degree {k} does not span rational homology")
            cols.append(c)
        out[k] = [[cols[j][i] for j in range(len(sb))] for i in range(len(tb))]
    return out


def lefschetz(m) -> Fraction:
    """Alternating sum of traces on rational homology."""
    phi = _as_simplicial_map(m)
    if phi.source != phi.target:
        raise ComplexError("Lefschetz number needs a self-map")
    mats = homology_matrices(phi)
    total = Fraction(0)
    for k, M in mats.items():
        total += (-1) ** k * sum((M[i][i] for i in range(len(M))), Fraction(0))
    return total


def lefschetz_chain_level(m) -> int:
    """Same number via traces on chain groups (Hopf trace formula)."""
    phi = _as_simplicial_map(m)
    total = 0
    for k, cols in induced_chain_map(phi).items():
        total += (-1) ** k * sum(col.get(j, 0) for j, col in enumerate(cols))
    return total


# -- subdivision operator ---------------------------------------------------

class SubdivisionOperator:
    """Chain map ``C_*(K) -> C_*(K')`` sending a simplex to its signed flags."""

    def __init__(self, K: SimplicialComplex, subdivision: Optional[SimplicialComplex] = None):
        self.source = K
        self.target = subdivision or barycentric(K)

    def of_simplex(self, simplex: Simplex) -> Chain:
        simplex = tuple(simplex)
        terms = []
        for perm in itertools.permutations(simplex):
            verts = [bary_name(tuple(sorted(perm[:i + 1]))) for i in range(len(perm))]
            terms.append((permutation_sign(perm), verts))
        return Chain.from_terms(len(simplex) - 1, terms)

    def __call__(self, c: Chain) -> Chain:
        acc = Chain(c.dim)
        for s, v in c.coeffs.items():
            acc = acc + v * self.of_simplex(s)
        return acc

    def matrix(self, k: int) -> linalg.SparseColumns:
        T = IntChainComplex(self.target)
        idx = T.index[k] if k <= T.dim else {}
        return [{idx[s]: v for s, v in self.of_simplex(x).coeffs.items()} for x in self.source.simplices(k)]

    def norm(self, k: int) -> int:
        return operator_norm(self.matrix(k))


def subdivision_operator(K: SimplicialComplex) -> SubdivisionOperator:
    return SubdivisionOperator(K)


# -- cycle enumeration and class norms -------------------------------------

def enumerate_cycles(K, k: int, bound: int, budget: Optional[SearchBudget] = None) -> List[Chain]:
    """All nonzero ``k``-cycles of norm at most ``bound``, one per sign pair.

    Each cycle is returned with its first nonzero coefficient positive; the
    list is sorted.  Raises ``BudgetExceeded`` past the node budget.
    """
    K = _as_complex(K)
    simplices = K.simplices(k)
    counter = Counter(budget)
    faces = [[s[:i] + s[i + 1:] for i in range(len(s))] if k > 0 else [] for s in simplices]
    last: Dict[Simplex, int] = {}
    for i, fs in enumerate(faces):
        for f in fs:
            last[f] = i
    closes = [[f for f in fs if last[f] == i] for i, fs in enumerate(faces)]
    n = len(simplices)
    out: List[Chain] = []
    residual: Dict[Simplex, int] = {}
    chosen: Dict[Simplex, int] = {}

    def dfs(i: int, rem: int, res_norm: int):
        counter.tick()
        if res_norm > (k + 1) * rem:
            return
        if i == n:
            if chosen and res_norm == 0:
                out.append(Chain(k, dict(chosen)))
            return
        lo = 1 if not chosen else -rem
        for t in [0] + [t for t in range(lo, rem + 1) if t]:
            if t == 0:
                if any(residual.get(f, 0) for f in closes[i]):
                    continue
                dfs(i + 1, rem, res_norm)
                continue
            delta = 0
            for j, f in enumerate(faces[i]):
                old = residual.get(f, 0)
                new = old + (-1) ** j * t
                residual[f] = new
                delta += abs(new) - abs(old)
            ok = not any(residual.get(f, 0) for f in closes[i])
            if ok:
                chosen[simplices[i]] = t
                dfs(i + 1, rem - abs(t), res_norm + delta)
                del chosen[simplices[i]]
            for j, f in enumerate(faces[i]):
                residual[f] -= (-1) ** j * t

    dfs(0, bound, 0)
    return sorted(out, key=lambda c: sorted(c.coeffs.items()))


@dataclass
class NormResult:
    value: Optional[int]
    exact: bool
    lower_bound: int
    witness: Optional[Chain] = None

    def to_json(self) -> dict:
        return {"value": self.value, "exact": self.exact, "lower_bound": self.lower_bound,
                "witness": self.witness.to_json() if self.witness is not None else None}


def _homologous(C: IntChainComplex, a: Chain, b: Chain) -> bool:
    d = a - b
    if not d:
        return True
    k = a.dim if a else b.dim
    if k >= C.dim:
        return False
    red = linalg.Reducer()
    for col in C.boundary(k + 1):
        red.add(dict(col))
    res, _ = red.reduce(C.vector(d))
    if res:
        return False
    if any(f > 1 for f in C.factors(k + 1)):
        y = [0] * C.size(k)
        for i, v in C.vector(d).items():
            y[i] = v
        return linalg.solve_integer(C.boundary_dense(k + 1), y) is not None
    return True


def homology_class_norm(K, z: Chain, budget: Optional[SearchBudget] = None) -> NormResult:
    """Least norm of a cycle homologous to ``z``.

    Cycles are enumerated by increasing norm bound, so a budget overrun still
    certifies the bound reached so far as a lower bound.
    """
    K = _as_complex(K)
    C = IntChainComplex(K)
    if z.boundary():
        raise ComplexError("chain is not a cycle")
    if _homologous(C, z, Chain(z.dim)):
        return NormResult(0, True, 0, Chain(z.dim))
    lower = 1
    try:
        for b in range(1, z.norm() + 1):
            for c in enumerate_cycles(K, z.dim, b, budget):
                if c.norm() != b:
                    continue
                for cand in (c, -c):
                    if _homologous(C, z, cand):
                        return NormResult(b, True, b, cand)
            lower = b + 1
    except BudgetExceeded:
        return NormResult(None, False, lower)
    raise AssertionError("z itself must be found")


# -- Lemma-3 style retraction of a subdivision cylinder ---------------------

@dataclass
class CylinderRetraction:
    complex: SimplicialComplex
    subdivision: SimplicialComplex
    ordering: List[str]
    psi: SimplicialMap
    cylinder: "object"
    r: Dict[Simplex, Chain]

    def apply(self, c: Chain) -> Chain:
        acc = Chain(c.dim)
        for s, v in c.coeffs.items():
            acc = acc + v * self.r[s]
        return acc

    def source_simplex_in_base(self, S: Simplex) -> bool:
        """True when every vertex of ``S`` lies on the coarse (target) end."""
        tn = set(self.cylinder.target_names.values())
        return all(v in tn for v in S)

    def lemma3_check(self) -> Dict[str, object]:
        """Chain-map, retraction and norm-bound checks over every simplex."""
        Z = self.cylinder.complex
        fine = set(self.cylinder.source_names.values())
        chain_map = retraction = bound = saturation = True
        max_ratio = Fraction(0)
        saturated = 0
        for S, rS in self.r.items():
            k = len(S) - 1
            if k >= 1:
                lhs = rS.boundary()
                rhs = Chain(k - 1)
                for i in range(len(S)):
                    rhs = rhs + (-1) ** i * self.r[S[:i] + S[i + 1:]]
                if lhs != rhs:
                    chain_map = False
            if all(v in fine for v in S) and rS != Chain(k, {S: 1}):
                retraction = False
            n, cap = rS.norm(), math.factorial(k + 1)
            max_ratio = max(max_ratio, Fraction(n, cap))
            if n > cap:
                bound = False
            if k >= 1 and n == cap:
                saturated += 1
                if not self.source_simplex_in_base(S):
                    saturation = False
        return {"simplices": len(self.r), "chain_map": chain_map, "identity_on_subdivision": retraction,
                "norm_bound": bound, "saturation_in_base": saturation, "saturated_simplices": saturated,
                "max_norm_ratio": str(max_ratio), "cylinder_dim": Z.dim,
                "ok": chain_map and retraction and bound and saturation}


def _solve_carried(unknowns: List[Simplex], rhs: Chain) -> Chain:
    """Unique chain on ``unknowns`` whose boundary is ``rhs``."""
    k = len(unknowns[0]) - 1
    rows: Dict[Simplex, Dict[int, int]] = {}
    for j, s in enumerate(unknowns):
        for i in range(len(s)):
            rows.setdefault(s[:i] + s[i + 1:], {})[j] = (-1) ** i
    for f in rhs.coeffs:
        if f not in rows:
            raise ComplexError("boundary data not carried by the hull")
    red = linalg.Reducer()
    faces = sorted(rows)
    fidx = {f: i for i, f in enumerate(faces)}
    for j, s in enumerate(unknowns):
        col = {fidx[s[:i] + s[i + 1:]]: (-1) ** i for i in range(len(s))}
        red.add(col, {j: 1})
    res, tag = red.reduce({fidx[f]: v for f, v in rhs.coeffs.items()})
    if res:
        raise ComplexError("no chain in the hull has the prescribed boundary")
    coeffs = {}
    for j, v in tag.items():
        v = Fraction(v)
        if v.denominator != 1:
            raise ComplexError("carried chain is not integral")
        coeffs[unknowns[j]] = int(v)
    out = Chain(k, coeffs)
    if out.boundary() != rhs:
        raise ComplexError("carried chain does not match the boundary data")
    return out


def cylinder_retraction(K: SimplicialComplex, subdivision: Optional[SimplicialComplex] = None,
                        source_names=None, target_names=None) -> CylinderRetraction:
    """Ordering, approximation ``psi: K' -> K`` and norm-controlled retraction ``r``.

    Barycenters are ordered by decreasing dimension of their simplex, ``psi``
    sends a barycenter to the least vertex of its simplex, and ``r`` is the
    chain map carried by convex hulls of barycenters, computed dimension by
    dimension as the unique carried chain with boundary ``r(dS)``.
    """
    Kp = subdivision or barycentric(K)
    lab = Kp.labels
    ordering = sorted(Kp.vertices, key=lambda v: (-len(lab[v]), v))
    psi = SimplicialMap(Kp, K, {v: lab[v][0] for v in Kp.vertices})
    cyl = mapping_cylinder(psi, ordering, source_names=source_names, target_names=target_names)
    Z = cyl.complex
    inv_s = {z: v for v, z in cyl.source_names.items()}
    inv_t = {z: v for v, z in cyl.target_names.items()}
    smap = cyl.source_names

    def base_set(zv: str) -> Simplex:
        return lab[inv_s[zv]] if zv in inv_s else (inv_t[zv],)

    r: Dict[Simplex, Chain] = {}
    for k in range(Z.dim + 1):
        for S in Z.simplices(k):
            if k == 0:
                r[S] = Chain(0, {(smap[bary_name(base_set(S[0]))],): 1})
                continue
            hull = carrier_hull([base_set(v) for v in S])
            if hull.dim < k:
                r[S] = Chain(k)
                continue
            unknowns = sorted(tuple(sorted(smap[v] for v in f)) for f in hull.simplices(k))
            rhs = Chain(k - 1)
            for i in range(len(S)):
                rhs = rhs + (-1) ** i * r[S[:i] + S[i + 1:]]
            r[S] = _solve_carried(unknowns, rhs)
    return CylinderRetraction(K, Kp, ordering, psi, cyl, r)


def apply_chain_map(r: Mapping[Simplex, Chain], c: Chain) -> Chain:
    acc = Chain(c.dim)
    for s, v in c.coeffs.items():
        acc = acc + v * r[s]
    return acc


# -- winding numbers on order complexes ------------------------------------

class WeightingError(ValueError):
    pass


def pair_weights(X: FinitePoset, cover_weights: Mapping[Tuple[str, str], int]) -> Dict[Tuple[str, str], int]:
    """Extend cover weights to all pairs ``a < b`` by summing along increasing paths.

    Raises ``WeightingError`` when two increasing paths disagree or some
    2-simplex of the order complex has nonzero boundary weight.
    """
    w = {tuple(c): int(cover_weights.get(tuple(c), 0)) for c in X.covers}
    extra = set(map(tuple, cover_weights)) - set(w)
    if extra:
        raise WeightingError(f"weights given on non-cover pairs {sorted(extra)[:3]}")
    omega: Dict[Tuple[str, str], int] = {}
    for a in reversed(X.linear_extension()):
        for b in X.upper_covers[a]:
            wab = w[(a, b)]
            for key, v in [((a, b), wab)] + [((a, c), wab + omega[(b, c)]) for c in X.up(b)]:
                if key in omega and omega[key] != v:
                    raise WeightingError(f"increasing paths from {key[0]} to {key[1]} carry different weights")
                omega[key] = v
    for a in X.points:
        for b in X.up(a):
            for c in X.up(b):
                if omega[(a, b)] + omega[(b, c)] != omega[(a, c)]:
                    raise WeightingError(f"triangle {a}<{b}<{c} has nonzero boundary weight")
    return omega


def winding_eval(X: FinitePoset, z: Chain, weights: Mapping[Tuple[str, str], int]) -> int:
    """Sum of weights of the directed edges of a 1-chain of ``K(X)``."""
    if z.dim != 1:
        raise ComplexError("winding needs a 1-chain")
    if z.boundary():
        raise ComplexError("chain is not a cycle")
    omega = pair_weights(X, weights)
    total = 0
    for (u, v), c in z.coeffs.items():
        if X.lt(u, v):
            total += c * omega[(u, v)]
        elif X.lt(v, u):
            total -= c * omega[(v, u)]
        else:
            raise ComplexError(f"{u} and {v} are not comparable")
    return total


@dataclass
class WindingReport:
    generator_values: List[int]
    injective: bool
    iso: bool

    def to_json(self) -> dict:
        return {"generator_values": self.generator_values, "injective": self.injective, "iso": self.iso}


def winding_report(X: FinitePoset, weights: Mapping[Tuple[str, str], int]) -> WindingReport:
    """How the weighting acts on integral generators of ``H_1(K(X))``."""
    H1 = homology(X, generators=True)[1] if len(homology(X)) > 1 else HomologyGroup(1, 0, [], [], [])
    vals = [winding_eval(X, g, weights) for g in H1.generators or []]
    tors = H1.torsion
    injective = not tors and (len(vals) == 1 and vals[0] != 0 or not vals)
    iso = not tors and len(vals) == 1 and abs(vals[0]) == 1
    return WindingReport(vals, injective, iso)


def _tree_path(parent: Dict[str, Optional[str]], v: str) -> List[str]:
    out = [v]
    while parent[out[-1]] is not None:
        out.append(parent[out[-1]])
    return out


def solve_weighting(X: FinitePoset) -> Tuple[Dict[Tuple[str, str], int], Chain]:
    """Integral cover weighting inducing ``H_1(K(X)) -> Z`` with value 1 on a generator.

    Requires ``H_1(K(X))`` free of rank one.  Weights vanish on a breadth-first
    spanning tree of the Hasse diagram; every other cover gets the class
    coordinate of its fundamental cycle.
    """
    K = order_complex(X)
    C = IntChainComplex(K)
    frees, tors = integral_generators(C, 1)
    if len(frees) != 1 or tors:
        raise WeightingError("H_1 is not infinite cyclic")
    g = frees[0]
    coords = HomologyCoordinates(C, 1, [g])
    adj: Dict[str, List[str]] = {p: [] for p in X.points}
    for a, b in X.covers:
        adj[a].append(b)
        adj[b].append(a)
    root = X.points[0]
    parent: Dict[str, Optional[str]] = {root: None}
    queue = [root]
    tree = set()
    while queue:
        p = queue.pop(0)
        for q in sorted(adj[p]):
            if q not in parent:
                parent[q] = p
                tree.add(frozenset((p, q)))
                queue.append(q)
    if len(parent) != len(X.points):
        raise WeightingError("poset is not connected")
    weights = {}
    for a, b in X.covers:
        if frozenset((a, b)) in tree:
            weights[(a, b)] = 0
            continue
        # root -> a along the tree, the cover a -> b, then b -> root
        pa = list(reversed(_tree_path(parent, a)))
        terms = [(1, [pa[i], pa[i + 1]]) for i in range(len(pa) - 1)]
        terms.append((1, [a, b]))
        pb = _tree_path(parent, b)
        terms += [(1, [pb[i], pb[i + 1]]) for i in range(len(pb) - 1)]
        cyc = Chain.from_terms(1, terms)
        c = coords.coordinates(cyc)
        if c is None or c[0].denominator != 1:
            raise WeightingError("cycle coordinate is not integral")
        weights[(a, b)] = int(c[0])
    if winding_eval(X, g, weights) != 1:
        raise WeightingError("weighting does not send the generator to 1")
    return weights, g
