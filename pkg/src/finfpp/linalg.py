"""Exact integer and rational linear algebra on Python ints.

Dense routines work on lists of lists; the sparse routines take matrices as a
list of columns, each a ``{row: value}`` dict.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

Matrix = List[List[int]]
SparseColumns = List[Dict[int, int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    out = []
    for row in A:
        nz = [(k, a) for k, a in enumerate(row) if a]
        out.append([sum(a * B[k][j] for k, a in nz) for j in range(cols)])
    if inner == 0:
        return [[0] * cols for _ in A]
    return out


def matvec(A: Matrix, x: Sequence[int]) -> List[int]:
    return [sum(a * b for a, b in zip(row, x) if a) for row in A]


def transpose(A: Matrix, ncols: Optional[int] = None) -> Matrix:
    if not A:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*A)]


def dense(cols: SparseColumns, nrows: int) -> Matrix:
    A = [[0] * len(cols) for _ in range(nrows)]
    for j, col in enumerate(cols):
        for i, v in col.items():
            A[i][j] = v
    return A


class _Tracked:
    """Matrix under elementary operations, tracking P·A·Q and the inverses."""

    def __init__(self, A: Matrix, track: bool):
        self.A = [list(r) for r in A]
        self.m = len(A)
        self.n = len(A[0]) if A else 0
        self.track = track
        if track:
            self.P, self.Pinv = identity(self.m), identity(self.m)
            self.Q, self.Qinv = identity(self.n), identity(self.n)

    def swap_rows(self, i, j):
        if i == j:
            return
        A = self.A
        A[i], A[j] = A[j], A[i]
        if self.track:
            self.P[i], self.P[j] = self.P[j], self.P[i]
            for row in self.Pinv:
                row[i], row[j] = row[j], row[i]

    def swap_cols(self, i, j):
        if i == j:
            return
        for row in self.A:
            row[i], row[j] = row[j], row[i]
        if self.track:
            for row in self.Q:
                row[i], row[j] = row[j], row[i]
            self.Qinv[i], self.Qinv[j] = self.Qinv[j], self.Qinv[i]

    def add_row(self, dst, src, c):
        """row[dst] += c * row[src]"""
        if not c:
            return
        rs, rd = self.A[src], self.A[dst]
        for k, v in enumerate(rs):
            if v:
                rd[k] += c * v
        if self.track:
            ps, pd = self.P[src], self.P[dst]
            for k, v in enumerate(ps):
                if v:
                    pd[k] += c * v
            for row in self.Pinv:
                if row[dst]:
                    row[src] -= c * row[dst]

    def add_col(self, dst, src, c):
        """col[dst] += c * col[src]"""
        if not c:
            return
        for row in self.A:
            if row[src]:
                row[dst] += c * row[src]
        if self.track:
            for row in self.Q:
                if row[src]:
                    row[dst] += c * row[src]
            qd, qs = self.Qinv[dst], self.Qinv[src]
            for k, v in enumerate(qd):
                if v:
                    qs[k] -= c * v

    def negate_row(self, i):
        self.A[i] = [-v for v in self.A[i]]
        if self.track:
            self.P[i] = [-v for v in self.P[i]]
            for row in self.Pinv:
                row[i] = -row[i]


def _snf(A: Matrix, track: bool) -> _Tracked:
    T = _Tracked(A, track)
    m, n = T.m, T.n
    t = 0
    while t < min(m, n):
        M = T.A
        best = None
        for i in range(t, m):
            row = M[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        T.swap_rows(t, i)
        T.swap_cols(t, j)
        while True:
            M = T.A
            p = M[t][t]
            dirty = False
            for i in range(t + 1, m):
                if M[i][t]:
                    q = M[i][t] // p
                    T.add_row(i, t, -q)
                    if M[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if M[t][j]:
                    q = M[t][j] // p
                    T.add_col(j, t, -q)
                    if M[t][j]:
                        dirty = True
            if dirty:
                # move the smallest remainder into the pivot and retry
                best = (abs(p), t, t)
                for i in range(t + 1, m):
                    if M[i][t] and abs(M[i][t]) < best[0]:
                        best = (abs(M[i][t]), i, t)
                for j in range(t + 1, n):
                    if M[t][j] and abs(M[t][j]) < best[0]:
                        best = (abs(M[t][j]), t, j)
                T.swap_rows(t, best[1])
                T.swap_cols(t, best[2])
                continue
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if M[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            T.add_row(t, bad, 1)
        if T.A[t][t] < 0:
            T.negate_row(t)
        t += 1
    return T


def smith_normal_form(A: Matrix) -> Tuple[Matrix, Matrix, Matrix]:
    """Return ``(U, D, V)`` with ``A = U D V``, ``U``, ``V`` unimodular.

    ``D`` is diagonal with nonnegative entries ``d1 | d2 | ...``.
    """
    T = _snf(A, track=True)
    return T.Pinv, T.A, T.Qinv


def snf_transforms(A: Matrix):
    """``(P, D, Q, Pinv, Qinv)`` with ``P A Q = D``."""
    T = _snf(A, track=True)
    return T.P, T.A, T.Q, T.Pinv, T.Qinv


def diagonal(D: Matrix) -> List[int]:
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]


def _dense_factors(A: Matrix) -> List[int]:
    if not A or not A[0]:
        return []
    return [d for d in diagonal(_snf(A, track=False).A) if d]


def invariant_factors(cols: SparseColumns, nrows: int) -> List[int]:
    """Nonzero invariant factors of a sparse integer matrix.

    Unit pivots are eliminated sparsely first; whatever remains is handed to
    the dense Smith normal form.
    """
    rows: Dict[int, Dict[int, int]] = {}
    colrows: Dict[int, set] = {}
    for j, col in enumerate(cols):
        for i, v in col.items():
            if v:
                rows.setdefault(i, {})[j] = v
                colrows.setdefault(j, set()).add(i)
    ones = 0
    progress = True
    while progress:
        progress = False
        for c in sorted(colrows, key=lambda c: len(colrows[c])):
            rs = colrows.get(c)
            if not rs:
                colrows.pop(c, None)
                continue
            units = [r for r in rs if abs(rows[r][c]) == 1]
            if not units:
                continue
            r = min(units, key=lambda r: (len(rows[r]), r))
            prow = rows.pop(r)
            p = prow[c]
            for cc in prow:
                colrows[cc].discard(r)
            for i in list(colrows[c]):
                row = rows[i]
                f = row[c] * p
                for cc, v in prow.items():
                    nv = row.get(cc, 0) - f * v
                    if nv:
                        if cc not in row:
                            colrows[cc].add(i)
                        row[cc] = nv
                    elif cc in row:
                        del row[cc]
                        colrows[cc].discard(i)
                if not row:
                    del rows[i]
            del colrows[c]
            ones += 1
            progress = True
        for c in [c for c, rs in colrows.items() if not rs]:
            del colrows[c]
    if not rows:
        return [1] * ones
    ri = sorted(rows)
    ci = sorted({c for row in rows.values() for c in row})
    rpos = {r: k for k, r in enumerate(ri)}
    cpos = {c: k for k, c in enumerate(ci)}
    A = [[0] * len(ci) for _ in ri]
    for r, row in rows.items():
        for c, v in row.items():
            A[rpos[r]][cpos[c]] = v
    return [1] * ones + _dense_factors(A)


def rank(cols: SparseColumns, nrows: int) -> int:
    return len(invariant_factors(cols, nrows))


def solve_integer(A: Matrix, y: Sequence[int], ncols: Optional[int] = None) -> Optional[List[int]]:
    """Some integer ``x`` with ``A x = y``, or ``None`` if there is none."""
    n = len(A[0]) if A else (ncols or 0)
    if not A:
        return [0] * n
    if n == 0:
        return [0] * 0 if not any(y) else None
    P, D, Q, _, _ = snf_transforms(A)
    z = matvec(P, y)
    w = [0] * n
    for i, zi in enumerate(z):
        d = D[i][i] if i < n else 0
        if d:
            if zi % d:
                return None
            w[i] = zi // d
        elif zi:
            return None
    return matvec(Q, w)


def _div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        if b in (1, -1):
            return a * b
        return a // b if a % b == 0 else Fraction(a, b)
    q = Fraction(a) / Fraction(b)
    return q.numerator if q.denominator == 1 else q


class Reducer:
    """Incremental column echelon form over Q with provenance tags.

    Each stored vector carries a tag vector (a linear combination of the tags
    of the vectors that were added).  ``reduce`` returns the residual and the
    tag combination that was subtracted.
    """

    def __init__(self):
        self.pivots: Dict[int, Tuple[Dict[int, object], Dict[int, object]]] = {}

    def __len__(self):
        return len(self.pivots)

    def reduce(self, vec: Dict[int, object]) -> Tuple[Dict[int, object], Dict[int, object]]:
        v = {i: x for i, x in vec.items() if x}
        tag: Dict[int, object] = {}
        while v:
            piv = max(v)
            entry = self.pivots.get(piv)
            if entry is None:
                break
            pv, ptag = entry
            a, b = v[piv], pv[piv]
            c = _div(a, b)
            for i, x in pv.items():
                nv = v.get(i, 0) - c * x
                if nv:
                    v[i] = nv
                else:
                    v.pop(i, None)
            for i, x in ptag.items():
                nt = tag.get(i, 0) + c * x
                if nt:
                    tag[i] = nt
                else:
                    tag.pop(i, None)
        return v, tag

    def add(self, vec: Dict[int, object], tag: Optional[Dict[int, object]] = None) -> bool:
        """Insert ``vec``; return True when it was independent of the span."""
        v, sub = self.reduce(vec)
        if not v:
            return False
        t = dict(tag or {})
        for i, x in sub.items():
            nt = t.get(i, 0) - x
            if nt:
                t[i] = nt
            else:
                t.pop(i, None)
        self.pivots[max(v)] = (v, t)
        return True
