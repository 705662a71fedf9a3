"""Smith normal form and ranks of exact integer matrices.

Dense SNF uses smallest-absolute-value pivoting on Python integers.  For
the large sparse matrices of Khovanov complexes, unit pivots are first
eliminated sparsely (Markowitz-style choice of short rows and columns);
only the leftover core goes through dense SNF.
"""

from __future__ import annotations

import heapq
from typing import NamedTuple

from ..matrices import IntMatrix


class SNF(NamedTuple):
    factors: list
    U: list | None = None
    V: list | None = None


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(M, transforms: bool = False) -> SNF:
    """Invariant factors ``d_1 | d_2 | ...`` of ``M`` (all positive).

    ``M`` is a list of rows or an :class:`IntMatrix`.  With ``transforms``
    also returns unimodular ``U`` and ``V`` with ``U M V`` diagonal.
    """
    if isinstance(M, IntMatrix):
        M = M.dense()
    A = [list(map(int, row)) for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    U = _identity(m) if transforms else None
    V = _identity(n) if transforms else None

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        if V is not None:
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, c):
        # row dst += c * row src
        ra, rs = A[dst], A[src]
        for k in range(n):
            if rs[k]:
                ra[k] += c * rs[k]
        if U is not None:
            ua, us = U[dst], U[src]
            for k in range(m):
                if us[k]:
                    ua[k] += c * us[k]

    def add_col(dst, src, c):
        for row in A:
            if row[src]:
                row[dst] += c * row[src]
        if V is not None:
            for row in V:
                if row[src]:
                    row[dst] += c * row[src]

    factors = []
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
                    if A[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
                    if A[t][j]:
                        dirty = True
            if dirty:
                # move the smallest leftover into the pivot slot
                cand = [(abs(A[i][t]), i, t) for i in range(t + 1, m) if A[i][t]]
                cand += [(abs(A[t][j]), t, j) for j in range(t + 1, n) if A[t][j]]
                _, i, j = min(cand)
                if i != t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            if U is not None:
                U[t] = [-x for x in U[t]]
        factors.append(A[t][t])
        t += 1
    return SNF(factors, U, V)


class _Sparse:
    """Rows as ``{col: value}`` with a column index, for pivot elimination."""

    def __init__(self, M: IntMatrix, modulus: int | None = None):
        self.p = modulus
        self.rows = {}
        self.cols = {}
        for (t, s), x in M.entries.items():
            if modulus is not None:
                x %= modulus
                if not x:
                    continue
            self.rows.setdefault(t, {})[s] = x
            self.cols.setdefault(s, set()).add(t)

    def is_unit(self, x):
        return x in (1, -1) if self.p is None else x % self.p != 0

    def pivot(self, r, c):
        """Clear column ``c`` using the unit pivot at ``(r, c)``, then drop
        row ``r`` and column ``c``."""
        rows, cols, p = self.rows, self.cols, self.p
        prow = rows.pop(r)
        a = prow[c]
        inv = a if p is None else pow(a, -1, p)
        for cc in prow:
            cols[cc].discard(r)
        for r2 in list(cols[c]):
            row = rows[r2]
            f = row[c] * inv
            for cc, x in prow.items():
                y = row.get(cc, 0) - f * x
                if p is not None:
                    y %= p
                if y:
                    if cc not in row:
                        cols[cc].add(r2)
                    row[cc] = y
                elif cc in row:
                    del row[cc]
                    cols[cc].discard(r2)
            if not row:
                del rows[r2]
        del cols[c]
        for cc in prow:
            if not cols.get(cc, True):
                del cols[cc]

    def eliminate_units(self) -> int:
        """Eliminate unit pivots until none remain; returns their number."""
        count = 0
        progress = True
        while progress:
            progress = False
            heap = [(len(rs), i, c) for i, (c, rs) in enumerate(self.cols.items())]
            heapq.heapify(heap)
            order = {c: i for i, c in enumerate(self.cols)}
            while heap:
                size, _, c = heapq.heappop(heap)
                rs = self.cols.get(c)
                if not rs:
                    continue
                if len(rs) != size:
                    heapq.heappush(heap, (len(rs), order[c], c))
                    continue
                best = None
                for r in rs:
                    if self.is_unit(self.rows[r][c]):
                        ln = len(self.rows[r])
                        if best is None or ln < best[0]:
                            best = (ln, r)
                if best is None:
                    continue
                self.pivot(best[1], c)
                count += 1
                progress = True
        return count

    def dense_core(self):
        rows = sorted(self.rows, key=repr)
        cols = sorted(self.cols, key=repr)
        ci = {c: j for j, c in enumerate(cols)}
        out = [[0] * len(cols) for _ in rows]
        for i, r in enumerate(rows):
            for c, x in self.rows[r].items():
                out[i][ci[c]] = x
        return out


def invariant_factors(M: IntMatrix) -> list:
    """Invariant factors of a sparse integer matrix (ones included)."""
    S = _Sparse(M)
    ones = S.eliminate_units()
    core = S.dense_core()
    return [1] * ones + smith_normal_form(core).factors


def _rank_mod_p_dense(A, p):
    A = [[x % p for x in row] for row in A]
    rank = 0
    ncols = len(A[0]) if A else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        inv = pow(A[rank][c], -1, p)
        for i in range(len(A)):
            if i != rank and A[i][c]:
                f = A[i][c] * inv % p
                A[i] = [(x - f * y) % p for x, y in zip(A[i], A[rank])]
        rank += 1
    return rank


def rank_mod_p(M: IntMatrix, p: int) -> int:
    S = _Sparse(M, modulus=p)
    r = S.eliminate_units()
    # every nonzero entry is a unit mod p, so nothing is left
    return r + _rank_mod_p_dense(S.dense_core(), p)


def rank(M: IntMatrix) -> int:
    return sum(1 for f in invariant_factors(M) if f)
