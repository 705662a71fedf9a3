"""Linear algebra over F_2 with vectors stored as Python-int bitsets."""

from __future__ import annotations


class Echelon:
    """Rows keyed by leading bit, each carrying a tag bitset.

    The tag of a row records which tagged generators it is a sum of, so
    reducing a vector to zero yields its coordinates.
    """

    def __init__(self):
        self.rows = {}

    def reduce(self, v: int, tag: int = 0):
        rows = self.rows
        while v:
            p = v.bit_length() - 1
            row = rows.get(p)
            if row is None:
                break
            v ^= row[0]
            tag ^= row[1]
        return v, tag

    def add(self, v: int, tag: int = 0) -> bool:
        """Insert ``v``; returns False if it was already in the span."""
        v, tag = self.reduce(v, tag)
        if not v:
            return False
        self.rows[v.bit_length() - 1] = (v, tag)
        return True

    def __len__(self):
        return len(self.rows)


def columns_mod2(M, src_index: dict, tgt_index: dict) -> list:
    """Columns of an :class:`IntMatrix` reduced mod 2, as bitsets over the target."""
    cols = [0] * len(src_index)
    for (t, s), x in M.entries.items():
        if x & 1:
            cols[src_index[s]] ^= 1 << tgt_index[t]
    return cols


def rank(cols: list) -> int:
    E = Echelon()
    return sum(1 for c in cols if E.add(c))


def kernel(cols: list) -> list:
    """Basis of the kernel of the map whose ``i``-th column is ``cols[i]``,
    as bitsets over the source."""
    E = Echelon()
    out = []
    for i, c in enumerate(cols):
        v, tag = E.reduce(c, 1 << i)
        if v:
            E.rows[v.bit_length() - 1] = (v, tag)
        else:
            out.append(tag)
    return out


def bits(v: int):
    i = 0
    while v:
        if v & 1:
            yield i
        v >>= 1
        i += 1


def matmul(A: list, B: list) -> list:
    """Product of matrices given as lists of column bitsets: ``A`` after ``B``."""
    out = []
    for col in B:
        acc = 0
        for i in bits(col):
            acc ^= A[i]
        out.append(acc)
    return out
