"""Sparse integer matrices between finite generator sets."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from .errors import ShapeMismatch


@dataclass(frozen=True)
class IntMatrix:
    """A ``target x source`` integer matrix, stored by nonzero entries.

    ``entries`` maps ``(t, s)`` to a nonzero integer, where ``s`` runs over
    ``source`` and ``t`` over ``target``.  A morphism ``Z<S> -> Z<T>``.
    """

    source: tuple
    target: tuple
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "source", tuple(self.source))
        object.__setattr__(self, "target", tuple(self.target))
        object.__setattr__(self, "entries", {k: v for k, v in self.entries.items() if v})

    @classmethod
    def zero(cls, source, target) -> "IntMatrix":
        return cls(source, target, {})

    @classmethod
    def identity(cls, gens) -> "IntMatrix":
        return cls(gens, gens, {(g, g): 1 for g in gens})

    @classmethod
    def from_dense(cls, rows, source=None, target=None) -> "IntMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        source = tuple(range(ncols)) if source is None else tuple(source)
        target = tuple(range(nrows)) if target is None else tuple(target)
        return cls(source, target, {
            (target[i], source[j]): rows[i][j]
            for i in range(nrows) for j in range(ncols) if rows[i][j]
        })

    def __getitem__(self, key) -> int:
        return self.entries.get(key, 0)

    @property
    def shape(self):
        return len(self.target), len(self.source)

    def dense(self) -> list:
        ti = {t: i for i, t in enumerate(self.target)}
        si = {s: j for j, s in enumerate(self.source)}
        rows = [[0] * len(self.source) for _ in self.target]
        for (t, s), x in self.entries.items():
            rows[ti[t]][si[s]] = x
        return rows

    def columns(self) -> dict:
        cols = defaultdict(dict)
        for (t, s), x in self.entries.items():
            cols[s][t] = x
        return cols

    def is_zero(self) -> bool:
        return not self.entries

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.target, self.source, {(s, t): x for (t, s), x in self.entries.items()})

    def scale(self, c: int) -> "IntMatrix":
        return IntMatrix(self.source, self.target, {k: c * x for k, x in self.entries.items()})

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        """``self @ other`` is the composite ``self o other``."""
        if set(self.source) != set(other.target):
            raise ShapeMismatch("inner generator sets differ")
        rows_by_mid = defaultdict(list)
        for (t, m), x in self.entries.items():
            rows_by_mid[m].append((t, x))
        out = defaultdict(int)
        for (m, s), y in other.entries.items():
            for t, x in rows_by_mid.get(m, ()):
                out[(t, s)] += x * y
        return IntMatrix(other.source, self.target, out)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        out = defaultdict(int, self.entries)
        for k, x in other.entries.items():
            out[k] += x
        return IntMatrix(self.source, self.target, out)

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return (set(self.source) == set(other.source)
                and set(self.target) == set(other.target)
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.source, self.target, frozenset(self.entries.items())))
