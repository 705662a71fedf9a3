"""Linear and cubical diagrams of free abelian groups, and totalization.

A linear diagram of length ``n+1`` is a chain complex
``Z<F(n)> -> ... -> Z<F(0)>`` with a preferred basis.  A cubical diagram
assigns a generator set to every vertex of ``{0,1}^n`` and a matrix to
every edge ``u -> v`` (``u > v``).  ``beta`` flattens a cube into a
linear diagram using the edge sign ``(-1)^(u_1 + ... + u_{k-1})``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product

from .diagram import edge_direction
from .errors import NonCommutingSquare, NotAComplex
from .matrices import IntMatrix


def vertices(n: int) -> list:
    """All vertices of ``{0,1}^n`` in lexicographic order."""
    return list(product((0, 1), repeat=n))


def weight(v) -> int:
    return sum(v)


def cube_edges(n: int):
    """Pairs ``(u, v)`` with ``u - v`` a unit vector, with the flipped index."""
    for u in vertices(n):
        for k in range(n):
            if u[k]:
                yield u, u[:k] + (0,) + u[k + 1:], k


def cube_squares(n: int):
    """Two-dimensional faces as ``(u, w, k, l)`` with ``k < l`` flipped."""
    for u in vertices(n):
        ones = [i for i in range(n) if u[i]]
        for k, l in combinations(ones, 2):
            w = list(u)
            w[k] = w[l] = 0
            yield u, tuple(w), k, l


def cube_faces3(n: int):
    """Three-dimensional faces as ``(u, (a, b, c))`` with ``a < b < c``."""
    for u in vertices(n):
        ones = [i for i in range(n) if u[i]]
        for abc in combinations(ones, 3):
            yield u, abc


def flip(v, *ks) -> tuple:
    v = list(v)
    for k in ks:
        v[k] = 1 - v[k]
    return tuple(v)


def edge_sign(u, v) -> int:
    """``(-1)^(u_1 + ... + u_{k-1})`` for the edge ``u -> v = u - e_k``."""
    k = edge_direction(u, v)
    return -1 if sum(u[:k]) % 2 else 1


@dataclass(frozen=True)
class LinearDiagram:
    """``sets[i]`` generates degree ``i``; ``maps[i]`` goes ``F(i+1) -> F(i)``."""

    sets: tuple
    maps: tuple

    def __post_init__(self):
        sets = tuple(tuple(s) for s in self.sets)
        maps = tuple(self.maps)
        object.__setattr__(self, "sets", sets)
        object.__setattr__(self, "maps", maps)
        if len(maps) != max(len(sets) - 1, 0):
            raise ValueError(f"{len(sets)} generator sets need {max(len(sets) - 1, 0)} maps, got {len(maps)}")
        for i, m in enumerate(maps):
            if set(m.source) != set(sets[i + 1]) or set(m.target) != set(sets[i]):
                raise ValueError(f"map {i + 1} -> {i} has the wrong shape")
        for i in range(len(maps) - 1):
            if not (maps[i] @ maps[i + 1]).is_zero():
                raise NotAComplex(f"composite {i + 2} -> {i} is not zero")

    @property
    def length(self) -> int:
        return len(self.sets)


@dataclass(frozen=True)
class CubeDiagram:
    """A functor from the cube ``{0,1}^dim`` to free abelian groups.

    Only edge maps are stored; an edge absent from ``edges`` is zero.
    """

    dim: int
    vertex_sets: dict
    edges: dict = field(default_factory=dict)

    def generators(self, v) -> tuple:
        return self.vertex_sets.get(v, ())

    def edge(self, u, v) -> IntMatrix:
        m = self.edges.get((u, v))
        if m is None:
            return IntMatrix.zero(self.generators(u), self.generators(v))
        return m

    def noncommuting_square(self):
        """First square ``(u, w, k, l)`` whose two composites differ, or None."""
        for u, w, k, l in cube_squares(self.dim):
            va, vb = flip(u, k), flip(u, l)
            if self.edge(va, w) @ self.edge(u, va) != self.edge(vb, w) @ self.edge(u, vb):
                return u, w, k, l
        return None


def alpha(F: LinearDiagram) -> CubeDiagram:
    """View a linear diagram as a cube supported on the diagonal chain
    ``(0,...,0,1,...,1)``; every other vertex is empty."""
    n = F.length - 1
    diag = [(0,) * (n - i) + (1,) * i for i in range(n + 1)]
    vsets = {v: () for v in vertices(n)}
    for i, v in enumerate(diag):
        vsets[v] = F.sets[i]
    edges = {(diag[i + 1], diag[i]): F.maps[i] for i in range(n)}
    return CubeDiagram(n, vsets, edges)


def beta(G: CubeDiagram, check: bool = True) -> LinearDiagram:
    """Flatten a cube: ``F(i)`` is the disjoint union of ``G(v)``, ``|v| = i``."""
    if check:
        face = G.noncommuting_square()
        if face is not None:
            raise NonCommutingSquare(f"square {face[0]} -> {face[1]} does not commute", face)
    n = G.dim
    by_weight = [[] for _ in range(n + 1)]
    for v in vertices(n):
        by_weight[sum(v)].append(v)
    sets = []
    seen = set()
    for vs in by_weight:
        gens = tuple(g for v in vs for g in G.generators(v))
        if seen.intersection(gens) or len(set(gens)) != len(gens):
            raise ValueError("generator sets of distinct vertices must be disjoint")
        seen.update(gens)
        sets.append(gens)
    maps = []
    for i in range(n):
        entries = {}
        for u, v, k in cube_edges(n):
            if sum(u) != i + 1:
                continue
            sign = -1 if sum(u[:k]) % 2 else 1
            for key, x in G.edge(u, v).entries.items():
                entries[key] = sign * x
        maps.append(IntMatrix(sets[i + 1], sets[i], entries))
    return LinearDiagram(tuple(sets), tuple(maps))


@dataclass(frozen=True)
class ChainComplex:
    """Chain complex with ``C_i`` free on ``bases[i]`` and
    ``boundaries[i]: C_{i+1} -> C_i``."""

    bases: tuple
    boundaries: tuple

    def boundary(self, i: int) -> IntMatrix:
        """The differential out of degree ``i``."""
        if 1 <= i <= len(self.boundaries):
            return self.boundaries[i - 1]
        src = self.bases[i] if 0 <= i < len(self.bases) else ()
        tgt = self.bases[i - 1] if 0 <= i - 1 < len(self.bases) else ()
        return IntMatrix.zero(src, tgt)

    def squares_to_zero(self) -> bool:
        return all((self.boundaries[i] @ self.boundaries[i + 1]).is_zero()
                   for i in range(len(self.boundaries) - 1))


def ch(F: LinearDiagram) -> ChainComplex:
    return ChainComplex(F.sets, F.maps)


def totalize(G: CubeDiagram, check: bool = True) -> ChainComplex:
    return ch(beta(G, check=check))
