"""The Burnside category: matrices of finite sets and their bijections.

A 1-morphism ``S -> T`` is a ``T x S`` matrix of finite sets; composition
is matrix multiplication with disjoint union and cartesian product in
place of ``+`` and ``*``.  Elements of a composite entry are tagged
``(y, b, a)`` with ``y`` the intermediate generator, ``b`` the element of
the second factor and ``a`` that of the first, so that provenance can be
read back off a composite.
"""

from __future__ import annotations

from collections import ChainMap, defaultdict
from dataclasses import dataclass, field
from functools import cached_property

from .cube import CubeDiagram, cube_faces3, cube_squares, flip
from .errors import MissingFaceData, ShapeMismatch
from .matrices import IntMatrix

PT = "pt"


@dataclass(frozen=True)
class SetMatrix:
    """``entries[(t, s)]`` is the tuple of (distinct, hashable) elements of
    the finite set ``A_{t,s}``; empty entries are omitted."""

    source: tuple
    target: tuple
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "source", tuple(self.source))
        object.__setattr__(self, "target", tuple(self.target))
        entries = {}
        for key, elems in self.entries.items():
            elems = tuple(elems)
            if not elems:
                continue
            if len(set(elems)) != len(elems):
                raise ValueError(f"entry {key} repeats an element")
            entries[key] = elems
        object.__setattr__(self, "entries", entries)

    @classmethod
    def identity(cls, gens) -> "SetMatrix":
        return cls(gens, gens, {(g, g): (PT,) for g in gens})

    @classmethod
    def zero(cls, source, target) -> "SetMatrix":
        return cls(source, target, {})

    def entry(self, t, s) -> tuple:
        return self.entries.get((t, s), ())

    @cached_property
    def columns(self) -> dict:
        """``s -> [(t, elements), ...]``."""
        cols = defaultdict(list)
        for (t, s), elems in self.entries.items():
            cols[s].append((t, elems))
        return dict(cols)

    def __len__(self):
        return sum(len(e) for e in self.entries.values())


def compose(B: SetMatrix, A: SetMatrix) -> SetMatrix:
    """The composite ``B o A``: entry ``(z, x)`` is the disjoint union over
    ``y`` of ``B_{z,y} x A_{y,x}``, tagged ``(y, b, a)``."""
    if set(B.source) != set(A.target):
        raise ShapeMismatch("source of B differs from target of A")
    bcols = B.columns
    out = defaultdict(list)
    for (y, x), aelems in A.entries.items():
        for z, belems in bcols.get(y, ()):
            bucket = out[(z, x)]
            for b in belems:
                for a in aelems:
                    bucket.append((y, b, a))
    return SetMatrix(A.source, B.target, out)


def abelianize(obj):
    """Replace every set by its cardinality.

    Works on a :class:`SetMatrix` (giving an :class:`IntMatrix`) and on a
    :class:`BurnsideCube` (giving a :class:`CubeDiagram`).
    """
    if isinstance(obj, BurnsideCube):
        return CubeDiagram(
            obj.dim,
            dict(obj.vertex_sets),
            {key: abelianize(m) for key, m in obj.edges.items()},
        )
    return IntMatrix(obj.source, obj.target, {k: len(e) for k, e in obj.entries.items()})


@dataclass(frozen=True)
class TwoIso:
    """Entrywise bijections ``source => target`` between same-shape matrices."""

    source: SetMatrix
    target: SetMatrix
    bijections: dict

    def __post_init__(self):
        src, tgt = self.source, self.target
        if set(src.source) != set(tgt.source) or set(src.target) != set(tgt.target):
            raise ShapeMismatch("2-morphism between matrices of different shapes")
        if set(src.entries) != set(tgt.entries) or set(self.bijections) != set(src.entries):
            raise ValueError("2-morphism entries do not match")
        for key, bij in self.bijections.items():
            values = set(bij.values())
            if set(bij) != set(src.entries[key]) or values != set(tgt.entries[key]) or len(values) != len(bij):
                raise ValueError(f"entry {key} is not a bijection")

    def __call__(self, key, elem):
        return self.bijections[key][elem]

    @cached_property
    def inverse(self) -> "TwoIso":
        return TwoIso(self.target, self.source,
                      {k: {b: a for a, b in bij.items()} for k, bij in self.bijections.items()})

    def then(self, other: "TwoIso") -> "TwoIso":
        """Vertical composite: first ``self``, then ``other``."""
        return TwoIso(self.source, other.target,
                      {k: {a: other.bijections[k][b] for a, b in bij.items()}
                       for k, bij in self.bijections.items()})


def canonical_iso(source: SetMatrix, target: SetMatrix) -> TwoIso:
    """The unique 2-morphism when every entry has at most one element."""
    bij = {}
    for key, elems in source.entries.items():
        other = target.entry(*key)
        if len(elems) != 1 or len(other) != 1:
            raise ValueError(f"entry {key} has {len(elems)} and {len(other)} elements")
        bij[key] = {elems[0]: other[0]}
    return TwoIso(source, target, bij)


@dataclass(frozen=True)
class BurnsideCube:
    """A strictly unital lax functor from the cube ``{0,1}^dim`` to the
    Burnside category, presented by its 2-dimensional data.

    ``squares[(u, w)]`` is the 2-isomorphism for the face ``u > w``
    flipping coordinates ``k < l``; it maps the composite through
    ``u - e_l`` to the composite through ``u - e_k``.  Longer composites
    are taken along the path that flips coordinates in increasing order.
    """

    dim: int
    vertex_sets: dict
    edges: dict
    squares: dict

    def generators(self, v) -> tuple:
        return self.vertex_sets.get(v, ())

    def edge(self, u, v) -> SetMatrix:
        m = self.edges.get((u, v))
        if m is None:
            return SetMatrix.zero(self.generators(u), self.generators(v))
        return m

    def route(self, u, path) -> SetMatrix:
        """Composite of edge matrices flipping the coordinates in ``path``."""
        result = SetMatrix.identity(self.generators(u))
        cur = u
        for k in path:
            nxt = flip(cur, k)
            step = self.edge(cur, nxt)
            result = step if cur == u else compose(step, result)
            cur = nxt
        return result

    def composite(self, u, w) -> SetMatrix:
        path = [k for k in range(self.dim) if u[k] and not w[k]]
        return self.route(u, path)


@dataclass
class CoherenceReport:
    ok: bool
    faces_checked: int = 0
    squares_checked: int = 0
    failure: dict | None = None

    def __bool__(self):
        return self.ok


def _check_square(C: BurnsideCube, u, w, k, l):
    iso = C.squares.get((u, w))
    if iso is None:
        raise MissingFaceData(f"no 2-isomorphism for square {u} -> {w}")
    via_b = C.route(u, (l, k))
    via_a = C.route(u, (k, l))
    if iso.source.entries != via_b.entries or iso.target.entries != via_a.entries:
        return {"square": (u, w), "reason": "2-isomorphism does not match the edge composites"}
    return None


def verify_coherence(C: BurnsideCube, check_squares: bool = True, faces=None) -> CoherenceReport:
    """Check the associativity condition on every 3-dimensional face.

    For a face with top ``u`` and flipped coordinates ``a < b < c`` the six
    paths ``abc, bac, bca, cba, cab, acb`` form a hexagon whose sides are
    square 2-isomorphisms whiskered by an edge.  Going once around must
    fix every element of the triple composite.  ``faces`` restricts the
    hexagon check to the given ``(u, (a, b, c))`` pairs.
    """
    squares = 0
    if check_squares:
        for u, w, k, l in cube_squares(C.dim):
            bad = _check_square(C, u, w, k, l)
            squares += 1
            if bad is not None:
                return CoherenceReport(False, 0, squares, bad)
    checked = 0
    for u, coords in (cube_faces3(C.dim) if faces is None else faces):
        checked += 1
        bad = _hexagon(C, u, coords)
        if bad is not None:
            return CoherenceReport(False, checked, squares, bad)
    return CoherenceReport(True, checked, squares, None)


def faces_containing(square, k: int, l: int) -> list:
    """The 3-faces ``(top, coords)`` having the square ``u > w`` (flipping
    ``k < l``) as a 2-face."""
    u, w = square
    out = []
    for m in range(len(u)):
        if m in (k, l):
            continue
        top = u if u[m] else flip(u, m)
        out.append((top, tuple(sorted((k, l, m)))))
    return out


def _swap(isos, u, state, coords, pos):
    x, e1, g1, e2, g2, e3, g3 = state
    if pos == 0:
        top, p, q = u, coords[0], coords[1]
        key, elem = (g2, x), (g1, e2, e1)
    else:
        top, p, q = flip(u, coords[0]), coords[1], coords[2]
        key, elem = (g3, g1), (g2, e3, e2)
    y, b, a = isos(top, p, q)[key][elem]
    coords = list(coords)
    coords[pos], coords[pos + 1] = coords[pos + 1], coords[pos]
    if pos == 0:
        return (x, a, y, b, g2, e3, g3), tuple(coords)
    return (x, e1, g1, a, y, b, g3), tuple(coords)


def _face_isos(C):
    cache = {}

    def isos(top, p, q):
        key = (top, p, q)
        bij = cache.get(key)
        if bij is None:
            bottom = flip(top, p, q)
            iso = C.squares.get((top, bottom))
            if iso is None:
                raise MissingFaceData(f"no 2-isomorphism for square {top} -> {bottom}")
            # p < q: the current route goes through top - e_p, the target of the stored iso
            bij = cache[key] = (iso.inverse if p < q else iso).bijections
        return bij

    return isos


def _hexagon(C, u, coords):
    a, b, c = coords
    u1 = flip(u, a)
    u2 = flip(u1, b)
    u3 = flip(u2, c)
    m1, m2, m3 = C.edge(u, u1).columns, C.edge(u1, u2).columns, C.edge(u2, u3).columns
    isos = _face_isos(C)
    for x in C.generators(u):
        for g1, es1 in m1.get(x, ()):
            for g2, es2 in m2.get(g1, ()):
                for g3, es3 in m3.get(g2, ()):
                    for e1 in es1:
                        for e2 in es2:
                            for e3 in es3:
                                start = (x, e1, g1, e2, g2, e3, g3)
                                state, cs = start, coords
                                for pos in (0, 1, 0, 1, 0, 1):
                                    state, cs = _swap(isos, u, state, cs, pos)
                                if state != start:
                                    return {"face": (u, coords), "source": x,
                                            "element": start, "image": state}
    return None


def transpose_entry(C: BurnsideCube, square, key) -> BurnsideCube:
    """Copy of ``C`` with the bijection of one two-element square entry swapped."""
    iso = C.squares[square]
    bij = iso.bijections[key]
    if len(bij) != 2:
        raise ValueError(f"entry {key} of square {square} has {len(bij)} elements")
    (a1, b1), (a2, b2) = bij.items()
    bijections = dict(iso.bijections)
    bijections[key] = {a1: b2, a2: b1}
    squares = ChainMap({square: TwoIso(iso.source, iso.target, bijections)}, C.squares)
    return BurnsideCube(C.dim, C.vertex_sets, C.edges, squares)


def flip_square(C: BurnsideCube, square) -> BurnsideCube:
    """Copy of ``C`` with every two-element entry of one square iso swapped."""
    iso = C.squares[square]
    bijections = {}
    for key, bij in iso.bijections.items():
        if len(bij) == 2:
            (a1, b1), (a2, b2) = bij.items()
            bij = {a1: b2, a2: b1}
        bijections[key] = bij
    squares = ChainMap({square: TwoIso(iso.source, iso.target, bijections)}, C.squares)
    return BurnsideCube(C.dim, C.vertex_sets, C.edges, squares)
