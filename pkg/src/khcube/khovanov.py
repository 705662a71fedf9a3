"""The Khovanov cube, its Burnside lift, and the bigraded Khovanov complex.

Generators at a vertex ``v`` are labelings of the circles of the
resolution at ``v`` by ``x_+`` or ``x_-``, stored as a bitmask of the
circles labeled ``x_+``.  Edge maps run from the 1-resolution to the
0-resolution and follow the genus-0 and genus-1 matrix rule below.  The
cochain complex is the dual of the totalized cube, shifted by ``n_-``.
"""

from __future__ import annotations

from collections import OrderedDict
from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import NamedTuple

from .burnside import PT, BurnsideCube, SetMatrix, TwoIso, compose
from .cube import CubeDiagram, cube_edges, cube_squares, flip, totalize, vertices
from .diagram import Circle, LinkDiagram, resolve
from .errors import ArcNotFound, CoherenceFailure, NotALadybug
from .matrices import IntMatrix

LADYBUG_RULES = ("right", "left")


class Labeling(NamedTuple):
    """A generator: circle ``c`` of the resolution at ``vertex`` is
    labeled ``x_+`` iff bit ``c`` of ``plus`` is set."""

    vertex: tuple
    plus: int
    n_circles: int

    @property
    def plus_count(self) -> int:
        return bin(self.plus).count("1")

    @property
    def minus_count(self) -> int:
        return self.n_circles - self.plus_count

    @property
    def labels(self) -> str:
        return "".join("+" if self.plus >> c & 1 else "-" for c in range(self.n_circles))

    def quantum_degree(self, n_plus: int, n_minus: int) -> int:
        return self.plus_count - self.minus_count + sum(self.vertex) + n_plus - 2 * n_minus

    def homological_degree(self, n_minus: int) -> int:
        return sum(self.vertex) - n_minus

    def __str__(self):
        return "".join(map(str, self.vertex)) + ":" + self.labels


def tqft_entry(genus: int, x, y) -> int:
    """Matrix entry of a connected cobordism from labels ``x`` to ``y``.

    ``x`` and ``y`` are sequences of ``'+'``/``'-'`` on the source and
    target circles of the component.
    """
    xp = sum(1 for a in x if a == "+")
    ym = sum(1 for b in y if b == "-")
    if genus == 0:
        return 1 if xp + ym == 1 else 0
    if genus == 1:
        return 2 if xp == 0 and ym == 0 else 0
    return 0


class _Resolutions:
    """Per-diagram cache of resolutions, generators and edge images."""

    def __init__(self, d: LinkDiagram, basepoint=None):
        self.d = d
        self.n = d.n_crossings
        self._res = {}
        self._gens = {}
        self._sets = {}

    def res(self, v):
        r = self._res.get(v)
        if r is None:
            r = self._res[v] = resolve(self.d, v)
        return r

    def gens(self, v) -> tuple:
        g = self._gens.get(v)
        if g is None:
            c = len(self.res(v).circles)
            g = self._gens[v] = tuple(Labeling(v, m, c) for m in range(1 << c))
        return g

    def images(self, u, v, k) -> list:
        """``images[x.plus]`` lists the ``plus`` masks of the targets of ``x``."""
        ru, rv = self.res(u), self.res(v)
        s0, s1 = ru.strand_circle[(k, 0)], ru.strand_circle[(k, 1)]
        t0, t1 = rv.strand_circle[(k, 0)], rv.strand_circle[(k, 1)]
        rest = [(i, rv.arc_circle[c.arcs[0]]) for i, c in enumerate(ru.circles) if i not in (s0, s1)]
        out = []
        for m in range(1 << len(ru.circles)):
            base = 0
            for i, j in rest:
                if m >> i & 1:
                    base |= 1 << j
            if s0 != s1:
                # merge
                p = (m >> s0 & 1) + (m >> s1 & 1)
                out.append([base] if p == 0 else [base | 1 << t0] if p == 1 else [])
            elif m >> s0 & 1:
                out.append([base | 1 << t0 | 1 << t1])
            else:
                out.append([base | 1 << t0, base | 1 << t1])
        return out

    def edge_entries(self, u, v, k) -> dict:
        gu, gv = self.gens(u), self.gens(v)
        return {(gv[t], gu[s]): 1 for s, ts in enumerate(self.images(u, v, k)) for t in ts}


def build_khovanov_cube(d: LinkDiagram, _cache: _Resolutions | None = None) -> CubeDiagram:
    """The cube ``V o L`` over the integers; entries are 0 or 1."""
    R = _cache or _Resolutions(d)
    n = d.n_crossings
    vsets = {v: R.gens(v) for v in vertices(n)}
    edges = {}
    for u, v, k in cube_edges(n):
        edges[(u, v)] = IntMatrix(vsets[u], vsets[v], R.edge_entries(u, v, k))
    return CubeDiagram(n, vsets, edges)


# -- ladybug matching ------------------------------------------------------

def ladybug_segments(circle: Circle, k: int, l: int, rule: str = "right") -> tuple:
    """The two witness segments of a ladybug configuration.

    ``circle`` carries the surgery arcs of crossings ``k`` and ``l`` with
    alternating endpoints, so one arc lies on each side.  Each segment is
    the frozenset of diagram arcs between consecutive endpoints.  With
    ``rule="right"`` the segments run, in the orientation putting one
    surgery arc on the left, from an endpoint of the left arc to an
    endpoint of the right arc; ``rule="left"`` takes the other two.
    The result does not depend on the traversal direction of ``circle``.
    """
    if rule not in LADYBUG_RULES:
        raise ValueError(f"unknown ladybug rule {rule!r}")
    idx = [i for i, m in enumerate(circle.marks) if m.crossing in (k, l)]
    seq = [circle.marks[i].crossing for i in idx]
    if len(idx) != 4 or seq[0] == seq[1] or seq[1] == seq[2] or seq[2] == seq[3]:
        raise NotALadybug(f"crossings {k} and {l} do not alternate on this circle")
    side_k = {circle.marks[i].side for i in idx if circle.marks[i].crossing == k}
    if len(side_k) != 1:
        raise AssertionError("surgery arc meets its circle from both sides")
    n = len(circle.arcs)
    from_k, from_l = [], []
    for a, b in zip(idx, idx[1:] + idx[:1]):
        seg = frozenset(circle.arcs[(a + 1 + t) % n] for t in range((b - a) % n))
        (from_k if circle.marks[a].crossing == k else from_l).append(seg)
    right = from_k if side_k.pop() > 0 else from_l
    chosen = right if rule == "right" else (from_l if right is from_k else from_k)
    return tuple(sorted(chosen, key=min))


def ladybug_matching(d: LinkDiagram, u, w, rule: str = "right", _cache=None) -> TwoIso:
    """2-isomorphism of a ladybug square ``u > w``, from the composite
    through ``u - e_l`` to the composite through ``u - e_k`` (``k < l``).

    The ``x_+``-circle of an intermediate labeling on one route is sent
    to the intermediate circle on the other route containing the same
    witness segment.
    """
    R = _cache or _Resolutions(d)
    k, l = [i for i in range(len(u)) if u[i] != w[i]]
    ru = R.res(u)
    c = ru.strand_circle[(k, 0)]
    if not (c == ru.strand_circle[(k, 1)] == ru.strand_circle[(l, 0)] == ru.strand_circle[(l, 1)]):
        raise NotALadybug(f"square {u} -> {w} is not a ladybug")
    segs = ladybug_segments(ru.circles[c], k, l, rule)
    vk, vl = flip(u, k), flip(u, l)
    rk, rl = R.res(vk), R.res(vl)
    bit_k = [1 << rk.arc_circle[min(s)] for s in segs]
    bit_l = [1 << rl.arc_circle[min(s)] for s in segs]
    if bit_k[0] == bit_k[1] or bit_l[0] == bit_l[1]:
        raise NotALadybug(f"square {u} -> {w}: witness segments share a circle")
    src, tgt = _route(R, u, l, k), _route(R, u, k, l)
    bij = {}
    for key, elems in src.entries.items():
        other = tgt.entries.get(key, ())
        if len(elems) != 2 or len(other) != 2:
            raise NotALadybug(f"square {u} -> {w} has an entry of size {len(elems)}")
        m = {}
        for e in elems:
            side = 0 if e[0].plus & bit_l[0] else 1
            (match,) = [f for f in other if f[0].plus & bit_k[side]]
            m[e] = match
        bij[key] = m
    return TwoIso(src, tgt, bij)


def _edge_set_matrix(R, u, v, k) -> SetMatrix:
    m = R._sets.get((u, k))
    if m is None:
        gu, gv = R.gens(u), R.gens(v)
        m = SetMatrix(gu, gv, {(gv[t], gu[s]): (PT,) for s, ts in enumerate(R.images(u, v, k)) for t in ts})
        R._sets[(u, k)] = m
    return m


def _route(R, u, first, second) -> SetMatrix:
    v = flip(u, first)
    w = flip(v, second)
    return compose(_edge_set_matrix(R, v, w, second), _edge_set_matrix(R, u, v, first))


def _is_ladybug(R, u, k, l) -> bool:
    ru = R.res(u)
    s = ru.strand_circle
    if not (s[(k, 0)] == s[(k, 1)] == s[(l, 0)] == s[(l, 1)]):
        return False
    w = flip(u, k, l)
    return len(R.res(w).circles) == len(ru.circles)


def square_iso(R, u, w, rule="right") -> TwoIso:
    k, l = [i for i in range(len(u)) if u[i] != w[i]]
    if _is_ladybug(R, u, k, l):
        return ladybug_matching(R.d, u, w, rule, _cache=R)
    src, tgt = _route(R, u, l, k), _route(R, u, k, l)
    bij = {}
    for key, elems in src.entries.items():
        other = tgt.entries.get(key, ())
        if len(elems) != 1 or len(other) != 1:
            raise CoherenceFailure(f"square {u} -> {w}: entry {key} has sizes {len(elems)}, {len(other)}")
        bij[key] = {elems[0]: other[0]}
    return TwoIso(src, tgt, bij)


class _LazySquares(Mapping):
    """Square 2-isomorphisms computed on access; a cube of dimension 10
    has 11520 of them, too many to keep resident."""

    def __init__(self, R, rule, cache_size=4096):
        self._R = R
        self._rule = rule
        self._cache = OrderedDict()
        self._cache_size = cache_size

    def _valid(self, key):
        u, w = key
        n = self._R.n
        return (len(u) == len(w) == n and all(a >= b for a, b in zip(u, w))
                and sum(u) - sum(w) == 2)

    def __getitem__(self, key):
        if not self._valid(key):
            raise KeyError(key)
        iso = self._cache.get(key)
        if iso is None:
            iso = self._cache[key] = square_iso(self._R, key[0], key[1], self._rule)
            if len(self._cache) > self._cache_size:
                self._cache.popitem(last=False)
        else:
            self._cache.move_to_end(key)
        return iso

    def __contains__(self, key):
        return self._valid(key)

    def __iter__(self):
        for u, w, _, _ in cube_squares(self._R.n):
            yield (u, w)

    def __len__(self):
        return sum(1 for _ in cube_squares(self._R.n))


def build_burnside_cube(d: LinkDiagram, rule: str = "right", _cache=None) -> BurnsideCube:
    """Lift of the Khovanov cube to the Burnside category.

    Edge entries are empty or ``{pt}``.  Square 2-isomorphisms are the
    unique bijection on entries of size one and the ladybug matching on
    entries of size two; they are computed on access.
    """
    if rule not in LADYBUG_RULES:
        raise ValueError(f"unknown ladybug rule {rule!r}")
    R = _cache or _Resolutions(d)
    n = d.n_crossings
    vsets = {v: R.gens(v) for v in vertices(n)}
    edges = {(u, v): _edge_set_matrix(R, u, v, k) for u, v, k in cube_edges(n)}
    return BurnsideCube(n, vsets, edges, _LazySquares(R, rule))


def ladybug_squares(d: LinkDiagram, _cache=None) -> list:
    """All squares ``(u, w, k, l)`` of the cube that are ladybug squares."""
    R = _cache or _Resolutions(d)
    return [(u, w, k, l) for u, w, k, l in cube_squares(d.n_crossings) if _is_ladybug(R, u, k, l)]


# -- the bigraded complex --------------------------------------------------

@dataclass(frozen=True)
class BigradedComplex:
    """Cochain complex split by bidegree ``(i, j)``.

    ``differentials[(i, j)]`` maps ``generators[(i, j)]`` to
    ``generators[(i + 1, j)]``; missing entries are zero.
    """

    generators: dict
    differentials: dict = field(default_factory=dict)

    def gens(self, i, j) -> tuple:
        return self.generators.get((i, j), ())

    def differential(self, i, j) -> IntMatrix:
        m = self.differentials.get((i, j))
        if m is None:
            return IntMatrix.zero(self.gens(i, j), self.gens(i + 1, j))
        return m

    @property
    def quantum_degrees(self) -> list:
        return sorted({j for _, j in self.generators})

    def homological_degrees(self, j=None) -> list:
        return sorted({i for i, jj in self.generators if j is None or jj == j})

    def squares_to_zero(self) -> bool:
        for (i, j), m in self.differentials.items():
            nxt = self.differentials.get((i + 1, j))
            if nxt is not None and not (nxt @ m).is_zero():
                return False
        return True

    def preserves_quantum_degree(self) -> bool:
        """Every stored differential entry joins generators of equal ``j``."""
        for (i, j), m in self.differentials.items():
            src, tgt = set(self.gens(i, j)), set(self.gens(i + 1, j))
            if any(s not in src or t not in tgt for t, s in m.entries):
                return False
        return True

    def size(self) -> int:
        return sum(len(g) for g in self.generators.values())


def _grade(d: LinkDiagram, basis_by_weight, coboundaries, keep=None, qshift=0) -> BigradedComplex:
    npl, nmi = d.n_plus, d.n_minus
    gens = {}
    degree = {}
    for w, basis in enumerate(basis_by_weight):
        for x in basis:
            if keep is not None and not keep(x):
                continue
            ij = (w - nmi, x.quantum_degree(npl, nmi) + qshift)
            gens.setdefault(ij, []).append(x)
            degree[x] = ij
    diffs = {}
    for w, m in enumerate(coboundaries):
        for (t, s), c in m.entries.items():
            ds = degree.get(s)
            if ds is None or t not in degree:
                continue
            if degree[t] != (ds[0] + 1, ds[1]):
                raise AssertionError(f"differential entry {s} -> {t} does not preserve the grading")
            diffs.setdefault(ds, {})[(t, s)] = c
    gens = {ij: tuple(g) for ij, g in gens.items()}
    out = {}
    for (i, j), entries in diffs.items():
        out[(i, j)] = IntMatrix(gens[(i, j)], gens.get((i + 1, j), ()), entries)
    return BigradedComplex(gens, out)


def khovanov_complex(d: LinkDiagram, check: bool = False, _cache=None) -> BigradedComplex:
    """``Dual(Tot(G_Kh))[n_-]`` with the quantum grading attached.

    Homological degree is ``|v| - n_-``; quantum degree is
    ``(#x_+ - #x_-) + |v| + n_+ - 2 n_-``.
    """
    cube = build_khovanov_cube(d, _cache)
    tot = totalize(cube, check=check)
    cob = [tot.boundary(w + 1).transpose() for w in range(len(tot.bases) - 1)]
    return _grade(d, tot.bases, cob)


def based_circle(d: LinkDiagram, basepoint):
    """Raises ArcNotFound unless ``basepoint`` is an arc of ``d``."""
    if basepoint not in d.arcs:
        raise ArcNotFound(f"basepoint arc {basepoint} is not in the diagram")
    return basepoint


def reduced_complex(d: LinkDiagram, basepoint, _cache=None) -> BigradedComplex:
    """Subcomplex where the circle through ``basepoint`` is labeled ``x_-``,
    with quantum degree raised by one."""
    based_circle(d, basepoint)
    R = _cache or _Resolutions(d)
    cube = build_khovanov_cube(d, R)
    tot = totalize(cube, check=False)
    cob = [tot.boundary(w + 1).transpose() for w in range(len(tot.bases) - 1)]

    def keep(x):
        return not x.plus >> R.res(x.vertex).arc_circle[basepoint] & 1

    return _grade(d, tot.bases, cob, keep=keep, qshift=1)
