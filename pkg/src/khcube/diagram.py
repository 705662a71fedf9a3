"""Planar link diagrams, their complete resolutions, and saddle data.

Crossings use the usual PD convention: ``X[a,b,c,d]`` lists the four arcs
meeting at a crossing counterclockwise, starting from the incoming
under-strand.  The under-strand therefore runs ``a -> c`` and the
over-strand joins ``b`` and ``d``.  A crossing is negative when the
over-strand runs ``b -> d`` and positive when it runs ``d -> b``.

At a crossing the 0-resolution joins slots ``(a,b)`` and ``(c,d)``; the
1-resolution joins ``(a,d)`` and ``(b,c)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import (
    ArcNotFound,
    EmptyWordWithoutStrandCount,
    GeneratorOutOfRange,
    InconsistentArcs,
    LengthMismatch,
    MalformedSyntax,
    NotAnEdge,
    OrientationConflict,
)

Vertex = tuple  # tuple of 0/1 of length n

# slot pairs joined by each resolution, and the local-strand id of a slot
_PARTNER = (
    (1, 0, 3, 2),  # 0-resolution: (a,b), (c,d)
    (3, 2, 1, 0),  # 1-resolution: (a,d), (b,c)
)
_STRAND = (
    (0, 0, 1, 1),
    (0, 1, 1, 0),
)


@dataclass(frozen=True)
class LinkDiagram:
    """An oriented planar link diagram.

    ``crossings`` holds PD 4-tuples; ``loops`` holds the labels of
    crossingless unknotted components.  Signs and orientation data are
    derived on construction and invalid input raises.
    """

    crossings: tuple = ()
    loops: tuple = ()
    signs: tuple = field(init=False, repr=False, compare=False)
    n_components: int = field(init=False, repr=False, compare=False)
    # arc -> (tail position, head position); position = (crossing, slot)
    _ends: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        crossings = tuple(tuple(int(a) for a in x) for x in self.crossings)
        loops = tuple(int(a) for a in self.loops)
        object.__setattr__(self, "crossings", crossings)
        object.__setattr__(self, "loops", loops)
        signs, ends, ncomp = _orient(crossings, loops)
        object.__setattr__(self, "signs", signs)
        object.__setattr__(self, "_ends", ends)
        object.__setattr__(self, "n_components", ncomp + len(loops))

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def n_plus(self) -> int:
        return sum(1 for s in self.signs if s > 0)

    @property
    def n_minus(self) -> int:
        return sum(1 for s in self.signs if s < 0)

    @property
    def writhe(self) -> int:
        return sum(self.signs)

    @property
    def arcs(self) -> tuple:
        return tuple(sorted(set(self._ends) | set(self.loops)))

    def head(self, arc):
        """Position ``(crossing, slot)`` where ``arc`` enters a crossing."""
        return self._ends[arc][1]

    def tail(self, arc):
        return self._ends[arc][0]

    def label(self, position) -> int:
        c, s = position
        return self.crossings[c][s]

    def __str__(self):
        parts = ["X[%d,%d,%d,%d]" % x for x in self.crossings]
        parts += ["U"] * len(self.loops)
        return " ".join(parts)


def _orient(crossings, loops):
    positions: dict[int, list] = {}
    for c, x in enumerate(crossings):
        if len(x) != 4:
            raise MalformedSyntax(f"crossing {c} does not have four arcs: {x}")
        for s, a in enumerate(x):
            if a <= 0:
                raise MalformedSyntax(f"arc labels must be positive, got {a}")
            positions.setdefault(a, []).append((c, s))
    for a, ps in positions.items():
        if len(ps) != 2:
            raise InconsistentArcs(f"arc {a} appears {len(ps)} times; every arc must appear exactly twice")
    seen = set()
    for a in loops:
        if a in positions or a in seen:
            raise InconsistentArcs(f"loop label {a} is already in use")
        seen.add(a)

    def other(a, pos):
        p, q = positions[a]
        return q if p == pos else p

    ends = {}
    over_in = [None] * len(crossings)
    visited = set()
    ncomp = 0
    for c in range(len(crossings)):
        for s in range(4):
            if (c, s) in visited:
                continue
            ncomp += 1
            # walk the component, entering crossings at `pos`
            entering = []
            pos = (c, s)
            while True:
                entering.append(pos)
                out = (pos[0], (pos[1] + 2) % 4)
                visited.add(pos)
                visited.add(out)
                pos = other(crossings[out[0]][out[1]], out)
                if pos == (c, s):
                    break
            forward = any(p[1] == 0 for p in entering)
            backward = any(p[1] == 2 for p in entering)
            if forward and backward:
                raise OrientationConflict(
                    f"component through crossing {c} has under-strands pointing both ways"
                )
            if backward:
                entering = [(p[0], (p[1] + 2) % 4) for p in entering]
            for p in entering:
                a = crossings[p[0]][p[1]]
                ends[a] = (other(a, p), p)
                if p[1] in (1, 3):
                    over_in[p[0]] = p[1]
    signs = tuple(-1 if s == 1 else 1 for s in over_in)
    return signs, ends, ncomp


# -- parsing ---------------------------------------------------------------

_TUPLE = re.compile(r"X?\s*[\[(]\s*([^\[\]()]*?)\s*[\])]")
_UNKNOT = re.compile(r"\bU\b")


def parse_pd(text: str) -> LinkDiagram:
    """Parse PD-code text.

    Accepts ``X[a,b,c,d]``, ``[a,b,c,d]`` or ``(a,b,c,d)`` tuples separated
    by whitespace or commas, optionally wrapped in ``PD[...]`` or an outer
    list, and the token ``U`` for a crossingless unknot component.
    Lines starting with ``#`` are comments.
    """
    body = "\n".join(line for line in text.splitlines() if not line.lstrip().startswith("#"))
    body = body.strip()
    if body.startswith("PD"):
        body = body[2:]
    crossings = []
    for m in _TUPLE.finditer(body):
        fields = [f.strip() for f in m.group(1).split(",")]
        if len(fields) != 4 or not all(f.isdigit() for f in fields):
            raise MalformedSyntax(f"cannot parse crossing {m.group(0)!r}")
        crossings.append(tuple(int(f) for f in fields))
    rest = _TUPLE.sub(" ", body)
    n_loops = len(_UNKNOT.findall(rest))
    rest = _UNKNOT.sub(" ", rest)
    leftover = re.sub(r"[\s,\[\]()]", "", rest)
    if leftover:
        raise MalformedSyntax(f"unparseable token(s): {leftover[:40]!r}")
    if not crossings and not n_loops:
        raise MalformedSyntax("empty diagram")
    start = max((a for x in crossings for a in x), default=0) + 1
    return LinkDiagram(tuple(crossings), tuple(range(start, start + n_loops)))


def parse_braid(word, strands: int | None = None) -> LinkDiagram:
    """Diagram of the closure of a braid word.

    ``word`` is a sequence of nonzero integers (or a string of them);
    ``i`` stands for the generator crossing strands ``i`` and ``i+1``.
    A positive generator produces a negative crossing, so that the
    closure of ``1 1 1`` is the trefoil ``X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]``.
    """
    if isinstance(word, str):
        try:
            word = [int(t) for t in re.split(r"[\s,]+", word.strip()) if t]
        except ValueError as exc:
            raise MalformedSyntax(f"bad braid word: {exc}") from None
    word = [int(g) for g in word]
    if strands is None:
        if not word:
            raise EmptyWordWithoutStrandCount("empty braid word needs an explicit strand count")
        strands = max(abs(g) for g in word) + 1
    for g in word:
        if g == 0 or abs(g) >= strands:
            raise GeneratorOutOfRange(f"generator {g} out of range for {strands} strands")

    cur = list(range(1, strands + 1))
    nxt = strands + 1
    raw = []
    for g in word:
        p = abs(g) - 1
        left_in, right_in = cur[p], cur[p + 1]
        top_left, top_right = nxt, nxt + 1
        nxt += 2
        if g > 0:
            raw.append((left_in, right_in, top_right, top_left))
        else:
            raw.append((right_in, top_right, top_left, left_in))
        cur[p], cur[p + 1] = top_left, top_right

    # close up: the top of position p is glued to the bottom of position p
    glue = {cur[p]: p + 1 for p in range(strands) if cur[p] != p + 1}
    raw = [tuple(glue.get(a, a) for a in x) for x in raw]
    loops = [p + 1 for p in range(strands) if cur[p] == p + 1]
    used = sorted({a for x in raw for a in x})
    relabel = {a: i + 1 for i, a in enumerate(used)}
    crossings = tuple(tuple(relabel[a] for a in x) for x in raw)
    start = len(used) + 1
    return LinkDiagram(crossings, tuple(range(start, start + len(loops))))


# -- diagram operations ----------------------------------------------------

def mirror(d: LinkDiagram) -> LinkDiagram:
    """Change every crossing; the new under-strand is the old over-strand."""
    out = []
    for x, s in zip(d.crossings, d.signs):
        a, b, c, e = x
        out.append((b, c, e, a) if s < 0 else (e, a, b, c))
    return LinkDiagram(tuple(out), d.loops)


def _shift(d: LinkDiagram, offset: int) -> LinkDiagram:
    return LinkDiagram(
        tuple(tuple(a + offset for a in x) for x in d.crossings),
        tuple(a + offset for a in d.loops),
    )


def disjoint_union(d1: LinkDiagram, d2: LinkDiagram) -> LinkDiagram:
    offset = max(d1.arcs, default=0)
    d2 = _shift(d2, offset)
    return LinkDiagram(d1.crossings + d2.crossings, d1.loops + d2.loops)


def connected_sum(d1: LinkDiagram, d2: LinkDiagram, arcs) -> LinkDiagram:
    """Splice ``d1`` and ``d2`` along the chosen arcs ``(a1, a2)``.

    The arc ``a1`` of ``d1`` is cut and its ends are joined to the ends
    of ``a2`` in ``d2`` so that orientations agree.
    """
    a1, a2 = arcs
    if a1 not in d1.arcs:
        raise ArcNotFound(f"arc {a1} not in first diagram")
    if a2 not in d2.arcs:
        raise ArcNotFound(f"arc {a2} not in second diagram")
    offset = max(d1.arcs, default=0)
    d2s = _shift(d2, offset)
    a2 += offset
    if a1 in d1.loops:
        loops = tuple(a for a in d1.loops if a != a1)
        return LinkDiagram(d1.crossings + d2s.crossings, loops + d2s.loops)
    if a2 in d2s.loops:
        loops = tuple(a for a in d2s.loops if a != a2)
        return LinkDiagram(d1.crossings + d2s.crossings, d1.loops + loops)

    n1 = len(d1.crossings)
    crossings = [list(x) for x in d1.crossings] + [list(x) for x in d2s.crossings]
    (tc, ts), (hc, hs) = d1.tail(a1), d1.head(a1)
    (tc2, ts2), (hc2, hs2) = d2s.tail(a2), d2s.head(a2)
    crossings[tc][ts] = a1
    crossings[n1 + hc2][hs2] = a1
    crossings[n1 + tc2][ts2] = a2
    crossings[hc][hs] = a2
    return LinkDiagram(tuple(tuple(x) for x in crossings), d1.loops + d2s.loops)


# -- resolutions -----------------------------------------------------------

class Mark(NamedTuple):
    """A marked point: where the resolution site of a crossing meets a circle.

    ``strand`` is 0 for the local strand through slot ``a`` and 1 for the
    other one; ``side`` is +1 when the surgery arc lies to the left of
    the circle's traversal direction and -1 when it lies to the right.
    """

    crossing: int
    strand: int
    side: int


@dataclass(frozen=True)
class Circle:
    """A circle of a resolution as a cyclic sequence of arcs.

    ``marks[i]`` is the junction reached right after ``arcs[i]``.  A
    crossingless loop has one arc and no marks.
    """

    arcs: tuple
    marks: tuple = ()

    def reversed(self) -> "Circle":
        if not self.marks:
            return self
        n = len(self.arcs)
        arcs = tuple(self.arcs[(-i) % n] for i in range(n))
        marks = tuple(
            Mark(m.crossing, m.strand, -m.side)
            for m in (self.marks[(-i - 1) % n] for i in range(n))
        )
        return Circle(arcs, marks)


@dataclass(frozen=True)
class Resolution:
    vertex: tuple
    circles: tuple
    arc_circle: dict = field(repr=False, compare=False)
    strand_circle: dict = field(repr=False, compare=False)

    def __len__(self):
        return len(self.circles)

    def circle_of_arc(self, arc) -> int:
        return self.arc_circle[arc]


def _check_vertex(d: LinkDiagram, v) -> tuple:
    v = tuple(int(x) for x in v)
    if len(v) != d.n_crossings:
        raise LengthMismatch(f"vertex of length {len(v)} for a diagram with {d.n_crossings} crossings")
    if any(x not in (0, 1) for x in v):
        raise ValueError(f"vertex entries must be 0 or 1: {v}")
    return v


def resolve(d: LinkDiagram, v) -> Resolution:
    """The complete resolution of ``d`` at cube vertex ``v``.

    Circles are ordered by their minimal arc label, and each circle is
    traversed starting from that arc along the link orientation.
    """
    v = _check_vertex(d, v)
    X = d.crossings
    pos_of = {}
    for c, x in enumerate(X):
        for s, a in enumerate(x):
            pos_of.setdefault(a, []).append((c, s))

    circles = []
    arc_circle = {}
    strand_circle = {}
    for start in sorted(set(pos_of) | set(d.loops)):
        if start in arc_circle:
            continue
        idx = len(circles)
        if start in d.loops:
            arc_circle[start] = idx
            circles.append(Circle((start,)))
            continue
        arcs, marks = [], []
        arc, pos = start, d.head(start)
        while True:
            c, s = pos
            r = v[c]
            s2 = _PARTNER[r][s]
            side = 1 if s2 == (s + 1) % 4 else -1
            strand = _STRAND[r][s]
            arcs.append(arc)
            marks.append(Mark(c, strand, side))
            arc_circle[arc] = idx
            strand_circle[(c, strand)] = idx
            arc = X[c][s2]
            p, q = pos_of[arc]
            pos = q if p == (c, s2) else p
            if arc == start:
                break
        circles.append(Circle(tuple(arcs), tuple(marks)))
    return Resolution(v, tuple(circles), arc_circle, strand_circle)


@dataclass(frozen=True)
class SaddleDescriptor:
    """The elementary saddle along a cube edge ``u -> v`` at ``crossing``.

    ``source_circles`` index circles of the resolution at ``u`` and
    ``target_circles`` those at ``v``; ``correspondence`` matches every
    other circle of ``u`` with its (identical) circle at ``v``.
    """

    crossing: int
    kind: str
    source_circles: tuple
    target_circles: tuple
    correspondence: tuple


def saddle(res_u: Resolution, res_v: Resolution, k: int) -> SaddleDescriptor:
    """Saddle between two resolutions differing only at crossing ``k``."""
    s0 = res_u.strand_circle[(k, 0)]
    s1 = res_u.strand_circle[(k, 1)]
    t0 = res_v.strand_circle[(k, 0)]
    t1 = res_v.strand_circle[(k, 1)]
    source = tuple(sorted({s0, s1}))
    target = tuple(sorted({t0, t1}))
    if len(source) == 2 and len(target) == 1:
        kind = "merge"
    elif len(source) == 1 and len(target) == 2:
        kind = "split"
    else:
        raise AssertionError(f"saddle at crossing {k} changes {len(source)} circles into {len(target)}")
    corr = []
    for i, circ in enumerate(res_u.circles):
        if i in source:
            continue
        corr.append((i, res_v.arc_circle[circ.arcs[0]]))
    return SaddleDescriptor(k, kind, source, target, tuple(corr))


def edge_direction(u, v) -> int:
    """Index ``k`` with ``u - v`` the ``k``-th unit vector, else NotAnEdge."""
    if len(u) != len(v):
        raise LengthMismatch(f"vertices of lengths {len(u)} and {len(v)}")
    diff = [a - b for a, b in zip(u, v)]
    if any(x not in (0, 1) for x in diff) or sum(diff) != 1:
        raise NotAnEdge(f"{tuple(u)} -> {tuple(v)} is not a cube edge")
    return diff.index(1)


def edge_saddle(d: LinkDiagram, u, v) -> SaddleDescriptor:
    u = _check_vertex(d, u)
    v = _check_vertex(d, v)
    k = edge_direction(u, v)
    return saddle(resolve(d, u), resolve(d, v), k)


def circle_count(d: LinkDiagram, v) -> int:
    return len(resolve(d, v).circles)
