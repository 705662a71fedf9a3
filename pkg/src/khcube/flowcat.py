"""Combinatorial cubical flow categories extracted from Burnside cubes.

Zero-dimensional moduli ``M(x, y)`` are the edge entries, each point
carrying the cube sign of its edge.  One-dimensional moduli are
intervals: each element-correspondence of a square 2-isomorphism joins
two composite points ``(y, b, a)`` with ``a`` in ``M(x, y)`` and ``b`` in
``M(y, z)``.  Higher moduli are not materialized; their boundary data is
what 3-face coherence certifies.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property

from .burnside import BurnsideCube, verify_coherence
from .cube import cube_edges, cube_squares, edge_sign, vertices
from .errors import IncoherentInput
from .matrices import IntMatrix


class Point(tuple):
    """A signed point ``(label, sign)`` of a 0-dimensional moduli space."""

    def __new__(cls, label, sign=1):
        return super().__new__(cls, (label, sign))

    @property
    def label(self):
        return self[0]

    @property
    def sign(self) -> int:
        return self[1]


@dataclass
class CubicalFlowCategory:
    """``objects`` maps each object to its grading; ``moduli0[(x, y)]`` is
    a tuple of :class:`Point`; ``moduli1[(x, z)]`` is a list of intervals,
    each a pair of endpoints ``(y, b, a)`` naming point labels."""

    objects: dict
    moduli0: dict = field(default_factory=dict)
    moduli1: dict = field(default_factory=dict)
    grading_shift: int = 0

    def points(self, x, y) -> tuple:
        return self.moduli0.get((x, y), ())

    def composites(self, x, z) -> list:
        """``(y, b, a)`` for every ``y`` and ``(b, a)`` in ``M(y, z) x M(x, y)``."""
        out = []
        for (x2, y), pts in self._out.get(x, {}).items():
            for b in self.points(y, z):
                for a in pts:
                    out.append((y, b.label, a.label))
        return out

    @cached_property
    def _out(self):
        by_source = {}
        for (x, y), pts in self.moduli0.items():
            by_source.setdefault(x, {})[(x, y)] = pts
        return by_source

    @cached_property
    def _signs(self):
        return {(x, y, p.label): p.sign for (x, y), pts in self.moduli0.items() for p in pts}

    def endpoint_sign(self, x, z, endpoint) -> int:
        y, b, a = endpoint
        return self._signs[(x, y, a)] * self._signs[(y, z, b)]


def extract(C: BurnsideCube, check: bool = True, grading_shift: int = 0) -> CubicalFlowCategory:
    """Flow category of a coherent Burnside cube; gradings are ``|v|``."""
    if check:
        report = verify_coherence(C)
        if not report.ok:
            raise IncoherentInput(f"cube is not coherent: {report.failure}")
    objects = {}
    for v in vertices(C.dim):
        for g in C.generators(v):
            objects[g] = sum(v)
    moduli0 = {}
    for u, v, k in cube_edges(C.dim):
        sign = edge_sign(u, v)
        for (t, s), elems in C.edge(u, v).entries.items():
            moduli0[(s, t)] = tuple(Point(e, sign) for e in elems)
    moduli1 = {}
    for u, w, k, l in cube_squares(C.dim):
        iso = C.squares[(u, w)]
        for (z, x), bij in iso.bijections.items():
            for a, b in bij.items():
                moduli1.setdefault((x, z), []).append((a, b))
    return CubicalFlowCategory(objects, moduli0, moduli1, grading_shift)


@dataclass
class ModuliReport:
    ok: bool
    census: bool = True
    signed: bool = True
    parity: bool = True
    intervals_balanced: bool = True
    pairs_checked: int = 0
    failure: dict | None = None

    def __bool__(self):
        return self.ok


def verify_moduli(F: CubicalFlowCategory) -> ModuliReport:
    """Census, signed and parity checks of every 1-dimensional moduli space.

    ``ok`` requires: interval endpoints for each ``(x, z)`` are exactly the
    composite points, each used once; the signed count of composite points
    vanishes for each ``(x, z)``; each boundary has even size.  Whether
    every single interval has endpoints of opposite sign is reported in
    ``intervals_balanced`` without affecting ``ok``.
    """
    composites = {}
    for x, outs in F._out.items():
        for (_, y), pts in outs.items():
            for (_, z), later in F._out.get(y, {}).items():
                bucket = composites.setdefault((x, z), [])
                bucket.extend((y, b.label, a.label) for b in later for a in pts)
    # insertion order keeps the reported first failure reproducible
    pairs = list(composites) + [k for k in F.moduli1 if k not in composites]
    report = ModuliReport(True)
    first = None
    for x, z in pairs:
        report.pairs_checked += 1
        comps = Counter(composites.get((x, z), ()))
        intervals = F.moduli1.get((x, z), [])
        ends = Counter(e for iv in intervals for e in iv)
        if comps != ends:
            report.census = False
            if first is None:
                missing = list((comps - ends).elements())
                extra = list((ends - comps).elements())
                first = {"check": "census", "pair": (x, z), "missing": missing, "extra": extra}
            continue
        if sum(ends.values()) % 2:
            report.parity = False
            if first is None:
                first = {"check": "parity", "pair": (x, z), "size": sum(ends.values())}
        sign = {e: F.endpoint_sign(x, z, e) for e in ends}
        total = sum(sign[e] * c for e, c in ends.items())
        if total:
            report.signed = False
            if first is None:
                first = {"check": "signed", "pair": (x, z), "total": total}
        if report.intervals_balanced:
            report.intervals_balanced = all(len(iv) == 2 and not sum(sign[e] for e in iv) for iv in intervals)
    report.ok = report.census and report.signed and report.parity
    report.failure = first
    return report


def differentials(F: CubicalFlowCategory) -> dict:
    """Signed point counts as matrices ``grading i+1 -> i``, keyed by ``i``."""
    by_grade = {}
    for x, g in F.objects.items():
        by_grade.setdefault(g, []).append(x)
    entries = {}
    for (x, y), pts in F.moduli0.items():
        i = F.objects[y]
        e = entries.setdefault(i, {})
        e[(y, x)] = e.get((y, x), 0) + sum(p.sign for p in pts)
    return {i: IntMatrix(tuple(by_grade.get(i + 1, ())), tuple(by_grade.get(i, ())), e)
            for i, e in entries.items()}


def squares_to_zero(F: CubicalFlowCategory) -> bool:
    """Whether the signed count complex of ``F`` satisfies ``d^2 = 0``."""
    D = differentials(F)
    for i, m in D.items():
        nxt = D.get(i + 1)
        if nxt is not None and not (m @ nxt).is_zero():
            return False
    return True


def _name(obj) -> str:
    return str(obj)


def to_dict(F: CubicalFlowCategory) -> dict:
    """JSON-compatible export; objects are named by ``str``."""
    objects = sorted(((_name(x), g) for x, g in F.objects.items()), key=lambda t: (t[1], t[0]))
    moduli0 = []
    for (x, y), pts in sorted(F.moduli0.items(), key=lambda kv: (_name(kv[0][0]), _name(kv[0][1]))):
        moduli0.append({"source": _name(x), "target": _name(y),
                        "points": [{"label": _name(p.label), "sign": p.sign} for p in pts]})
    moduli1 = []
    for (x, z), ivs in sorted(F.moduli1.items(), key=lambda kv: (_name(kv[0][0]), _name(kv[0][1]))):
        moduli1.append({
            "source": _name(x), "target": _name(z),
            "intervals": [[[_name(e[0]), _name(e[1]), _name(e[2])] for e in iv] for iv in ivs],
        })
    return {
        "metadata": {"grading": "|v| before the homological shift",
                     "homological_shift": -F.grading_shift},
        "objects": [{"id": n, "grading": g} for n, g in objects],
        "moduli0": moduli0,
        "moduli1": moduli1,
    }


def four_object_example() -> CubicalFlowCategory:
    """Objects ``x, y, z, w`` in gradings 3..0 with ``M(x,y) = {a}``,
    ``M(y,z) = {b, c}``, ``M(z,w) = {d}`` and one interval each in
    ``M(x,z)`` and ``M(y,w)``.  Signs make both intervals balanced."""
    objects = {"x": 3, "y": 2, "z": 1, "w": 0}
    moduli0 = {
        ("x", "y"): (Point("a", 1),),
        ("y", "z"): (Point("b", 1), Point("c", -1)),
        ("z", "w"): (Point("d", 1),),
    }
    moduli1 = {
        ("x", "z"): [(("y", "b", "a"), ("y", "c", "a"))],
        ("y", "w"): [(("z", "d", "b"), ("z", "d", "c"))],
    }
    return CubicalFlowCategory(objects, moduli0, moduli1)


def boundary_labels(F: CubicalFlowCategory, x, z) -> set:
    """Endpoints of ``M(x, z)`` written as concatenated labels, e.g. ``"ba"``."""
    return {f"{e[1]}{e[2]}" for iv in F.moduli1.get((x, z), []) for e in iv}
