"""Bigraded homology, Bockstein and graded Euler characteristic."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from ..errors import NotAComplex
from . import gf2
from .polynomial import LaurentPolynomial
from .snf import invariant_factors, rank_mod_p


@dataclass(frozen=True)
class AbelianGroupSummary:
    """``Z^rank`` plus ``Z/t`` for each ``t`` in ``torsion``."""

    rank: int = 0
    torsion: tuple = ()

    def __post_init__(self):
        t = tuple(sorted(int(x) for x in self.torsion))
        if any(x <= 1 for x in t):
            raise ValueError("torsion coefficients must exceed 1")
        if any(b % a for a, b in zip(t, t[1:])):
            raise ValueError(f"invariant factors {t} do not divide successively")
        object.__setattr__(self, "torsion", t)

    def __bool__(self):
        return bool(self.rank or self.torsion)

    def two_torsion(self) -> int:
        """Number of cyclic summands of even order."""
        return sum(1 for t in self.torsion if t % 2 == 0)

    def __str__(self):
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) or "0"


def _check(C):
    if not C.squares_to_zero():
        raise NotAComplex("differential does not square to zero")


def _factors(args):
    M, p = args
    if p:
        return rank_mod_p(M, p)
    return invariant_factors(M)


def bigraded_homology(C, coefficients: int = 0, jobs: int = 1, check: bool = True) -> dict:
    """``{(i, j): group}`` over the integers (``coefficients=0``) as
    :class:`AbelianGroupSummary`, or over ``F_p`` as dimensions.

    Zero groups are omitted.
    """
    if check:
        _check(C)
    p = int(coefficients)
    keys = sorted(k for k, m in C.differentials.items() if m.entries)
    work = [(C.differentials[k], p) for k in keys]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(jobs) as ex:
            results = list(ex.map(_factors, work, chunksize=1))
    else:
        results = [_factors(w) for w in work]
    ranks, torsion = {}, {}
    for k, res in zip(keys, results):
        if p:
            ranks[k] = res
        else:
            ranks[k] = sum(1 for f in res if f)
            torsion[(k[0] + 1, k[1])] = tuple(f for f in res if f > 1)
    out = {}
    for (i, j), gens in sorted(C.generators.items()):
        free = len(gens) - ranks.get((i, j), 0) - ranks.get((i - 1, j), 0)
        if p:
            if free:
                out[(i, j)] = free
        else:
            g = AbelianGroupSummary(free, torsion.get((i, j), ()))
            if g:
                out[(i, j)] = g
    return out


def graded_euler(C) -> LaurentPolynomial:
    """``sum (-1)^i q^j rank C^{i,j}``, computed on chain groups."""
    out = {}
    for (i, j), gens in C.generators.items():
        out[j] = out.get(j, 0) + (-1) ** (i % 2) * len(gens)
    return LaurentPolynomial(out)


def poincare_table(H: dict) -> dict:
    """Ranks (for integer tables) or dimensions, per bidegree."""
    return {k: (v.rank if isinstance(v, AbelianGroupSummary) else v) for k, v in H.items()}


# -- F_2 homology with explicit bases, and Sq^1 ---------------------------

@dataclass
class _F2Degree:
    gens: tuple
    index: dict
    echelon: gf2.Echelon
    reps: list  # cocycle representatives, as bitsets over gens


@dataclass
class BocksteinResult:
    """``bases[(i, j)]`` lists cocycle representatives of a basis of
    ``H^{i,j}(F_2)`` (each as a tuple of generators); ``maps[(i, j)]`` is
    ``Sq^1: H^{i,j} -> H^{i+1,j}`` as a list of rows (0/1)."""

    bases: dict
    maps: dict = field(default_factory=dict)
    _cols: dict = field(default_factory=dict, repr=False)

    def rank(self, i, j) -> int:
        return gf2.rank(self._cols.get((i, j), []))

    def dimension(self, i, j) -> int:
        return len(self.bases.get((i, j), ()))

    def squares_to_zero(self) -> bool:
        for (i, j), cols in self._cols.items():
            nxt = self._cols.get((i + 1, j))
            if nxt is not None and any(gf2.matmul(nxt, cols)):
                return False
        return True


def _f2_degrees(C, j) -> dict:
    out = {}
    degrees = C.homological_degrees(j)
    for i in degrees:
        gens = C.gens(i, j)
        index = {g: n for n, g in enumerate(gens)}
        prev = C.gens(i - 1, j)
        prev_index = {g: n for n, g in enumerate(prev)}
        image = gf2.columns_mod2(C.differential(i - 1, j), prev_index, index)
        outgoing = gf2.columns_mod2(C.differential(i, j), index,
                                    {g: n for n, g in enumerate(C.gens(i + 1, j))})
        E = gf2.Echelon()
        for v in image:
            E.add(v)
        reps = []
        for z in gf2.kernel(outgoing):
            if E.add(z, 1 << len(reps)):
                reps.append(z)
        out[i] = _F2Degree(gens, index, E, reps)
    return out


def _sq1_column(C, i, j, z: int, src: _F2Degree, tgt: _F2Degree) -> int:
    M = C.differential(i, j)
    cols = M.columns()
    acc = {}
    for b in gf2.bits(z):
        for t, x in cols.get(src.gens[b], {}).items():
            acc[t] = acc.get(t, 0) + x
    v = 0
    for t, x in acc.items():
        if x % 2:
            raise NotAComplex("lift of a mod 2 cocycle has an odd coboundary")
        if (x // 2) % 2:
            v ^= 1 << tgt.index[t]
    residual, tag = tgt.echelon.reduce(v)
    if residual:
        raise NotAComplex("Bockstein image is not a cocycle")
    return tag


def bockstein(C, check: bool = True) -> BocksteinResult:
    """``Sq^1`` on ``H^{*,*}(F_2)`` via integral lifts of cocycles."""
    if check:
        _check(C)
    bases, maps, cols_out = {}, {}, {}
    for j in C.quantum_degrees:
        degs = _f2_degrees(C, j)
        for i, D in degs.items():
            if D.reps:
                bases[(i, j)] = [tuple(D.gens[b] for b in gf2.bits(z)) for z in D.reps]
        for i, D in degs.items():
            tgt = degs.get(i + 1)
            if not D.reps or tgt is None or not tgt.reps:
                continue
            cols = [_sq1_column(C, i, j, z, D, tgt) for z in D.reps]
            cols_out[(i, j)] = cols
            maps[(i, j)] = [[c >> r & 1 for c in cols] for r in range(len(tgt.reps))]
    return BocksteinResult(bases, maps, cols_out)


def f2_dimensions(C) -> dict:
    """F_2 Betti numbers from the explicit bases (cross-checks the rank path)."""
    out = {}
    for j in C.quantum_degrees:
        for i, D in _f2_degrees(C, j).items():
            if D.reps:
                out[(i, j)] = len(D.reps)
    return out
