"""The invariant battery run by ``kh --task verify``."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .burnside import abelianize, flip_square, verify_coherence
from .cube import cube_edges, totalize
from .diagram import LinkDiagram
from .flowcat import extract, verify_moduli
from .homology import graded_euler, kauffman_oracle
from .khovanov import (
    _Resolutions,
    build_burnside_cube,
    build_khovanov_cube,
    khovanov_complex,
    ladybug_squares,
)


@dataclass
class Check:
    name: str
    ok: bool
    detail: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"name": self.name, "ok": self.ok, **self.detail}


def cubes_equal(G, H) -> bool:
    """Entrywise equality of two integer cubes of the same dimension."""
    if G.dim != H.dim:
        return False
    if any(tuple(G.generators(v)) != tuple(H.generators(v)) for v in set(G.vertex_sets) | set(H.vertex_sets)):
        return False
    return all(G.edge(u, v) == H.edge(u, v) for u, v, _ in cube_edges(G.dim))


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    if isinstance(obj, (int, str, bool)) or obj is None:
        return obj
    return str(obj)


def run_checks(d: LinkDiagram, rule: str = "right", seed: int | None = None) -> list:
    """Run every check on ``d``; never raises for a failed check.

    With ``seed`` set, one randomly chosen ladybug square is flipped and
    the flip must be detected whenever the cube has a 3-face.
    """
    R = _Resolutions(d)
    checks = []
    C = khovanov_complex(d, _cache=R)
    checks.append(Check("d_squared_zero", C.squares_to_zero()))
    checks.append(Check("quantum_degree_preserved", C.preserves_quantum_degree()))
    chi, oracle = graded_euler(C), kauffman_oracle(d)
    checks.append(Check("euler_equals_oracle", chi == oracle, {"euler": chi.pairs(), "oracle": oracle.pairs()}))
    G = build_khovanov_cube(d, R)
    B = build_burnside_cube(d, rule, R)
    A = abelianize(B)
    checks.append(Check("abelianization", cubes_equal(A, G)))
    tot_a, tot_g = totalize(A, check=False), totalize(G, check=False)
    checks.append(Check("totalization_commutes",
                        tot_a.bases == tot_g.bases and tot_a.boundaries == tot_g.boundaries))
    coh = verify_coherence(B)
    checks.append(Check("coherence", coh.ok, _jsonable({
        "faces_checked": coh.faces_checked, "squares_checked": coh.squares_checked,
        "failure": coh.failure})))
    mod = verify_moduli(extract(B, check=False, grading_shift=d.n_minus))
    checks.append(Check("moduli", mod.ok, _jsonable({
        "census": mod.census, "signed": mod.signed, "parity": mod.parity,
        "intervals_balanced": mod.intervals_balanced, "pairs_checked": mod.pairs_checked,
        "failure": mod.failure})))
    if seed is not None:
        squares = ladybug_squares(d, R)
        if squares and d.n_crossings >= 3:
            u, w, _, _ = random.Random(seed).choice(squares)
            caught = not verify_coherence(flip_square(B, (u, w)), check_squares=False).ok
            checks.append(Check("perturbation_detected", caught, _jsonable({"square": (u, w)})))
    return checks
