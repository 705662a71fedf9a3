import functools
import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from khcube.burnside import abelianize, flip_square
from khcube.corpus import knot
from khcube.cube import beta
from khcube.diagram import parse_braid, parse_pd
from khcube.errors import IncoherentInput
from khcube.flowcat import (
    CubicalFlowCategory,
    Point,
    boundary_labels,
    differentials,
    extract,
    four_object_example,
    squares_to_zero,
    to_dict,
    verify_moduli,
)
from khcube.khovanov import build_burnside_cube, ladybug_squares

from conftest import TREFOIL


def test_four_object_example():
    F = four_object_example()
    assert boundary_labels(F, "x", "z") == {"ba", "ca"}
    assert boundary_labels(F, "y", "w") == {"db", "dc"}
    r = verify_moduli(F)
    assert r.ok and r.intervals_balanced
    assert r.pairs_checked == 2
    assert squares_to_zero(F)


def test_four_object_example_with_missing_endpoint():
    F = four_object_example()
    moduli0 = dict(F.moduli0)
    moduli0[("y", "z")] = (Point("b", 1),)
    r = verify_moduli(CubicalFlowCategory(F.objects, moduli0, F.moduli1))
    assert not r.ok and not r.census
    assert r.failure["check"] == "census"
    assert r.failure["extra"]


def test_four_object_example_unbalanced():
    F = four_object_example()
    moduli0 = dict(F.moduli0)
    moduli0[("y", "z")] = (Point("b", 1), Point("c", 1))
    r = verify_moduli(CubicalFlowCategory(F.objects, moduli0, F.moduli1))
    assert not r.ok and not r.signed and r.census
    assert not squares_to_zero(CubicalFlowCategory(F.objects, moduli0, F.moduli1))


def test_trefoil_flow_category(trefoil):
    F = extract(build_burnside_cube(trefoil), grading_shift=trefoil.n_minus)
    r = verify_moduli(F)
    assert r.ok and r.intervals_balanced
    assert len(F.objects) == sum(1 << c for c in (3, 2, 2, 1, 2, 1, 1, 2))
    assert squares_to_zero(F)


def test_extract_rejects_incoherent_cube():
    d = knot("8_19")
    B = build_burnside_cube(d)
    u, w, _, _ = ladybug_squares(d)[0]
    with pytest.raises(IncoherentInput):
        extract(flip_square(B, (u, w)))


def test_forgetting_intervals_gives_totalization():
    for d in (parse_pd(TREFOIL), knot("4_1"), parse_braid([1, -2, 1, -2])):
        B = build_burnside_cube(d)
        F = extract(B, check=False)
        lin = beta(abelianize(B))
        D = differentials(F)
        for i, m in enumerate(lin.maps):
            assert D.get(i, m) == m


def _perturbed(F, rng, mode):
    moduli0 = {k: tuple(v) for k, v in F.moduli0.items()}
    key = rng.choice(sorted(moduli0, key=repr))
    pts = list(moduli0[key])
    j = rng.randrange(len(pts))
    if mode == "sign":
        pts[j] = Point(pts[j].label, -pts[j].sign)
    else:
        del pts[j]
    moduli0[key] = tuple(pts)
    return CubicalFlowCategory(F.objects, moduli0, F.moduli1, F.grading_shift)


@functools.lru_cache(maxsize=None)
def figure_eight_category():
    return extract(build_burnside_cube(knot("4_1")), check=False)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(1, 3))
def test_signed_check_is_d_squared(seed, flips):
    # with the census intact, the signed check holds exactly when d^2 = 0
    rng = random.Random(seed)
    F = figure_eight_category()
    for _ in range(flips):
        F = _perturbed(F, rng, "sign")
    r = verify_moduli(F)
    assert r.census and r.parity
    assert r.ok == squares_to_zero(F)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_deleted_point_breaks_census(seed):
    G = figure_eight_category()
    F = _perturbed(G, random.Random(seed), "delete")
    (x, y), = [k for k in G.moduli0 if G.moduli0[k] != F.moduli0[k]]
    # the census notices exactly when the point was an interval endpoint
    used = any(e[0] == y and iv_pair[0] == x or e[0] == x and iv_pair[1] == y
               for iv_pair, ivs in G.moduli1.items() for iv in ivs for e in iv)
    r = verify_moduli(F)
    assert r.census == (not used)
    assert not r.ok or not used


def test_to_dict(trefoil):
    F = extract(build_burnside_cube(trefoil), grading_shift=trefoil.n_minus)
    data = to_dict(F)
    assert set(data) == {"metadata", "objects", "moduli0", "moduli1"}
    assert data["metadata"]["homological_shift"] == -3
    assert len(data["objects"]) == len(F.objects)
    assert sum(len(m["points"]) for m in data["moduli0"]) == sum(len(p) for p in F.moduli0.values())
    n_intervals = sum(len(m["intervals"]) for m in data["moduli1"])
    assert n_intervals == sum(len(v) for v in F.moduli1.values())
    assert json.loads(json.dumps(data)) == data
    assert to_dict(F) == data
