import pytest

from khcube.burnside import abelianize, flip_square, verify_coherence
from khcube.checks import cubes_equal
from khcube.corpus import knot, knots
from khcube.cube import cube_edges, cube_squares
from khcube.diagram import parse_braid, parse_pd, resolve
from khcube.errors import ArcNotFound, NotALadybug
from khcube.homology import bigraded_homology, graded_euler, kauffman_oracle
from khcube.khovanov import (
    Labeling,
    _Resolutions,
    build_burnside_cube,
    build_khovanov_cube,
    khovanov_complex,
    ladybug_matching,
    ladybug_segments,
    ladybug_squares,
    reduced_complex,
    tqft_entry,
)

from conftest import TREFOIL


def test_tqft_entries():
    # merge
    assert tqft_entry(0, "--", "-") == 1
    assert tqft_entry(0, "+-", "+") == 1
    assert tqft_entry(0, "-+", "+") == 1
    assert tqft_entry(0, "++", "+") == 0
    assert tqft_entry(0, "--", "+") == 0
    # split
    assert tqft_entry(0, "-", "+-") == tqft_entry(0, "-", "-+") == 1
    assert tqft_entry(0, "-", "--") == 0
    assert tqft_entry(0, "+", "++") == 1
    assert tqft_entry(0, "+", "+-") == 0
    # genus one and higher
    assert tqft_entry(1, "-", "+") == 2
    assert tqft_entry(1, "+", "+") == tqft_entry(1, "-", "-") == 0
    assert tqft_entry(2, "-", "+") == 0


def test_labeling_degrees():
    x = Labeling((1, 0, 1), 0b01, 2)
    assert (x.plus_count, x.minus_count, x.labels) == (1, 1, "+-")
    assert str(x) == "101:+-"
    assert x.homological_degree(3) == -1
    assert x.quantum_degree(0, 3) == 0 + 2 - 6


def test_zero_crossing_unknot():
    G = build_khovanov_cube(parse_pd("U"))
    assert G.dim == 0
    assert [str(g) for g in G.generators(())] == [":-", ":+"]
    C = khovanov_complex(parse_pd("U"))
    assert {ij: len(g) for ij, g in C.generators.items()} == {(0, -1): 1, (0, 1): 1}


def _masks(G, u, v):
    return {(t.plus, s.plus) for t, s in G.edge(u, v).entries}


def test_one_crossing_split():
    G = build_khovanov_cube(parse_pd("X[1,1,2,2]"))
    # 1-resolution: one circle; 0-resolution: two circles
    assert len(G.generators((1,))) == 2 and len(G.generators((0,))) == 4
    assert _masks(G, (1,), (0,)) == {(0b01, 0), (0b10, 0), (0b11, 1)}
    assert set(G.edge((1,), (0,)).entries.values()) == {1}


def test_one_crossing_merge():
    G = build_khovanov_cube(parse_pd("X[1,2,2,1]"))
    assert len(G.generators((1,))) == 4 and len(G.generators((0,))) == 2
    assert _masks(G, (1,), (0,)) == {(0, 0), (1, 0b01), (1, 0b10)}


def _oracle_edge(d, u, v, k):
    """Edge matrix from the component-wise cobordism rule."""
    ru, rv = resolve(d, u), resolve(d, v)
    src = {ru.strand_circle[(k, 0)], ru.strand_circle[(k, 1)]}
    tgt = {rv.strand_circle[(k, 0)], rv.strand_circle[(k, 1)]}
    fixed = {i: rv.arc_circle[c.arcs[0]] for i, c in enumerate(ru.circles) if i not in src}
    out = {}
    for m in range(1 << len(ru.circles)):
        for n in range(1 << len(rv.circles)):
            if any((m >> i & 1) != (n >> j & 1) for i, j in fixed.items()):
                continue
            x = "".join("+" if m >> i & 1 else "-" for i in sorted(src))
            y = "".join("+" if n >> j & 1 else "-" for j in sorted(tgt))
            c = tqft_entry(0, x, y)
            if c:
                out[(n, m)] = c
    return out


def test_cube_agrees_with_cobordism_rule():
    diagrams = [parse_pd(TREFOIL), parse_pd("X[4,1,3,2] X[2,3,1,4]"), knot("4_1"), parse_braid([1, -2, 1, 2])]
    for d in diagrams:
        G = build_khovanov_cube(d)
        for u, v, k in cube_edges(d.n_crossings):
            got = {(t.plus, s.plus): c for (t, s), c in G.edge(u, v).entries.items()}
            assert got == _oracle_edge(d, u, v, k), (u, v)


def test_trefoil_cube_commutes(trefoil):
    G = build_khovanov_cube(trefoil)
    assert G.noncommuting_square() is None
    C = khovanov_complex(trefoil, check=True)
    assert C.squares_to_zero() and C.preserves_quantum_degree()
    assert C.size() == sum(len(G.generators(v)) for v in G.vertex_sets)


def test_kinks_have_unknot_homology():
    expected = {(0, -1): "Z", (0, 1): "Z"}
    for pd in ("X[1,1,2,2]", "X[1,2,2,1]", "U"):
        H = bigraded_homology(khovanov_complex(parse_pd(pd)))
        assert {ij: str(g) for ij, g in H.items()} == expected


def test_euler_characteristic_matches_oracle():
    for _, d, _ in knots(6):
        assert graded_euler(khovanov_complex(d)) == kauffman_oracle(d)


# -- ladybug ---------------------------------------------------------------

def _braid_ladybug():
    d = parse_braid([1, -1])
    (circle,) = resolve(d, (1, 1)).circles
    return d, circle


def test_ladybug_segments_example():
    d, circle = _braid_ladybug()
    right = ladybug_segments(circle, 0, 1, "right")
    left = ladybug_segments(circle, 0, 1, "left")
    assert len(right) == len(left) == 2
    assert set(right).isdisjoint(left)
    assert set().union(*right, *left) == set(circle.arcs)
    assert ladybug_segments(circle, 1, 0, "right") == right
    with pytest.raises(ValueError):
        ladybug_segments(circle, 0, 1, "up")


def test_ladybug_segments_ignore_traversal_direction():
    for d in (knot("8_19"), parse_braid([1, -1])):
        R = _Resolutions(d)
        for u, w, k, l in ladybug_squares(d, R)[:40]:
            circle = R.res(u).circles[R.res(u).strand_circle[(k, 0)]]
            for rule in ("right", "left"):
                assert ladybug_segments(circle, k, l, rule) == ladybug_segments(circle.reversed(), k, l, rule)


def test_ladybug_matching_pairs_entries():
    d, _ = _braid_ladybug()
    iso = ladybug_matching(d, (1, 1), (0, 0))
    assert all(len(b) == 2 for b in iso.bijections.values())
    other = ladybug_matching(d, (1, 1), (0, 0), "left")
    assert all(iso.bijections[k] != other.bijections[k] for k in iso.bijections)


def test_not_a_ladybug(trefoil):
    with pytest.raises(NotALadybug):
        ladybug_matching(trefoil, (1, 1, 0), (0, 0, 0))
    with pytest.raises(NotALadybug):
        ladybug_segments(resolve(trefoil, (0, 0, 0)).circles[0], 0, 1)
    assert ladybug_squares(trefoil) == []


def test_trefoil_burnside_cube(trefoil):
    B = build_burnside_cube(trefoil)
    assert cubes_equal(abelianize(B), build_khovanov_cube(trefoil))
    r = verify_coherence(B)
    assert r.ok and r.faces_checked == 1 and r.squares_checked == 6


def test_both_rules_coherent_and_each_square_forced():
    d = knot("8_19")
    R = _Resolutions(d)
    squares = ladybug_squares(d, R)
    assert len(squares) == 115
    for rule in ("right", "left"):
        B = build_burnside_cube(d, rule, R)
        assert verify_coherence(B).ok
        # every ladybug square of this cube lies on a 3-face, and flipping it alone is caught
        for u, w, _, _ in squares:
            assert not verify_coherence(flip_square(B, (u, w)), check_squares=False).ok


def test_lazy_squares_mapping(trefoil):
    B = build_burnside_cube(trefoil)
    assert len(B.squares) == len(list(cube_squares(3))) == 6
    assert ((1, 1, 0), (0, 0, 0)) in B.squares
    assert ((1, 1, 0), (1, 0, 0)) not in B.squares
    with pytest.raises(KeyError):
        B.squares[((1, 1, 0), (1, 0, 0))]
    assert B.squares[((1, 1, 0), (0, 0, 0))] is B.squares[((1, 1, 0), (0, 0, 0))]
    with pytest.raises(ValueError):
        build_burnside_cube(trefoil, "diagonal")


# -- reduced ---------------------------------------------------------------

def test_reduced_unknot():
    H = bigraded_homology(reduced_complex(parse_pd("X[1,1,2,2]"), 1))
    assert {ij: str(g) for ij, g in H.items()} == {(0, 0): "Z"}


def test_reduced_trefoil(trefoil):
    for arc in trefoil.arcs:
        H = bigraded_homology(reduced_complex(trefoil, arc))
        assert {ij: str(g) for ij, g in H.items()} == {(-3, -8): "Z", (-2, -6): "Z", (0, -2): "Z"}


def test_unreduced_mod2_doubles_reduced():
    # over F2 the unreduced theory is the reduced one tensored with a rank-two module in degrees +-1
    for d in [parse_pd(TREFOIL), knot("4_1"), knot("5_2"), knot("8_19"), parse_braid([1, 2, -1, 2, 2])]:
        full = bigraded_homology(khovanov_complex(d), 2)
        red = bigraded_homology(reduced_complex(d, d.arcs[0]), 2)
        keys = set(full) | {(i, j + s) for i, j in red for s in (-1, 1)}
        for i, j in keys:
            assert full.get((i, j), 0) == red.get((i, j - 1), 0) + red.get((i, j + 1), 0)


def test_reduced_basepoint_must_exist(trefoil):
    with pytest.raises(ArcNotFound):
        reduced_complex(trefoil, 99)
