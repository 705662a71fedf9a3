import random
from functools import reduce
from itertools import combinations
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from khcube.corpus import knotinfo_table, knots
from khcube.diagram import disjoint_union, mirror, parse_pd
from khcube.errors import NotAComplex
from khcube.homology import (
    AbelianGroupSummary,
    LaurentPolynomial,
    bigraded_homology,
    bockstein,
    f2_dimensions,
    graded_euler,
    invariant_factors,
    kauffman_oracle,
    poincare_table,
    rank,
    rank_mod_p,
    smith_normal_form,
)
from khcube.homology import gf2
from khcube.khovanov import BigradedComplex, khovanov_complex
from khcube.matrices import IntMatrix


# -- Smith normal form -----------------------------------------------------

def det(A):
    if not A:
        return 1
    return sum((-1) ** c * A[0][c] * det([row[:c] + row[c + 1:] for row in A[1:]]) for c in range(len(A)))


def determinantal_factors(A):
    """Invariant factors from gcds of k x k minors."""
    m = len(A)
    n = len(A[0]) if m else 0
    out, prev = [], 1
    for k in range(1, min(m, n) + 1):
        g = reduce(gcd, (abs(det([[A[r][c] for c in cols] for r in rows]))
                         for rows in combinations(range(m), k) for cols in combinations(range(n), k)), 0)
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def test_snf_examples():
    assert smith_normal_form([[2, 4], [6, 8]]).factors == [2, 4]
    assert smith_normal_form([[0, 6], [4, 0]]).factors == [2, 12]
    assert smith_normal_form([[0, 0], [0, 0]]).factors == []
    assert smith_normal_form([]).factors == []
    assert smith_normal_form([[3]]).factors == [3]
    assert smith_normal_form([[-5]]).factors == [5]


matrices = st.integers(1, 4).flatmap(lambda m: st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=m, max_size=m)))


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_snf_matches_determinantal_divisors(A):
    assert smith_normal_form(A).factors == determinantal_factors(A)
    assert invariant_factors(IntMatrix.from_dense(A)) == determinantal_factors(A)


def _mul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_snf_transforms(A):
    f, U, V = smith_normal_form(A, transforms=True)
    D = _mul(_mul(U, A), V)
    assert abs(det(U)) == 1 and abs(det(V)) == 1
    for r, row in enumerate(D):
        for c, x in enumerate(row):
            assert x == (f[r] if r == c and r < len(f) else 0)


def test_large_entries_stay_exact():
    A = [[10 ** 30 + 1, 10 ** 30], [10 ** 30, 10 ** 30 - 1]]
    assert smith_normal_form(A).factors == [1, 1]
    assert smith_normal_form([[2 ** 70, 0], [0, 3 ** 40]]).factors == [1, 2 ** 70 * 3 ** 40]


def test_ranks_mod_p():
    M = IntMatrix.from_dense([[2, 0], [0, 3]])
    assert rank_mod_p(M, 2) == 1
    assert rank_mod_p(M, 3) == 1
    assert rank_mod_p(M, 5) == 2
    assert rank(M) == 2
    assert rank(IntMatrix.from_dense([[1, 2], [2, 4]])) == 1


@settings(max_examples=80, deadline=None)
@given(matrices, st.sampled_from([2, 3, 5]))
def test_rank_mod_p_matches_snf(A, p):
    # rank over F_p counts invariant factors prime to p
    expected = sum(1 for f in determinantal_factors(A) if f % p)
    assert rank_mod_p(IntMatrix.from_dense(A), p) == expected


def test_gf2_kernel():
    cols = [0b011, 0b110, 0b101]
    assert gf2.rank(cols) == 2
    (k,) = gf2.kernel(cols)
    assert k == 0b111
    assert list(gf2.bits(0b1010)) == [1, 3]


# -- groups and tables -----------------------------------------------------

def test_group_summary():
    g = AbelianGroupSummary(2, (4, 2))
    assert g.torsion == (2, 4) and str(g) == "Z^2 + Z/2 + Z/4"
    assert g.two_torsion() == 2
    assert str(AbelianGroupSummary()) == "0" and not AbelianGroupSummary()
    with pytest.raises(ValueError):
        AbelianGroupSummary(0, (2, 3))
    with pytest.raises(ValueError):
        AbelianGroupSummary(0, (1,))


def test_trefoil_integer_table(trefoil):
    H = bigraded_homology(khovanov_complex(trefoil))
    assert {ij: str(g) for ij, g in H.items()} == {
        (-3, -9): "Z", (-2, -7): "Z/2", (-2, -5): "Z", (0, -3): "Z", (0, -1): "Z"}
    assert poincare_table(H)[(-2, -7)] == 0


def test_trefoil_field_tables(trefoil):
    C = khovanov_complex(trefoil)
    assert bigraded_homology(C, 2) == {(-3, -9): 1, (-3, -7): 1, (-2, -7): 1, (-2, -5): 1, (0, -3): 1, (0, -1): 1}
    assert bigraded_homology(C, 3) == {(-3, -9): 1, (-2, -5): 1, (0, -3): 1, (0, -1): 1}
    assert f2_dimensions(C) == bigraded_homology(C, 2)


def test_knotinfo_tables_small():
    for name, d, _ in knots(6):
        H = bigraded_homology(khovanov_complex(d))
        got = {ij: (g.rank, g.torsion) for ij, g in H.items()}
        assert got == knotinfo_table(name), name


def test_parallel_matches_serial():
    d = dict((n, d) for n, d, _ in knots(7))["7_4"]
    C = khovanov_complex(d)
    assert bigraded_homology(C, 0, jobs=2) == bigraded_homology(C, 0)


def test_rejects_non_complex():
    gens = {(0, 0): ("a",), (1, 0): ("b",), (2, 0): ("c",)}
    diffs = {(0, 0): IntMatrix(("a",), ("b",), {("b", "a"): 1}),
             (1, 0): IntMatrix(("b",), ("c",), {("c", "b"): 1})}
    with pytest.raises(NotAComplex):
        bigraded_homology(BigradedComplex(gens, diffs))
    with pytest.raises(NotAComplex):
        bockstein(BigradedComplex(gens, diffs))


def test_unknot_kunneth():
    u = parse_pd("U")
    H = bigraded_homology(khovanov_complex(disjoint_union(u, u)))
    assert {ij: str(g) for ij, g in H.items()} == {(0, -2): "Z", (0, 0): "Z^2", (0, 2): "Z"}


def test_mirror_integer_duality():
    # free parts flip (i, j); torsion moves to (1 - i, -j)
    for name, d, _ in knots(6):
        H = bigraded_homology(khovanov_complex(d))
        M = bigraded_homology(khovanov_complex(mirror(d)))
        assert {(-i, -j): g.rank for (i, j), g in H.items() if g.rank} == {ij: g.rank for ij, g in M.items() if g.rank}
        assert ({(1 - i, -j): g.torsion for (i, j), g in H.items() if g.torsion}
                == {ij: g.torsion for ij, g in M.items() if g.torsion})


# -- Euler characteristic and the oracle -----------------------------------

def test_kauffman_oracle_examples(trefoil):
    q = LaurentPolynomial.monomial(1)
    assert kauffman_oracle(parse_pd("U")) == q + q ** -1
    assert kauffman_oracle(parse_pd("X[1,1,2,2]")) == q + q ** -1
    assert kauffman_oracle(trefoil) == LaurentPolynomial({-1: 1, -3: 1, -5: 1, -9: -1})
    assert graded_euler(khovanov_complex(trefoil)) == kauffman_oracle(trefoil)


def test_euler_of_mirror_is_inverted():
    for _, d, _ in knots(7):
        assert graded_euler(khovanov_complex(mirror(d))) == graded_euler(khovanov_complex(d)).substitute_inverse()


def test_polynomial_arithmetic():
    q = LaurentPolynomial.monomial(1)
    p = (q + q ** -1) ** 2
    assert p == LaurentPolynomial({2: 1, 0: 2, -2: 1})
    with pytest.raises(ValueError):
        p ** -1
    assert p - p == LaurentPolynomial() and not (p - p)
    assert p(1) == 4
    assert str(LaurentPolynomial()) == "0"


# -- Bockstein -------------------------------------------------------------

def _two_term(c):
    gens = {(0, 0): ("a",), (1, 0): ("b",)}
    diffs = {(0, 0): IntMatrix(("a",), ("b",), {("b", "a"): c})} if c else {}
    return BigradedComplex(gens, diffs)


def test_bockstein_multiplication_by_two():
    S = bockstein(_two_term(2))
    assert S.dimension(0, 0) == S.dimension(1, 0) == 1
    assert S.maps[(0, 0)] == [[1]] and S.rank(0, 0) == 1
    assert S.squares_to_zero()


def test_bockstein_trivial_cases():
    for c in (0, 4):
        S = bockstein(_two_term(c))
        assert S.rank(0, 0) == 0
    assert bockstein(_two_term(1)).bases == {}


def _v2_count(torsion):
    return sum(1 for t in torsion if t % 2 == 0 and (t // 2) % 2 == 1)


def test_bockstein_matches_integer_torsion(trefoil):
    for d in [trefoil] + [d for _, d, _ in knots(7)]:
        C = khovanov_complex(d)
        S = bockstein(C)
        H = bigraded_homology(C)
        assert S.squares_to_zero()
        for (i, j) in S.bases:
            target = H.get((i + 1, j), AbelianGroupSummary())
            assert S.rank(i, j) == _v2_count(target.torsion)


def test_random_complex_bockstein():
    rng = random.Random(11)
    for _ in range(30):
        n = rng.randint(1, 4)
        c = rng.choice((1, 2, 4, 6, 8, 12))
        gens = {(0, 0): tuple(f"a{k}" for k in range(n)), (1, 0): tuple(f"b{k}" for k in range(n))}
        diffs = {(0, 0): IntMatrix(gens[(0, 0)], gens[(1, 0)], {(f"b{k}", f"a{k}"): c for k in range(n)})}
        C = BigradedComplex(gens, diffs)
        S = bockstein(C)
        assert S.rank(0, 0) == (n if c % 4 == 2 else 0)
