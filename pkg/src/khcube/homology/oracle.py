"""State-sum oracle for the unnormalized Jones polynomial.

Uses only the crossing tuples and signs of the diagram: circles are
counted by union-find on arc labels, not by the resolution tracer.
"""

from __future__ import annotations

from itertools import product

from ..diagram import LinkDiagram
from .polynomial import LaurentPolynomial

_JOINS = (((0, 1), (2, 3)), ((0, 3), (1, 2)))


def resolution_circles(d: LinkDiagram, v) -> int:
    parent = {}

    def find(a):
        root = a
        while parent.setdefault(root, root) != root:
            root = parent[root]
        while parent[a] != root:
            parent[a], a = root, parent[a]
        return root

    for x, r in zip(d.crossings, v):
        for s, t in _JOINS[r]:
            ra, rb = find(x[s]), find(x[t])
            if ra != rb:
                parent[ra] = rb
    for x in d.crossings:
        for a in x:
            find(a)
    return len({find(a) for a in parent}) + len(d.loops)


def kauffman_oracle(d: LinkDiagram) -> LaurentPolynomial:
    """``(-1)^{n_-} q^{n_+ - 2 n_-} sum_v (-q)^{|v|} (q + q^-1)^{circles(v)}``."""
    circle = LaurentPolynomial({1: 1, -1: 1})
    total = LaurentPolynomial()
    powers = {}
    for v in product((0, 1), repeat=d.n_crossings):
        c = resolution_circles(d, v)
        if c not in powers:
            powers[c] = circle ** c
        w = sum(v)
        total = total + LaurentPolynomial.monomial(w, (-1) ** w) * powers[c]
    shift = LaurentPolynomial.monomial(d.n_plus - 2 * d.n_minus, (-1) ** d.n_minus)
    return total * shift
