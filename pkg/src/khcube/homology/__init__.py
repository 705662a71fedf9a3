"""Exact linear algebra and the invariants computed from a bigraded complex."""

from .invariants import (
    AbelianGroupSummary,
    BocksteinResult,
    bigraded_homology,
    bockstein,
    f2_dimensions,
    graded_euler,
    poincare_table,
)
from .oracle import kauffman_oracle, resolution_circles
from .polynomial import LaurentPolynomial
from .snf import SNF, invariant_factors, rank, rank_mod_p, smith_normal_form

__all__ = [
    "AbelianGroupSummary",
    "BocksteinResult",
    "LaurentPolynomial",
    "SNF",
    "bigraded_homology",
    "bockstein",
    "f2_dimensions",
    "graded_euler",
    "invariant_factors",
    "kauffman_oracle",
    "poincare_table",
    "rank",
    "rank_mod_p",
    "resolution_circles",
    "smith_normal_form",
]
