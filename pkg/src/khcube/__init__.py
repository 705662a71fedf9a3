"""Khovanov homology through the cube of resolutions and its Burnside lift."""

__version__ = "0.1.0"

from .burnside import BurnsideCube, SetMatrix, TwoIso, abelianize, compose, verify_coherence
from .cube import CubeDiagram, LinearDiagram, alpha, beta, edge_sign, totalize
from .diagram import (
    LinkDiagram,
    connected_sum,
    disjoint_union,
    edge_saddle,
    mirror,
    parse_braid,
    parse_pd,
    resolve,
)
from .flowcat import CubicalFlowCategory, extract, verify_moduli
from .khovanov import (
    BigradedComplex,
    Labeling,
    build_burnside_cube,
    build_khovanov_cube,
    khovanov_complex,
    ladybug_matching,
    reduced_complex,
    tqft_entry,
)
from .homology import (
    AbelianGroupSummary,
    LaurentPolynomial,
    bigraded_homology,
    bockstein,
    graded_euler,
    kauffman_oracle,
    smith_normal_form,
)

__all__ = [
    "AbelianGroupSummary",
    "abelianize",
    "alpha",
    "beta",
    "bigraded_homology",
    "BigradedComplex",
    "bockstein",
    "build_burnside_cube",
    "build_khovanov_cube",
    "BurnsideCube",
    "compose",
    "connected_sum",
    "CubeDiagram",
    "CubicalFlowCategory",
    "disjoint_union",
    "edge_saddle",
    "edge_sign",
    "extract",
    "graded_euler",
    "kauffman_oracle",
    "khovanov_complex",
    "Labeling",
    "ladybug_matching",
    "LaurentPolynomial",
    "LinearDiagram",
    "LinkDiagram",
    "mirror",
    "parse_braid",
    "parse_pd",
    "reduced_complex",
    "resolve",
    "SetMatrix",
    "smith_normal_form",
    "totalize",
    "tqft_entry",
    "TwoIso",
    "verify_coherence",
    "verify_moduli",
    "__version__",
]
