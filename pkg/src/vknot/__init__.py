"""Polynomial invariants of virtual knots from Gauss-diagram data.

The Affine Index Polynomial, the Sawollek polynomial and its formal-G
refinement (ASawollek), with the Δ and Γ coefficients read off a
G-expansion.
"""

__version__ = "0.1.0"

from .affine import affine_index_polynomial, cheng_coloring, crossing_weights
from .biquandle import (
    asawollek,
    circuit_weight,
    delta,
    g_expansion,
    gamma_at_unity,
    mellor_check,
    relation_matrix,
    sawollek,
)
from .diagram import Crossing, Diagram, format_knot, mirror, parse_knot, random_knot, reverse
from .kernel import BACKEND
from .laurent import LaurentPoly, parse_poly

__all__ = [
    "BACKEND",
    "Crossing",
    "Diagram",
    "LaurentPoly",
    "affine_index_polynomial",
    "asawollek",
    "cheng_coloring",
    "circuit_weight",
    "crossing_weights",
    "delta",
    "format_knot",
    "g_expansion",
    "gamma_at_unity",
    "mellor_check",
    "mirror",
    "parse_knot",
    "parse_poly",
    "random_knot",
    "relation_matrix",
    "reverse",
    "sawollek",
]
