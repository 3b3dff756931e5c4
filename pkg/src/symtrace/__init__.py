"""Exact trace measures, bounds and constructions for symmetrizable integer matrices."""
from .constructions import construct_L, construct_T, four_square, path_matrix
from .matrices import IntMatrix, RadicalMatrix, classify, parse_matrix
from .measures import check_bounds, lower_bound_B, rss_bound, trace_k
from .numerics import RadicalScalar
from .spectra import CharPoly, char_poly, char_poly_radical
from .symmetry import rationalize, symmetrize

__all__ = [
    "CharPoly", "IntMatrix", "RadicalMatrix", "RadicalScalar", "char_poly", "char_poly_radical",
    "check_bounds", "classify", "construct_L", "construct_T", "four_square", "lower_bound_B",
    "parse_matrix", "path_matrix", "rationalize", "rss_bound", "symmetrize", "trace_k",
]
