"""Exact-arithmetic core in one import.

Sparse rational-coefficient polynomials (``Poly``), rational functions
with factor-multiset denominators (``RatFun``) and anticommuting
exterior forms over them (``ExtForm``).  The implementations live in
``poly``, ``ratfun`` and ``extform``; this module is the stable front
door so callers don't have to track that split.
"""

from .extform import ExtForm, dbar_pieces_of
from .poly import Poly, Var, format_fraction, parse_fraction
from .ratfun import RatFun, bareiss_det, poly_matrix_inverse

__all__ = [
    "Var",
    "Poly",
    "RatFun",
    "ExtForm",
    "parse_fraction",
    "format_fraction",
    "bareiss_det",
    "poly_matrix_inverse",
    "dbar_pieces_of",
]
