"""multideal: multiplier ideals of monomial ideals and nondegenerate polynomials.

The package computes, with exact rational arithmetic throughout:

* Newton polyhedra of monomial ideals (facets, faces, compactness, loci);
* multiplier ideals of monomial ideals at any positive rational weight,
  via the interior-of-scaled-polyhedron characterization;
* per-face nondegeneracy of polynomials (a capped Groebner engine decides
  whether the face differentials vanish on the torus);
* multiplier ideals of nondegenerate polynomials in factored form;
* log canonical thresholds and jumping numbers;
* an independent dimension-2 oracle that recomputes multiplier ideals
  through a smooth toric resolution.
"""

from .errors import (
    DegenerateInputError,
    FacetLimitError,
    InconclusiveError,
    InvalidInputError,
    MultidealError,
    ParseError,
)
from .expr import PolyExpr, expand, parse_expr, parse_polynomial, unparse
from .groebner import (
    DEFAULT_PAIR_LIMIT,
    PolyRing,
    TorusVerdict,
    buchberger,
    partials,
    vanishes_on_torus,
)
from .ideals import FactoredIdeal, MonomialIdeal, contains, minimalize, term_ideal
from .multiplier import (
    as_coefficient,
    jumping_numbers,
    jumping_numbers_poly,
    lct,
    multiplier_monomial,
    multiplier_poly,
)
from .nondeg import FaceVerdict, NondegReport, Verdict, classify, face_nondegenerate
from .polynomial import Polynomial
from .polytope import (
    Face,
    NewtonPolyhedron,
    face_locus,
    face_terms,
    faces,
    in_scaled_interior,
    newton_polyhedron,
)
from .toric import DivisorData, Fan2D, divisor_data, multiplier_via_resolution, smooth_subdivision

__version__ = "0.1.0"

__all__ = [
    "DegenerateInputError",
    "FacetLimitError",
    "InconclusiveError",
    "InvalidInputError",
    "MultidealError",
    "ParseError",
    "PolyExpr",
    "expand",
    "parse_expr",
    "parse_polynomial",
    "unparse",
    "DEFAULT_PAIR_LIMIT",
    "PolyRing",
    "TorusVerdict",
    "buchberger",
    "partials",
    "vanishes_on_torus",
    "FactoredIdeal",
    "MonomialIdeal",
    "contains",
    "minimalize",
    "term_ideal",
    "as_coefficient",
    "jumping_numbers",
    "jumping_numbers_poly",
    "lct",
    "multiplier_monomial",
    "multiplier_poly",
    "FaceVerdict",
    "NondegReport",
    "Verdict",
    "classify",
    "face_nondegenerate",
    "Polynomial",
    "Face",
    "NewtonPolyhedron",
    "face_locus",
    "face_terms",
    "faces",
    "in_scaled_interior",
    "newton_polyhedron",
    "DivisorData",
    "Fan2D",
    "divisor_data",
    "multiplier_via_resolution",
    "smooth_subdivision",
    "__version__",
]
