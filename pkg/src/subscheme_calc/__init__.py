"""Closed subschemes of glued affine schemes over QQ, computed with Groebner bases.

A closed subscheme is stored as one ideal per affine patch. Intersection
(``mul``) is the patchwise ideal sum, union (``add``) the patchwise
intersection, and equality compares reduced Groebner bases.
"""

from .algebra import (
    AffineAlgebra,
    Ideal,
    RingMap,
    canonical_surjection,
    eliminate,
    extend,
    ideal_eq,
    ideal_intersect,
    ideal_sum,
    is_unit,
    map_apply,
    map_compose,
    map_inverse,
    map_kernel,
    map_surjective,
    map_validate,
    saturate,
)
from .groebner import GrobnerBasis, buchberger, groebner, normal_form, reduced_basis, s_polynomial
from .kernels import BACKEND
from .polyring import (
    GREVLEX_ORDER,
    LEX_ORDER,
    MonomialOrder,
    ParseError,
    Polynomial,
    PolyRing,
    block_order,
    format_poly,
    leading_term,
    parse_poly,
)
from .report import Report
from .scheme import (
    GlueError,
    GlueRecord,
    GluedScheme,
    SchemeMorphism,
    compose_morphisms,
    localize,
    make_glue,
    transport,
    validate_morphism,
    validate_scheme,
)
from .subscheme import (
    ClosedSubscheme,
    add,
    additive_law_check,
    canon,
    empty,
    eq,
    from_surjection,
    mul,
    pullback,
    validate,
    whole,
)

__version__ = "0.1.0"

__all__ = [
    "AffineAlgebra", "BACKEND", "ClosedSubscheme", "GREVLEX_ORDER", "GlueError", "GlueRecord",
    "GluedScheme", "GrobnerBasis", "Ideal", "LEX_ORDER", "MonomialOrder", "ParseError", "PolyRing",
    "Polynomial", "Report", "RingMap", "SchemeMorphism", "add", "additive_law_check", "block_order",
    "buchberger", "canon", "canonical_surjection", "compose_morphisms", "eliminate", "empty", "eq",
    "extend", "format_poly", "from_surjection", "groebner", "ideal_eq", "ideal_intersect", "ideal_sum",
    "is_unit", "leading_term", "localize", "make_glue", "map_apply", "map_compose", "map_inverse",
    "map_kernel", "map_surjective", "map_validate", "mul", "normal_form", "parse_poly", "pullback",
    "reduced_basis", "s_polynomial", "saturate", "transport", "validate", "validate_morphism",
    "validate_scheme", "whole",
]
