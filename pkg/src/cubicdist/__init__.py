"""Intersection distributions of polynomials over finite fields."""

__version__ = "0.1.0"

from .field import FieldSpec, FieldElem, build_field, parse_field  # noqa: E402
from .polyfn import Cubic, Dense, Monomial, Tabulated, parse_poly  # noqa: E402
from .distributions import (  # noqa: E402
    IntersectionDistribution,
    MultiplicityRow,
    intersection_distribution,
    multiplicity_row,
)

__all__ = [
    "FieldSpec", "FieldElem", "build_field", "parse_field",
    "Cubic", "Dense", "Monomial", "Tabulated", "parse_poly",
    "IntersectionDistribution", "MultiplicityRow",
    "intersection_distribution", "multiplicity_row",
]
