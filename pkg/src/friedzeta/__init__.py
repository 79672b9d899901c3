"""Multivariable Lefschetz zeta functions of free-group endomorphisms.

Exact integer and Laurent-polynomial linear algebra, Fox calculus, cross-section
enumeration, and an exact model of the Arnoux-Yoccoz surface over Q(alpha).
"""

from .laurent import LaurentPoly, UniPoly, det_ring, exact_div, parse_laurent, specialize
from .linalg import IntMatrix, cokernel, determinant, parse_matrix, smith_normal_form
from .sturm import isolate_largest_root, largest_real_root
from .words import FreeEndomorphism, Word, abelianization, fox_jacobian, parse_endomorphism
from .zeta import (
    SectionClass, ZetaFunction, build_model, divides, genus_search, is_section,
    min_section_degree, section, sections_with_degree, zeta,
)

__version__ = "0.1.0"

__all__ = [
    "FreeEndomorphism", "IntMatrix", "LaurentPoly", "SectionClass", "UniPoly", "Word",
    "ZetaFunction", "abelianization", "build_model", "cokernel", "det_ring", "determinant",
    "divides", "exact_div", "fox_jacobian", "genus_search", "is_section",
    "isolate_largest_root", "largest_real_root", "min_section_degree", "parse_endomorphism",
    "parse_laurent", "parse_matrix", "section", "sections_with_degree", "smith_normal_form",
    "specialize", "zeta",
]
