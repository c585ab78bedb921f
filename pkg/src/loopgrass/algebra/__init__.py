"""Exact arithmetic layer: fields, polynomials, Laurent matrices."""

from .fields import GF, QQ, FpElement, PrimeField, RationalField, parse_field
from .grammar import format_laurent, parse_laurent
from .laurent import LaurentPoly
from .matrix import LaurentMatrix
from .poly import Poly

__all__ = [
    "GF", "QQ", "FpElement", "PrimeField", "RationalField", "parse_field",
    "format_laurent", "parse_laurent", "LaurentPoly", "LaurentMatrix", "Poly",
]
