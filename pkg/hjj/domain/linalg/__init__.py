"""Exact rational linear algebra."""
from hjj.domain.linalg.entities import (
    Matrix,
    Subspace,
    Vector,
    format_matrix,
    format_scalar,
    format_vector,
    parse_scalar,
    unit_vector,
    zero_vector,
)

__all__ = [
    "Matrix",
    "Subspace",
    "Vector",
    "format_matrix",
    "format_scalar",
    "format_vector",
    "parse_scalar",
    "unit_vector",
    "zero_vector",
]
