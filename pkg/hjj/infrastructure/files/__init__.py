"""JSON file formats."""
from hjj.infrastructure.files.errors import ConflictingProduct, ParseError
from hjj.infrastructure.files.loaders import (
    algebra_from_document,
    algebra_to_document,
    dump_algebra,
    load_algebra,
    load_form,
    load_operator,
    load_representation,
    load_series,
)

__all__ = [
    "ConflictingProduct",
    "ParseError",
    "algebra_from_document",
    "algebra_to_document",
    "dump_algebra",
    "load_algebra",
    "load_form",
    "load_operator",
    "load_representation",
    "load_series",
]
