"""Load and dump the JSON file formats."""
import json
from collections.abc import Iterator, Sequence
from contextlib import contextmanager
from fractions import Fraction
from pathlib import Path
from typing import TypeVar

from pydantic import BaseModel
from pydantic import ValidationError as SchemaError

from hjj.core.logging import get_logger
from hjj.domain.algebra.entities import BilinearMap, HomAlgebra
from hjj.domain.deformation.entities import FormalMapSeries, FormalProductSeries
from hjj.domain.linalg.entities import Matrix, Vector, format_matrix, format_scalar, parse_scalar
from hjj.domain.linalg.errors import ScalarFormatError
from hjj.domain.representation.entities import Representation
from hjj.infrastructure.files.errors import ConflictingProduct, ParseError
from hjj.infrastructure.files.schemas import (
    AlgebraFile,
    FormFile,
    MatrixRows,
    OperatorFile,
    ProductEntry,
    RepresentationFile,
    Scalar,
    SeriesFile,
    SparseBilinear,
)

logger = get_logger(__name__)

M = TypeVar("M", bound=BaseModel)


def read_document(path: str | Path, model: type[M]) -> M:
    """
    Read a JSON file and validate it against a schema.

    Raises:
        ParseError: With the line of a syntax error or the path of an invalid field
    """
    source = str(path)
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read file ({e.strerror})", source=source) from e
    except UnicodeDecodeError as e:
        raise ParseError(f"file is not valid UTF-8 (byte {e.start})", source=source) from e
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, source=source, line=e.lineno) from e
    return validate_document(data, model, source)


def validate_document(data: object, model: type[M], source: str | None = None) -> M:
    try:
        return model.model_validate(data)
    except SchemaError as e:
        error = e.errors()[0]
        field = ".".join(str(part) for part in error["loc"])
        raise ParseError(error["msg"], source=source, field=field) from e


def _scalar(value: Scalar, field: str) -> Fraction:
    try:
        return parse_scalar(value)
    except ScalarFormatError as e:
        raise ParseError(e.message, field=field) from e


def _matrix(rows: MatrixRows, shape: tuple[int, int], field: str) -> Matrix:
    n, m = shape
    if len(rows) != n or any(len(row) != m for row in rows):
        raise ParseError(f"expected a {n}x{m} matrix", field=field)
    return Matrix.from_rows(
        [[_scalar(x, f"{field}[{i}][{j}]") for j, x in enumerate(row)] for i, row in enumerate(rows)],
        m,
    )


def _index(labels: Sequence[str], label: str, field: str) -> int:
    try:
        return list(labels).index(label)
    except ValueError:
        raise ParseError(f"unknown basis label {label!r}", field=field) from None


def _vector(value: dict[str, Scalar], labels: Sequence[str], field: str) -> Vector:
    coords = [Fraction(0)] * len(labels)
    for label, x in value.items():
        coords[_index(labels, label, field)] = _scalar(x, f"{field}.{label}")
    return tuple(coords)


def _sparse(vector: Vector, labels: Sequence[str]) -> dict[str, str]:
    return {labels[k]: format_scalar(x) for k, x in enumerate(vector) if x != 0}


# ==========================================
# Algebras
# ==========================================

def algebra_from_document(doc: AlgebraFile) -> HomAlgebra:
    """
    Build an algebra, symmetrizing the listed products.

    Raises:
        ParseError: On unknown labels, bad scalars or a wrongly shaped alpha
        ConflictingProduct: When x * y and y * x are listed with different values
    """
    labels = doc.basis
    n = len(labels)
    alpha = _matrix(doc.alpha, (n, n), "alpha")
    entries: dict[tuple[int, int], Vector] = {}
    for k, entry in enumerate(doc.products):
        field = f"products[{k}]"
        i = _index(labels, entry.left, f"{field}.left")
        j = _index(labels, entry.right, f"{field}.right")
        value = _vector(entry.value, labels, f"{field}.value")
        key = (min(i, j), max(i, j))
        if key in entries and entries[key] != value:
            raise ConflictingProduct(labels[key[0]], labels[key[1]])
        entries[key] = value
    symmetric = {**entries, **{(j, i): v for (i, j), v in entries.items()}}
    return HomAlgebra(BilinearMap.from_entries(n, n, symmetric), alpha, tuple(labels))


def algebra_to_document(a: HomAlgebra) -> AlgebraFile:
    """Canonical document: sorted pairs with nonzero products only."""
    labels = a.basis_labels
    products = [
        ProductEntry(left=labels[i], right=labels[j], value=_sparse(a.c[i][j], labels))
        for i in range(a.dim)
        for j in range(i, a.dim)
        if any(x != 0 for x in a.c[i][j])
    ]
    return AlgebraFile(basis=list(labels), alpha=format_matrix(a.alpha), products=products)


def load_algebra(path: str | Path) -> HomAlgebra:
    doc = read_document(path, AlgebraFile)
    with source_context(path):
        algebra = algebra_from_document(doc)
    logger.debug("Loaded %d-dimensional algebra from %s", algebra.dim, path)
    return algebra


def dump_algebra(a: HomAlgebra) -> str:
    return algebra_to_document(a).model_dump_json(indent=2)


# ==========================================
# Representations, operators and forms
# ==========================================

def representation_from_document(doc: RepresentationFile, a: HomAlgebra) -> Representation:
    n = doc.dim
    for label in doc.rho:
        _index(a.basis_labels, label, "rho")
    rho = tuple(
        _matrix(doc.rho[label], (n, n), f"rho.{label}") if label in doc.rho else Matrix.zeros(n, n)
        for label in a.basis_labels
    )
    return Representation(a, rho, _matrix(doc.phi, (n, n), "phi"))


def representation_to_document(r: Representation) -> RepresentationFile:
    return RepresentationFile(
        dim=r.dim_v,
        phi=format_matrix(r.phi),
        rho={label: format_matrix(m) for label, m in zip(r.algebra.basis_labels, r.rho, strict=True)},
    )


def operator_from_document(doc: OperatorFile, shape: tuple[int, int]) -> Matrix:
    return _matrix(doc.matrix, shape, "matrix")


def form_from_document(doc: FormFile, a: HomAlgebra) -> BilinearMap:
    return BilinearMap.from_form(_matrix(doc.form, (a.dim, a.dim), "form"))


def bilinear_from_sparse(data: SparseBilinear, labels: Sequence[str], field: str = "coeffs") -> BilinearMap:
    """Read {"x,y": {"z": c}} entries; each listed pair is also set at its transpose."""
    n = len(labels)
    entries: dict[tuple[int, int], Vector] = {}
    for key, value in data.items():
        parts = [part.strip() for part in key.split(",")]
        if len(parts) != 2:
            raise ParseError(f"expected a key of the form 'x,y', got {key!r}", field=f"{field}.{key}")
        i = _index(labels, parts[0], f"{field}.{key}")
        j = _index(labels, parts[1], f"{field}.{key}")
        vector = _vector(value, labels, f"{field}.{key}")
        pair = (min(i, j), max(i, j))
        if pair in entries and entries[pair] != vector:
            raise ConflictingProduct(labels[pair[0]], labels[pair[1]])
        entries[pair] = vector
    symmetric = {**entries, **{(j, i): v for (i, j), v in entries.items()}}
    return BilinearMap.from_entries(n, n, symmetric)


def bilinear_to_sparse(b: BilinearMap, labels: Sequence[str]) -> dict[str, dict[str, str]]:
    return {
        f"{labels[i]},{labels[j]}": _sparse(b.values[i][j], labels)
        for i in range(b.dim)
        for j in range(i, b.dim)
        if any(x != 0 for x in b.values[i][j])
    }


# ==========================================
# Series
# ==========================================

def product_series_from_document(doc: SeriesFile, a: HomAlgebra) -> FormalProductSeries:
    coeffs = []
    for i, coeff in enumerate(doc.coeffs):
        if not isinstance(coeff, dict):
            raise ParseError("expected a bilinear map", field=f"coeffs[{i}]")
        coeffs.append(bilinear_from_sparse(coeff, a.basis_labels, f"coeffs[{i}]"))
    return FormalProductSeries(a, tuple(coeffs))


def map_series_from_document(doc: SeriesFile, shape: tuple[int, int]) -> FormalMapSeries:
    coeffs = []
    for i, coeff in enumerate(doc.coeffs):
        if not isinstance(coeff, list):
            raise ParseError("expected a matrix", field=f"coeffs[{i}]")
        coeffs.append(_matrix(coeff, shape, f"coeffs[{i}]"))
    return FormalMapSeries(tuple(coeffs))


def product_series_to_document(s: FormalProductSeries) -> SeriesFile:
    labels = s.algebra.basis_labels
    return SeriesFile(order=s.order, coeffs=[bilinear_to_sparse(mu, labels) for mu in s.coeffs])


@contextmanager
def source_context(path: str | Path) -> Iterator[None]:
    """Attach the file path to ParseErrors raised while interpreting its document."""
    try:
        yield
    except ParseError as e:
        if e.details.get("source"):
            raise
        raise ParseError(e.raw_message, source=str(path), field=e.details.get("field")) from e


def load_representation(path: str | Path, a: HomAlgebra) -> Representation:
    doc = read_document(path, RepresentationFile)
    with source_context(path):
        return representation_from_document(doc, a)


def load_operator(path: str | Path, shape: tuple[int, int]) -> Matrix:
    doc = read_document(path, OperatorFile)
    with source_context(path):
        return operator_from_document(doc, shape)


def load_form(path: str | Path, a: HomAlgebra) -> BilinearMap:
    doc = read_document(path, FormFile)
    with source_context(path):
        return form_from_document(doc, a)


def load_series(path: str | Path) -> SeriesFile:
    return read_document(path, SeriesFile)
