"""Exact scalars, dense matrices and canonical subspaces."""
from __future__ import annotations

import re
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from hjj.domain.linalg.errors import DimensionMismatch, ScalarFormatError, SingularMatrix

Vector = tuple[Fraction, ...]

_SCALAR_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_scalar(value: object) -> Fraction:
    """Parse "p/q", "p", an int or a Fraction into a reduced Fraction."""
    if isinstance(value, bool):
        raise ScalarFormatError(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        match = _SCALAR_RE.match(value.replace("−", "-"))
        if match is None:
            raise ScalarFormatError(value)
        numerator, denominator = match.group(1), match.group(2)
        if denominator is not None and int(denominator) == 0:
            raise ScalarFormatError(value)
        return Fraction(int(numerator), int(denominator or 1))
    raise ScalarFormatError(value)


def format_scalar(value: Fraction | int) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_vector(vector: Iterable[Fraction]) -> list[str]:
    return [format_scalar(x) for x in vector]


def format_matrix(m: Matrix) -> list[list[str]]:
    return [format_vector(row) for row in m.to_rows()]


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(1) if j == i else Fraction(0) for j in range(n))


def add_vectors(*vectors: Sequence[Fraction]) -> Vector:
    return tuple(sum(components, Fraction(0)) for components in zip(*vectors, strict=True))


def scale_vector(c: Fraction | int, vector: Sequence[Fraction]) -> Vector:
    return tuple(c * x for x in vector)


def is_zero_vector(vector: Iterable[Fraction]) -> bool:
    return all(x == 0 for x in vector)


def to_qq(value: Fraction) -> object:
    return QQ(value.numerator, value.denominator)


def from_qq(value: object) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))  # type: ignore[attr-defined]


@dataclass(frozen=True)
class Matrix:
    """Dense rational matrix stored row-major.

    Linear maps use the column convention: column j holds the image of basis vector j.
    """

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch("Matrix", self.rows * self.cols, len(self.entries))

    # -- construction -------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[object]], cols: int | None = None) -> Matrix:
        if cols is None:
            cols = len(rows[0]) if rows else 0
        entries: list[Fraction] = []
        for row in rows:
            if len(row) != cols:
                raise DimensionMismatch("Matrix.from_rows", cols, len(row))
            entries.extend(parse_scalar(x) for x in row)
        return cls(len(rows), cols, tuple(entries))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[object]], rows: int) -> Matrix:
        return cls.from_rows(columns, cols=rows).transpose() if columns else cls.zeros(rows, 0)

    @classmethod
    def from_sparse(cls, rows: int, cols: int, values: Mapping[tuple[int, int], Fraction]) -> Matrix:
        entries = [Fraction(0)] * (rows * cols)
        for (i, j), value in values.items():
            entries[i * cols + j] = value
        return cls(rows, cols, tuple(entries))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls.scalar(n, Fraction(1))

    @classmethod
    def scalar(cls, n: int, c: Fraction | int) -> Matrix:
        return cls.from_sparse(n, n, {(i, i): Fraction(c) for i in range(n)})

    @classmethod
    def from_domain(cls, dm: DomainMatrix) -> Matrix:
        rows, cols = dm.shape
        values: dict[tuple[int, int], Fraction] = {}
        for i, row in dm.to_sparse().rep.items():
            for j, value in row.items():
                values[(i, j)] = from_qq(value)
        return cls.from_sparse(rows, cols, values)

    def to_domain(self) -> DomainMatrix:
        sparse: dict[int, dict[int, object]] = {}
        for i in range(self.rows):
            row = {j: to_qq(x) for j, x in enumerate(self.row(i)) if x != 0}
            if row:
                sparse[i] = row
        return DomainMatrix(sparse, (self.rows, self.cols), QQ)

    # -- access -------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[Vector]:
        return [self.row(i) for i in range(self.rows)]

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    # -- arithmetic ---------------------------------------------------------

    def _check_same_shape(self, other: Matrix, operation: str) -> None:
        if self.shape != other.shape:
            raise DimensionMismatch(operation, self.shape, other.shape)

    def __add__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other, "Matrix addition")
        return Matrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other, "Matrix subtraction")
        return Matrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> Matrix:
        return self.scale(-1)

    def scale(self, c: Fraction | int) -> Matrix:
        return Matrix(self.rows, self.cols, tuple(c * x for x in self.entries))

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise DimensionMismatch("Matrix product", self.cols, other.rows)
        if self.rows == 0 or other.cols == 0 or self.cols == 0:
            return Matrix.zeros(self.rows, other.cols)
        return Matrix.from_domain(self.to_domain().matmul(other.to_domain()))

    def apply(self, vector: Sequence[Fraction]) -> Vector:
        """Image of a coordinate vector."""
        if len(vector) != self.cols:
            raise DimensionMismatch("Matrix.apply", self.cols, len(vector))
        support = [(j, x) for j, x in enumerate(vector) if x != 0]
        return tuple(
            sum((self.entries[i * self.cols + j] * x for j, x in support), Fraction(0))
            for i in range(self.rows)
        )

    def transpose(self) -> Matrix:
        return Matrix(
            self.cols,
            self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def power(self, k: int) -> Matrix:
        """Non-negative powers directly, negative powers through the inverse."""
        if not self.is_square():
            raise DimensionMismatch("Matrix.power", "square matrix", self.shape)
        base = self if k >= 0 else self.inverse()
        result = Matrix.identity(self.rows)
        for _ in range(abs(k)):
            result = base @ result
        return result

    def is_invertible(self) -> bool:
        return self.is_square() and (self.rows == 0 or self.to_domain().rank() == self.rows)

    def inverse(self) -> Matrix:
        if not self.is_invertible():
            raise SingularMatrix(self.rows)
        if self.rows == 0:
            return self
        return Matrix.from_domain(self.to_domain().inv())

    def direct_sum(self, other: Matrix) -> Matrix:
        """Block-diagonal matrix diag(self, other)."""
        values = {(i, j): self[i, j] for i in range(self.rows) for j in range(self.cols)}
        values.update(
            {(self.rows + i, self.cols + j): other[i, j] for i in range(other.rows) for j in range(other.cols)}
        )
        return Matrix.from_sparse(self.rows + other.rows, self.cols + other.cols, values)

    def kron(self, other: Matrix) -> Matrix:
        """Kronecker product; index (i, p) maps to i * other.rows + p."""
        values = {
            (i * other.rows + p, j * other.cols + q): self[i, j] * other[p, q]
            for i in range(self.rows)
            for j in range(self.cols)
            for p in range(other.rows)
            for q in range(other.cols)
            if self[i, j] != 0 and other[p, q] != 0
        }
        return Matrix.from_sparse(self.rows * other.rows, self.cols * other.cols, values)

    def __repr__(self) -> str:
        rows = ", ".join("[" + ", ".join(format_scalar(x) for x in row) + "]" for row in self.to_rows())
        return f"Matrix([{rows}])"


@dataclass(frozen=True)
class Subspace:
    """Linear subspace of Q^ambient_dim.

    The basis rows are in reduced row-echelon form without zero rows, so two subspaces
    are equal exactly when their dataclass fields are equal.
    """

    ambient_dim: int
    basis: Matrix

    def __post_init__(self) -> None:
        if self.basis.cols != self.ambient_dim:
            raise DimensionMismatch("Subspace", self.ambient_dim, self.basis.cols)

    @classmethod
    def zero(cls, ambient_dim: int) -> Subspace:
        return cls(ambient_dim, Matrix.zeros(0, ambient_dim))

    @classmethod
    def full(cls, ambient_dim: int) -> Subspace:
        return cls(ambient_dim, Matrix.identity(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.rows

    @property
    def vectors(self) -> list[Vector]:
        return self.basis.to_rows()

    @cached_property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(row) if x != 0) for row in self.vectors)

    def reduce(self, vector: Sequence[Fraction]) -> Vector:
        """Canonical representative of vector modulo this subspace."""
        if len(vector) != self.ambient_dim:
            raise DimensionMismatch("Subspace.reduce", self.ambient_dim, len(vector))
        result = list(vector)
        for pivot, row in zip(self.pivots, self.vectors):
            c = result[pivot]
            if c != 0:
                result = [x - c * y for x, y in zip(result, row)]
        return tuple(result)

    def contains(self, vector: Sequence[Fraction]) -> bool:
        return is_zero_vector(self.reduce(vector))

    def __contains__(self, vector: object) -> bool:
        return isinstance(vector, Sequence) and self.contains(vector)  # type: ignore[arg-type]

    def contains_subspace(self, other: Subspace) -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatch("Subspace.contains_subspace", self.ambient_dim, other.ambient_dim)
        return all(self.contains(v) for v in other.vectors)

    def coordinates(self, vector: Sequence[Fraction]) -> Vector:
        """Coefficients of a member vector in the canonical basis."""
        return tuple(Fraction(vector[p]) for p in self.pivots)

    def combination(self, coefficients: Sequence[Fraction]) -> Vector:
        if len(coefficients) != self.dim:
            raise DimensionMismatch("Subspace.combination", self.dim, len(coefficients))
        result = zero_vector(self.ambient_dim)
        for c, row in zip(coefficients, self.vectors):
            if c != 0:
                result = add_vectors(result, scale_vector(c, row))
        return result

    def __repr__(self) -> str:
        vectors = ", ".join("(" + ", ".join(format_scalar(x) for x in v) + ")" for v in self.vectors)
        return f"Subspace(dim={self.dim}/{self.ambient_dim}, basis=[{vectors}])"
