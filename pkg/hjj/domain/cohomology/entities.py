"""Cochains, cochain operators and cohomology reports."""
from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from hjj.domain.algebra.entities import BilinearMap
from hjj.domain.linalg.entities import Matrix, Subspace, Vector, is_zero_vector
from hjj.domain.linalg.errors import DimensionMismatch
from hjj.domain.linalg.operations import SparseRow


def cochain_index(o: int, args: Sequence[int], dim_a: int) -> int:
    """Coordinate of f(e_args) = e_o: output major, input tuple little-endian."""
    index = 0
    weight = 1
    for i in args:
        index += i * weight
        weight *= dim_a
    return o * weight + index


def basis_tuples(dim_a: int, n: int) -> Iterator[tuple[int, ...]]:
    return product(range(dim_a), repeat=n)


@dataclass(frozen=True)
class Cochain:
    """n-linear map A^n -> V given by its coefficients.

    Degree-0 cochains are vectors of V.
    """

    degree: int
    dim_a: int
    dim_v: int
    coeffs: Vector

    def __post_init__(self) -> None:
        expected = self.dim_v * self.dim_a**self.degree
        if len(self.coeffs) != expected:
            raise DimensionMismatch("Cochain", expected, len(self.coeffs))

    @classmethod
    def zero(cls, degree: int, dim_a: int, dim_v: int) -> Cochain:
        return cls(degree, dim_a, dim_v, (Fraction(0),) * (dim_v * dim_a**degree))

    @classmethod
    def from_matrix(cls, m: Matrix) -> Cochain:
        """1-cochain of the linear map with matrix m (shape dim_v x dim_a)."""
        return cls(1, m.cols, m.rows, m.entries)

    @classmethod
    def from_bilinear(cls, b: BilinearMap) -> Cochain:
        coeffs = [Fraction(0)] * (b.dim_out * b.dim**2)
        for i in range(b.dim):
            for j in range(b.dim):
                for o, value in enumerate(b.values[i][j]):
                    coeffs[cochain_index(o, (i, j), b.dim)] = value
        return cls(2, b.dim, b.dim_out, tuple(coeffs))

    def value(self, args: Sequence[int]) -> Vector:
        """f(e_args)."""
        if len(args) != self.degree:
            raise DimensionMismatch("Cochain.value", self.degree, len(args))
        return tuple(self.coeffs[cochain_index(o, args, self.dim_a)] for o in range(self.dim_v))

    def to_matrix(self) -> Matrix:
        if self.degree != 1:
            raise DimensionMismatch("Cochain.to_matrix", 1, self.degree)
        return Matrix(self.dim_v, self.dim_a, self.coeffs)

    def to_bilinear(self) -> BilinearMap:
        if self.degree != 2:
            raise DimensionMismatch("Cochain.to_bilinear", 2, self.degree)
        return BilinearMap.from_function(self.dim_a, self.dim_v, lambda i, j: self.value((i, j)))

    def is_zero(self) -> bool:
        return is_zero_vector(self.coeffs)


@dataclass(frozen=True)
class CochainOperator:
    """Sparse linear operator between full cochain coordinate spaces.

    rows[r] holds the coefficients of output coordinate r.
    """

    name: str
    degree: int
    rows: tuple[SparseRow, ...]
    cols: int

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.cols)

    def apply(self, vector: Sequence[Fraction]) -> Vector:
        if len(vector) != self.cols:
            raise DimensionMismatch(f"{self.name} apply", self.cols, len(vector))
        return tuple(
            sum((x * vector[j] for j, x in row.items()), Fraction(0)) for row in self.rows
        )

    def restrict(self, domain: Subspace) -> Matrix:
        """Matrix from the canonical basis of domain to the full target space."""
        if domain.ambient_dim != self.cols:
            raise DimensionMismatch(f"{self.name} restrict", self.cols, domain.ambient_dim)
        return Matrix.from_columns([self.apply(v) for v in domain.vectors], len(self.rows))

    def to_matrix(self) -> Matrix:
        return Matrix.from_sparse(
            len(self.rows),
            self.cols,
            {(r, j): x for r, row in enumerate(self.rows) for j, x in row.items()},
        )


@dataclass(frozen=True)
class CohomologyReport:
    """Cocycles, coboundaries and cohomology in one degree.

    dim_h is None exactly when B is not contained in Z; a warning then explains why.
    Subspaces live in the full coordinate space of degree-n cochains.
    """

    degree: int
    dim_c: int
    dim_a_skew: int
    z: Subspace
    b: Subspace
    h: tuple[Vector, ...] | None
    warnings: tuple[str, ...] = field(default_factory=tuple)

    @property
    def dim_z(self) -> int:
        return self.z.dim

    @property
    def dim_b(self) -> int:
        return self.b.dim

    @property
    def dim_h(self) -> int | None:
        return None if self.h is None else len(self.h)
