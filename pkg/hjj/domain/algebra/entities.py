"""Hom-algebra domain entities."""
from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as cartesian

from hjj.domain.algebra.errors import AsymmetricProduct
from hjj.domain.linalg.entities import (
    Matrix,
    Vector,
    add_vectors,
    is_zero_vector,
    unit_vector,
    zero_vector,
)
from hjj.domain.linalg.errors import DimensionMismatch


@dataclass(frozen=True)
class BilinearMap:
    """Bilinear map Q^dim x Q^dim -> Q^dim_out.

    values[i][j] is the image of (e_i, e_j); forms have dim_out == 1.
    """

    dim: int
    dim_out: int
    values: tuple[tuple[Vector, ...], ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.dim or any(len(row) != self.dim for row in self.values):
            raise DimensionMismatch("BilinearMap", (self.dim, self.dim), len(self.values))
        if any(len(v) != self.dim_out for row in self.values for v in row):
            raise DimensionMismatch("BilinearMap values", self.dim_out, "other length")

    @classmethod
    def zero(cls, dim: int, dim_out: int | None = None) -> BilinearMap:
        dim_out = dim if dim_out is None else dim_out
        row = tuple(zero_vector(dim_out) for _ in range(dim))
        return cls(dim, dim_out, tuple(row for _ in range(dim)))

    @classmethod
    def from_function(
        cls, dim: int, dim_out: int, f: Callable[[int, int], Sequence[Fraction]]
    ) -> BilinearMap:
        return cls(
            dim,
            dim_out,
            tuple(tuple(tuple(f(i, j)) for j in range(dim)) for i in range(dim)),
        )

    @classmethod
    def from_entries(
        cls, dim: int, dim_out: int, entries: dict[tuple[int, int], Sequence[Fraction]]
    ) -> BilinearMap:
        """Sparse construction; unlisted pairs map to zero."""
        zero = zero_vector(dim_out)
        return cls.from_function(dim, dim_out, lambda i, j: tuple(entries.get((i, j), zero)))

    @classmethod
    def from_form(cls, form: Matrix) -> BilinearMap:
        """Scalar bilinear form with Gram matrix form[i, j] = theta(e_i, e_j)."""
        return cls.from_function(form.rows, 1, lambda i, j: (form[i, j],))

    def __call__(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch("BilinearMap evaluation", self.dim, (len(x), len(y)))
        result = [Fraction(0)] * self.dim_out
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                c = xi * yj
                for k, value in enumerate(self.values[i][j]):
                    if value != 0:
                        result[k] += c * value
        return tuple(result)

    def is_symmetric(self) -> bool:
        return all(
            self.values[i][j] == self.values[j][i]
            for i in range(self.dim)
            for j in range(i + 1, self.dim)
        )

    def is_zero(self) -> bool:
        return all(is_zero_vector(v) for row in self.values for v in row)

    def gram(self) -> Matrix:
        """Gram matrix of a scalar form."""
        if self.dim_out != 1:
            raise DimensionMismatch("BilinearMap.gram", 1, self.dim_out)
        return Matrix.from_rows([[self.values[i][j][0] for j in range(self.dim)] for i in range(self.dim)])

    def _combine(self, other: BilinearMap, sign: int) -> BilinearMap:
        if (self.dim, self.dim_out) != (other.dim, other.dim_out):
            raise DimensionMismatch("BilinearMap sum", (self.dim, self.dim_out), (other.dim, other.dim_out))
        return BilinearMap.from_function(
            self.dim,
            self.dim_out,
            lambda i, j: tuple(a + sign * b for a, b in zip(self.values[i][j], other.values[i][j])),
        )

    def __add__(self, other: BilinearMap) -> BilinearMap:
        return self._combine(other, 1)

    def __sub__(self, other: BilinearMap) -> BilinearMap:
        return self._combine(other, -1)

    def scale(self, c: Fraction | int) -> BilinearMap:
        return BilinearMap.from_function(
            self.dim, self.dim_out, lambda i, j: tuple(c * x for x in self.values[i][j])
        )

    def precompose(self, f: Matrix, g: Matrix | None = None) -> BilinearMap:
        """(x, y) -> self(f x, g y); g defaults to f."""
        g = f if g is None else g
        columns_f = [f.column(i) for i in range(self.dim)]
        columns_g = [g.column(j) for j in range(self.dim)]
        return BilinearMap.from_function(
            self.dim, self.dim_out, lambda i, j: self(columns_f[i], columns_g[j])
        )

    def tensor(self, other: BilinearMap) -> BilinearMap:
        """Product on the tensor basis, index (i, p) -> i * other.dim + p."""
        n, m = self.dim, other.dim

        def value(a: int, b: int) -> Vector:
            i, p = divmod(a, m)
            j, q = divmod(b, m)
            left, right = self.values[i][j], other.values[p][q]
            return tuple(x * y for x in left for y in right)

        return BilinearMap.from_function(n * m, self.dim_out * other.dim_out, value)


@dataclass(frozen=True)
class HomAlgebra:
    """Finite-dimensional Hom-algebra (A, *, alpha) with commutative product.

    product.values[i][j][k] is the structure constant c[i][j][k]; alpha uses the column
    convention alpha(e_j) = sum_i alpha[i, j] e_i.
    """

    product: BilinearMap
    alpha: Matrix
    basis_labels: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        n = self.product.dim
        if self.product.dim_out != n:
            raise DimensionMismatch("HomAlgebra product", n, self.product.dim_out)
        if self.alpha.shape != (n, n):
            raise DimensionMismatch("HomAlgebra alpha", (n, n), self.alpha.shape)
        if not self.product.is_symmetric():
            raise AsymmetricProduct()
        if not self.basis_labels:
            object.__setattr__(self, "basis_labels", tuple(f"e{i + 1}" for i in range(n)))
        elif len(self.basis_labels) != n:
            raise DimensionMismatch("HomAlgebra labels", n, len(self.basis_labels))

    @property
    def dim(self) -> int:
        return self.product.dim

    @property
    def c(self) -> tuple[tuple[Vector, ...], ...]:
        return self.product.values

    def basis_vector(self, i: int) -> Vector:
        return unit_vector(self.dim, i)

    def multiply(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
        return self.product(x, y)

    def twist(self, x: Sequence[Fraction], power: int = 1) -> Vector:
        return (self.alpha if power == 1 else self.alpha.power(power)).apply(x)

    def left_matrix(self, x: Sequence[Fraction]) -> Matrix:
        """Matrix of L_x: y -> x * y."""
        columns = [self.multiply(x, self.basis_vector(j)) for j in range(self.dim)]
        return Matrix.from_columns(columns, self.dim)

    def is_regular(self) -> bool:
        return self.alpha.is_invertible()

    def label(self, index: int) -> str:
        return self.basis_labels[index]


@dataclass(frozen=True)
class Witness:
    """A basis tuple on which an identity fails, with the nonzero residual."""

    args: tuple[int, ...]
    residual: Vector


@dataclass(frozen=True)
class IdentityCheck:
    """Outcome of checking one identity on every basis tuple, in lexicographic order."""

    name: str
    failures: tuple[Witness, ...] = ()

    @property
    def holds(self) -> bool:
        return not self.failures

    @property
    def witness(self) -> Witness | None:
        return self.failures[0] if self.failures else None

    @classmethod
    def run(
        cls,
        name: str,
        tuples: Iterable[tuple[int, ...]],
        residual: Callable[..., Sequence[Fraction]],
    ) -> IdentityCheck:
        failures = []
        for args in tuples:
            value = tuple(residual(*args))
            if not is_zero_vector(value):
                failures.append(Witness(args, value))
        return cls(name, tuple(failures))


@dataclass(frozen=True)
class AxiomReport:
    """Result of verifying the Hom-Jacobi-Jordan axioms."""

    commutative: IdentityCheck
    multiplicative: IdentityCheck
    hom_jacobi: IdentityCheck

    @property
    def valid(self) -> bool:
        return self.commutative.holds and self.multiplicative.holds and self.hom_jacobi.holds

    @property
    def checks(self) -> tuple[IdentityCheck, ...]:
        return (self.commutative, self.multiplicative, self.hom_jacobi)


@dataclass(frozen=True)
class MorphismReport:
    """Whether a linear map intertwines twists and products."""

    twist: IdentityCheck
    product: IdentityCheck

    @property
    def valid(self) -> bool:
        return self.twist.holds and self.product.holds

    @property
    def checks(self) -> tuple[IdentityCheck, ...]:
        return (self.twist, self.product)


@dataclass(frozen=True)
class ExtensionResult:
    """An extended algebra and whether the defining data satisfy the extension criterion."""

    algebra: HomAlgebra
    valid: bool
    reasons: tuple[str, ...] = field(default_factory=tuple)


def sorted_pairs(n: int) -> Iterable[tuple[int, int]]:
    return ((i, j) for i in range(n) for j in range(i, n))


def sorted_triples(n: int) -> Iterable[tuple[int, int, int]]:
    return ((i, j, k) for i in range(n) for j in range(i, n) for k in range(j, n))


def ordered_triples(n: int) -> Iterable[tuple[int, int, int]]:
    return cartesian(range(n), repeat=3)  # type: ignore[return-value]


def sum_vectors(vectors: Iterable[Sequence[Fraction]], n: int) -> Vector:
    return add_vectors(zero_vector(n), *vectors)
