"""Representation entities."""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from hjj.domain.algebra.entities import HomAlgebra, IdentityCheck
from hjj.domain.linalg.entities import Matrix, Vector
from hjj.domain.linalg.errors import DimensionMismatch


@dataclass(frozen=True)
class Representation:
    """Module (V, rho, phi) over a Hom-algebra.

    rho[i] is the dim_v x dim_v matrix of the action of e_i; phi is an endomorphism of V.
    """

    algebra: HomAlgebra
    rho: tuple[Matrix, ...]
    phi: Matrix

    def __post_init__(self) -> None:
        if len(self.rho) != self.algebra.dim:
            raise DimensionMismatch("Representation rho", self.algebra.dim, len(self.rho))
        n = self.phi.rows
        if self.phi.shape != (n, n):
            raise DimensionMismatch("Representation phi", (n, n), self.phi.shape)
        for m in self.rho:
            if m.shape != (n, n):
                raise DimensionMismatch("Representation rho matrix", (n, n), m.shape)

    @property
    def dim_v(self) -> int:
        return self.phi.rows

    @property
    def dim_a(self) -> int:
        return self.algebra.dim

    def action(self, x: Sequence[Fraction]) -> Matrix:
        """rho(x) = sum x_i rho[i]."""
        if len(x) != self.dim_a:
            raise DimensionMismatch("Representation.action", self.dim_a, len(x))
        result = Matrix.zeros(self.dim_v, self.dim_v)
        for xi, m in zip(x, self.rho):
            if xi != 0:
                result = result + m.scale(xi)
        return result

    def act(self, x: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
        return self.action(x).apply(v)

    def same_algebra(self, other: Representation) -> bool:
        return (
            self.algebra.product == other.algebra.product
            and self.algebra.alpha == other.algebra.alpha
        )


@dataclass(frozen=True)
class RepresentationReport:
    """Outcome of checking phi rho(x) = rho(alpha x) phi and the product identity."""

    twist: IdentityCheck
    product: IdentityCheck

    @property
    def valid(self) -> bool:
        return self.twist.holds and self.product.holds

    @property
    def checks(self) -> tuple[IdentityCheck, ...]:
        return (self.twist, self.product)
