"""Relative Rota-Baxter operators and the reports built around them."""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from hjj.domain.algebra.entities import BilinearMap, IdentityCheck, MorphismReport
from hjj.domain.linalg.entities import Matrix, Vector
from hjj.domain.linalg.errors import DimensionMismatch
from hjj.domain.representation.entities import Representation


@dataclass(frozen=True)
class RBOperator:
    """Linear map T: V -> A relative to a representation (V, rho, phi).

    t has shape (dim A, dim V); column j is T(v_j).
    """

    rep: Representation
    t: Matrix

    def __post_init__(self) -> None:
        expected = (self.rep.dim_a, self.rep.dim_v)
        if self.t.shape != expected:
            raise DimensionMismatch("RBOperator", expected, self.t.shape)

    def apply(self, v: Sequence[Fraction]) -> Vector:
        return self.t.apply(v)

    def image(self, j: int) -> Vector:
        return self.t.column(j)

    def with_matrix(self, t: Matrix) -> RBOperator:
        return RBOperator(self.rep, t)


@dataclass(frozen=True)
class RBMorphism:
    """Pair (phi_A, phi_V) of an algebra map and a module map."""

    phi_a: Matrix
    phi_v: Matrix

    def __post_init__(self) -> None:
        if not self.phi_a.is_square():
            raise DimensionMismatch("RBMorphism phi_a", (self.phi_a.rows, self.phi_a.rows), self.phi_a.shape)
        if not self.phi_v.is_square():
            raise DimensionMismatch("RBMorphism phi_v", (self.phi_v.rows, self.phi_v.rows), self.phi_v.shape)

    @classmethod
    def identity(cls, op: RBOperator) -> RBMorphism:
        return cls(Matrix.identity(op.rep.dim_a), Matrix.identity(op.rep.dim_v))

    def is_invertible(self) -> bool:
        return self.phi_a.is_invertible() and self.phi_v.is_invertible()

    def inverse(self) -> RBMorphism:
        return RBMorphism(self.phi_a.inverse(), self.phi_v.inverse())


@dataclass(frozen=True)
class RBReport:
    """T phi = alpha T and T(u) * T(v) = T(rho(Tu)v + rho(Tv)u)."""

    twist: IdentityCheck
    product: IdentityCheck

    @property
    def valid(self) -> bool:
        return self.twist.holds and self.product.holds

    @property
    def checks(self) -> tuple[IdentityCheck, ...]:
        return (self.twist, self.product)


@dataclass(frozen=True)
class GeneratorReport:
    """Whether Z generates the linear deformation T + tZ.

    derivation_verdict is the same question asked as membership of Z in the
    phi^0-derivations of the induced algebra with values in the induced representation.
    """

    twist: IdentityCheck
    rota_baxter: IdentityCheck
    mixed: IdentityCheck
    derivation_verdict: bool

    @property
    def valid(self) -> bool:
        return self.twist.holds and self.rota_baxter.holds and self.mixed.holds

    @property
    def checks(self) -> tuple[IdentityCheck, ...]:
        return (self.twist, self.rota_baxter, self.mixed)


@dataclass(frozen=True)
class NijenhuisReport:
    twist: IdentityCheck
    nijenhuis: IdentityCheck
    deformed_product: BilinearMap

    @property
    def valid(self) -> bool:
        return self.twist.holds and self.nijenhuis.holds

    @property
    def checks(self) -> tuple[IdentityCheck, ...]:
        return (self.twist, self.nijenhuis)


@dataclass(frozen=True)
class RBMorphismReport:
    """Morphism conditions for (phi_A, phi_V) from T' to T.

    inverse_pair is None unless both maps are invertible; induced_morphism is None unless
    both operators are Rota-Baxter and the pair is a morphism.
    """

    algebra_morphism: MorphismReport
    twist: IdentityCheck
    intertwining: IdentityCheck
    equivariance: IdentityCheck
    inverse_pair: bool | None = None
    induced_morphism: MorphismReport | None = None

    @property
    def valid(self) -> bool:
        return (
            self.algebra_morphism.valid
            and self.twist.holds
            and self.intertwining.holds
            and self.equivariance.holds
        )

    @property
    def checks(self) -> tuple[IdentityCheck, ...]:
        return (
            *self.algebra_morphism.checks,
            self.twist,
            self.intertwining,
            self.equivariance,
        )
