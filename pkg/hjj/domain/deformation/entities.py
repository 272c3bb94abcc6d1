"""Formal series and deformation reports."""
from __future__ import annotations

from dataclasses import dataclass, field

from hjj.domain.algebra.entities import BilinearMap, HomAlgebra, IdentityCheck
from hjj.domain.cohomology.entities import CohomologyReport
from hjj.domain.deformation.errors import InvalidSeries
from hjj.domain.linalg.entities import Matrix


@dataclass(frozen=True)
class FormalProductSeries:
    """Truncated product mu_t = mu_0 + mu_1 t + ... + mu_k t^k on an algebra.

    mu_0 is the algebra's own product and every coefficient is symmetric.
    """

    algebra: HomAlgebra
    coeffs: tuple[BilinearMap, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise InvalidSeries("a series needs at least the order-0 coefficient")
        if self.coeffs[0] != self.algebra.product:
            raise InvalidSeries("mu_0 must equal the product of the algebra")
        for i, mu in enumerate(self.coeffs):
            if mu.dim != self.algebra.dim or mu.dim_out != self.algebra.dim:
                raise InvalidSeries(f"mu_{i} has the wrong shape")
            if not mu.is_symmetric():
                raise InvalidSeries(f"mu_{i} is not symmetric")

    @classmethod
    def constant(cls, algebra: HomAlgebra, order: int = 0) -> FormalProductSeries:
        """(mu, 0, ..., 0)."""
        zero = BilinearMap.zero(algebra.dim)
        return cls(algebra, (algebra.product, *(zero,) * order))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def degree(self) -> int:
        """Highest i >= 1 with a nonzero mu_i, or 0; trailing zero coefficients do not count."""
        return max((i for i in range(1, len(self.coeffs)) if not self.coeffs[i].is_zero()), default=0)

    def coefficient(self, i: int) -> BilinearMap:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return BilinearMap.zero(self.algebra.dim)


@dataclass(frozen=True)
class FormalMapSeries:
    """Truncated series of linear maps phi_0 + phi_1 t + ... + phi_k t^k."""

    coeffs: tuple[Matrix, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise InvalidSeries("a series needs at least the order-0 coefficient")
        shape = self.coeffs[0].shape
        for i, m in enumerate(self.coeffs):
            if m.shape != shape:
                raise InvalidSeries(f"coefficient {i} has shape {m.shape}, expected {shape}")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def degree(self) -> int:
        return max((i for i in range(1, len(self.coeffs)) if not self.coeffs[i].is_zero()), default=0)

    @property
    def shape(self) -> tuple[int, int]:
        return self.coeffs[0].shape

    def coefficient(self, i: int) -> Matrix:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Matrix.zeros(*self.shape)


def first_failing(checks: tuple[IdentityCheck, ...]) -> int | None:
    return next((s for s, check in enumerate(checks) if not check.holds), None)


@dataclass(frozen=True)
class LinearDeformationReport:
    """The four conditions for mu + t psi to be a deformation."""

    compatible: IdentityCheck
    symmetric: IdentityCheck
    hom_jacobi: IdentityCheck
    mixed: IdentityCheck

    @property
    def valid(self) -> bool:
        return all(check.holds for check in self.checks)

    @property
    def checks(self) -> tuple[IdentityCheck, ...]:
        return (self.compatible, self.symmetric, self.hom_jacobi, self.mixed)


@dataclass(frozen=True)
class FormalDeformationReport:
    """Per-order deformation residuals; orders[s] is the check at order s.

    compatible lists the coefficients leaving C^2 (args (i, x, y)); it does not enter
    the verdict.
    """

    orders: tuple[IdentityCheck, ...]
    compatible: IdentityCheck

    @property
    def first_failing_order(self) -> int | None:
        return first_failing(self.orders)

    @property
    def valid(self) -> bool:
        return self.first_failing_order is None


@dataclass(frozen=True)
class LinearEquivalenceReport:
    """Id + tN as a morphism from (A, * + t psi2) to (A, * + t psi1), order by order."""

    twist: IdentityCheck
    order1: IdentityCheck
    order2: IdentityCheck
    order3: IdentityCheck

    @property
    def valid(self) -> bool:
        return all(check.holds for check in self.checks)

    @property
    def checks(self) -> tuple[IdentityCheck, ...]:
        return (self.twist, self.order1, self.order2, self.order3)


@dataclass(frozen=True)
class EquivalenceReport:
    twist: IdentityCheck
    orders: tuple[IdentityCheck, ...]
    linear: LinearEquivalenceReport | None = None

    @property
    def first_failing_order(self) -> int | None:
        return first_failing(self.orders)

    @property
    def valid(self) -> bool:
        return self.twist.holds and self.first_failing_order is None


@dataclass(frozen=True)
class RigidityReport:
    """Second cohomology of the alpha^-1-adjoint representation."""

    cohomology: CohomologyReport
    warnings: tuple[str, ...] = field(default_factory=tuple)

    @property
    def rigid_sufficient(self) -> bool | None:
        dim_h = self.cohomology.dim_h
        return None if dim_h is None else dim_h == 0


@dataclass(frozen=True)
class RBFormalReport:
    """Per-order residuals of a formal deformation of a Rota-Baxter operator.

    t1_derivation is None for order-0 series or when order 1 fails.
    """

    twist: IdentityCheck
    orders: tuple[IdentityCheck, ...]
    t1_derivation: bool | None = None

    @property
    def first_failing_order(self) -> int | None:
        return first_failing(self.orders)

    @property
    def valid(self) -> bool:
        return self.twist.holds and self.first_failing_order is None
