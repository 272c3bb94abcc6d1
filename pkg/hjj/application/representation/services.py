"""Representation application services."""
from hjj.application.algebra.services import AlgebraService, algebra_service
from hjj.core.logging import get_logger
from hjj.domain.algebra.entities import HomAlgebra, IdentityCheck, sorted_pairs
from hjj.domain.linalg.entities import Matrix, Subspace
from hjj.domain.representation.entities import Representation, RepresentationReport
from hjj.domain.representation.errors import AlgebraMismatch, NotAHomIdeal, SingularTwist

logger = get_logger(__name__)


def twist_power(a: HomAlgebra, s: int) -> Matrix:
    """alpha^s, raising SingularTwist for negative s on a singular twist."""
    if s < 0 and not a.alpha.is_invertible():
        raise SingularTwist("alpha", s)
    return a.alpha.power(s)


class RepresentationService:
    """Build and verify representations."""

    def __init__(self, algebras: AlgebraService | None = None):
        self._algebras = algebras or algebra_service

    def verify_representation(self, r: Representation) -> RepresentationReport:
        """
        Check both representation identities on basis elements and pairs.

        Args:
            r: Representation to check

        Returns:
            RepresentationReport; matrix residuals are flattened row-major
        """
        a = r.algebra
        alpha_rho = [r.action(a.alpha.column(i)) for i in range(a.dim)]
        twist = IdentityCheck.run(
            "twist",
            ((i,) for i in range(a.dim)),
            lambda i: (r.phi @ r.rho[i] - alpha_rho[i] @ r.phi).entries,
        )
        product = IdentityCheck.run(
            "product",
            sorted_pairs(a.dim),
            lambda i, j: (
                r.action(a.c[i][j]) @ r.phi
                + alpha_rho[i] @ r.rho[j]
                + alpha_rho[j] @ r.rho[i]
            ).entries,
        )
        logger.debug(
            "Representation of dim %d: twist %s, product %s", r.dim_v, twist.holds, product.holds
        )
        return RepresentationReport(twist, product)

    def adjoint_rep(self, a: HomAlgebra, s: int = 0) -> Representation:
        """
        The alpha^s-adjoint representation rho(x) = L_{alpha^s x}, phi = alpha.

        Args:
            a: Algebra
            s: Power of the twist; negative powers need an invertible alpha

        Returns:
            Representation of a on itself
        """
        power = twist_power(a, s)
        rho = tuple(a.left_matrix(power.column(i)) for i in range(a.dim))
        return Representation(a, rho, a.alpha)

    def trivial_rep(self, a: HomAlgebra) -> Representation:
        """One-dimensional representation with zero action and phi = 1."""
        return Representation(a, tuple(Matrix.zeros(1, 1) for _ in range(a.dim)), Matrix.identity(1))

    def direct_sum_rep(self, r1: Representation, r2: Representation) -> Representation:
        """
        Block-diagonal sum of two representations of the same algebra.

        Raises:
            AlgebraMismatch: When the base algebras differ
        """
        if not r1.same_algebra(r2):
            raise AlgebraMismatch("direct_sum_rep")
        rho = tuple(m1.direct_sum(m2) for m1, m2 in zip(r1.rho, r2.rho))
        return Representation(r1.algebra, rho, r1.phi.direct_sum(r2.phi))

    def ideal_rep(self, a: HomAlgebra, s: Subspace) -> Representation:
        """
        Restriction of the adjoint action to a Hom-ideal, in its canonical basis.

        Args:
            a: Algebra
            s: Hom-ideal of a

        Returns:
            Representation (s, x -> L_x|s, alpha|s)

        Raises:
            NotAHomIdeal: When s is not stable
        """
        if not self._algebras.check_hom_ideal(a, s):
            raise NotAHomIdeal()
        basis = s.vectors

        def restricted(images: list) -> Matrix:
            return Matrix.from_columns([s.coordinates(v) for v in images], s.dim)

        rho = tuple(
            restricted([a.multiply(a.basis_vector(i), b) for b in basis]) for i in range(a.dim)
        )
        phi = restricted([a.twist(b) for b in basis])
        return Representation(a, rho, phi)


representation_service = RepresentationService()
