"""Central extensions and one-dimensional (anti)derivation extensions."""
from fractions import Fraction

from hjj.application.algebra.services import AlgebraService, algebra_service
from hjj.application.cohomology.services import CohomologyService, cohomology_service
from hjj.application.derivation.services import DerivationService, derivation_service
from hjj.application.representation.services import (
    RepresentationService,
    representation_service,
)
from hjj.core.logging import get_logger
from hjj.domain.algebra.entities import BilinearMap, ExtensionResult, HomAlgebra
from hjj.domain.algebra.errors import InvalidForm
from hjj.domain.cohomology.entities import Cochain
from hjj.domain.derivation.entities import DerivationQuery
from hjj.domain.linalg.entities import Matrix, zero_vector
from hjj.domain.linalg.errors import DimensionMismatch
from hjj.domain.linalg.operations import solve

logger = get_logger(__name__)


def _fresh_label(labels: tuple[str, ...], preferred: str) -> str:
    label = preferred
    while label in labels:
        label += "'"
    return label


class ExtensionService:
    """Extensions of a Hom-Jacobi-Jordan algebra by one dimension."""

    def __init__(
        self,
        algebras: AlgebraService | None = None,
        representations: RepresentationService | None = None,
        derivations: DerivationService | None = None,
        cohomology: CohomologyService | None = None,
    ):
        self._algebras = algebras or algebra_service
        self._representations = representations or representation_service
        self._derivations = derivations or derivation_service
        self._cohomology = cohomology or cohomology_service

    def _check_form(self, a: HomAlgebra, theta: BilinearMap) -> None:
        if theta.dim != a.dim or theta.dim_out != 1:
            raise InvalidForm(f"expected a scalar form on a {a.dim}-dimensional algebra")
        if not theta.is_symmetric():
            raise InvalidForm("theta is not symmetric")

    def _extended_product(self, a: HomAlgebra, theta: BilinearMap) -> BilinearMap:
        n = a.dim

        def value(i: int, j: int) -> tuple[Fraction, ...]:
            if i == n or j == n:
                return zero_vector(n + 1)
            return (*a.c[i][j], theta.values[i][j][0])

        return BilinearMap.from_function(n + 1, n + 1, value)

    def central_extension(self, a: HomAlgebra, theta: BilinearMap) -> ExtensionResult:
        """
        The algebra A + Kc with u . v = u * v + theta(u, v) c and c central, alpha(c) = c.

        Args:
            a: Algebra
            theta: Symmetric scalar bilinear form on A

        Returns:
            ExtensionResult; valid when theta is alpha-invariant and d^2 theta = 0 for the
            trivial representation

        Raises:
            InvalidForm: When theta is not a symmetric form on A
        """
        self._check_form(a, theta)
        labels = (*a.basis_labels, _fresh_label(a.basis_labels, "c"))
        extended = HomAlgebra(
            self._extended_product(a, theta),
            a.alpha.direct_sum(Matrix.identity(1)),
            labels,
        )
        trivial = self._representations.trivial_rep(a)
        reasons: list[str] = []
        if theta.precompose(a.alpha) != theta:
            reasons.append("theta is not invariant under alpha x alpha")
        elif not self._cohomology.is_cocycle(trivial, Cochain.from_bilinear(theta)):
            reasons.append("d^2 theta is nonzero in the trivial complex")
        return ExtensionResult(extended, not reasons, tuple(reasons))

    def d_extension(self, a: HomAlgebra, d: Matrix) -> ExtensionResult:
        """
        The algebra A + KD with (u + mD)(v + nD) = u * v + m d(v) + n d(u), alpha(D) = D.

        Args:
            a: Algebra
            d: Linear map A -> A

        Returns:
            ExtensionResult; valid when d is an alpha-antiderivation with d o d = 0
        """
        n = a.dim
        if d.shape != (n, n):
            raise DimensionMismatch("d_extension", (n, n), d.shape)

        def value(i: int, j: int) -> tuple[Fraction, ...]:
            if i == n and j == n:
                return zero_vector(n + 1)
            if i == n:
                return (*d.column(j), Fraction(0))
            if j == n:
                return (*d.column(i), Fraction(0))
            return (*a.c[i][j], Fraction(0))

        labels = (*a.basis_labels, _fresh_label(a.basis_labels, "D"))
        extended = HomAlgebra(
            BilinearMap.from_function(n + 1, n + 1, value),
            a.alpha.direct_sum(Matrix.identity(1)),
            labels,
        )
        reasons: list[str] = []
        if not self._derivations.is_member(DerivationQuery(a, None, 1, True), d):
            reasons.append("d is not an alpha-antiderivation")
        if not (d @ d).is_zero():
            reasons.append("d o d is nonzero")
        return ExtensionResult(extended, not reasons, tuple(reasons))

    def central_extension_isomorphism(
        self, a: HomAlgebra, theta1: BilinearMap, theta2: BilinearMap
    ) -> Matrix | None:
        """
        Isomorphism u + sc -> u + (s + g(u))c between two central extensions.

        Args:
            a: Algebra
            theta1: Form of the source extension
            theta2: Form of the target extension

        Returns:
            Matrix of the isomorphism when theta1 - theta2 = delta^1 g for a compatible g,
            otherwise None
        """
        self._check_form(a, theta1)
        self._check_form(a, theta2)
        trivial = self._representations.trivial_rep(a)
        skew, delta = self._cohomology.skew_coboundary(trivial, 1)
        difference = Cochain.from_bilinear(theta1 - theta2)
        solution = solve(delta, difference.coeffs)
        if solution is None:
            return None
        g = skew.combination(solution)
        n = a.dim
        values = {(i, i): Fraction(1) for i in range(n + 1)}
        values.update({(n, j): g[j] for j in range(n) if g[j] != 0})
        phi = Matrix.from_sparse(n + 1, n + 1, values)

        source = self.central_extension(a, theta1).algebra
        target = self.central_extension(a, theta2).algebra
        if not self._algebras.check_morphism(source, target, phi).valid:
            logger.warning("Central extension map for g=%s is not a morphism", g)
            return None
        return phi


extension_service = ExtensionService()
