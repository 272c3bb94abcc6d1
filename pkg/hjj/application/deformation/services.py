"""Linear and formal deformation services.

A series of order k is checked for every order s <= 2k; beyond that all terms vanish, so
"passes" always means "passes at the stated truncation".
"""
from collections.abc import Callable

from hjj.application.algebra.services import AlgebraService, algebra_service
from hjj.application.cohomology.services import CohomologyService, cohomology_service
from hjj.application.derivation.services import DerivationService, derivation_service
from hjj.application.representation.services import (
    RepresentationService,
    representation_service,
)
from hjj.application.rotabaxter.services import RotaBaxterService, rota_baxter_service
from hjj.core.config import Settings, get_settings
from hjj.core.logging import get_logger
from hjj.domain.algebra.entities import (
    BilinearMap,
    HomAlgebra,
    IdentityCheck,
    sorted_pairs,
    sorted_triples,
    sum_vectors,
)
from hjj.domain.cohomology.entities import Cochain
from hjj.domain.deformation.entities import (
    EquivalenceReport,
    FormalDeformationReport,
    FormalMapSeries,
    FormalProductSeries,
    LinearDeformationReport,
    LinearEquivalenceReport,
    RBFormalReport,
    RigidityReport,
)
from hjj.domain.deformation.errors import BridgeViolation, InvalidSeries
from hjj.domain.derivation.entities import DerivationQuery
from hjj.domain.linalg.entities import Matrix, Vector, add_vectors, is_zero_vector
from hjj.domain.linalg.errors import DimensionMismatch
from hjj.domain.linalg.operations import image
from hjj.domain.representation.errors import AlgebraMismatch, SingularTwist
from hjj.domain.rotabaxter.entities import RBOperator

logger = get_logger(__name__)


def _subtract(x: Vector, y: Vector) -> Vector:
    return tuple(a - b for a, b in zip(x, y, strict=True))


def _cyclic(
    a: HomAlgebra, outer: BilinearMap, inner: BilinearMap
) -> Callable[[int, int, int], Vector]:
    """(x, y, z) -> sum over cyclic permutations of outer(inner(x, y), alpha z)."""
    twisted = [a.alpha.column(i) for i in range(a.dim)]

    def value(x: int, y: int, z: int) -> Vector:
        return sum_vectors(
            (outer(inner.values[p][q], twisted[r]) for p, q, r in ((x, y, z), (y, z, x), (z, x, y))),
            a.dim,
        )

    return value


class DeformationService:
    """Deformation equations for products and Rota-Baxter operators."""

    def __init__(
        self,
        settings: Settings | None = None,
        algebras: AlgebraService | None = None,
        representations: RepresentationService | None = None,
        derivations: DerivationService | None = None,
        cohomology: CohomologyService | None = None,
        rota_baxter: RotaBaxterService | None = None,
    ):
        self._settings = settings or get_settings()
        self._algebras = algebras or algebra_service
        self._representations = representations or representation_service
        self._derivations = derivations or derivation_service
        self._cohomology = cohomology or cohomology_service
        self._rota_baxter = rota_baxter or rota_baxter_service

    def _closed_in_shifted_adjoint(self, a: HomAlgebra, mu: BilinearMap) -> bool:
        """d^2 mu = 0 for the alpha^-1-adjoint representation, on full 2-cochains."""
        rep = self._representations.adjoint_rep(a, -1)
        return self._cohomology.differential(rep, Cochain.from_bilinear(mu), "d").is_zero()

    def _shifted_coboundary(self, a: HomAlgebra, n: Matrix) -> BilinearMap:
        """delta^1 n for the alpha^-1-adjoint representation."""
        rep = self._representations.adjoint_rep(a, -1)
        return self._cohomology.differential(rep, Cochain.from_matrix(n), "delta").to_bilinear()

    def _check_square(self, a: HomAlgebra, m: Matrix, name: str) -> None:
        if m.shape != (a.dim, a.dim):
            raise DimensionMismatch(name, (a.dim, a.dim), m.shape)

    # ==========================================
    # Linear deformations of products
    # ==========================================

    def linear_mult_deformation_check(self, a: HomAlgebra, psi: BilinearMap) -> LinearDeformationReport:
        """
        Whether mu_t = mu + t psi is a deformation of a regular algebra.

        Args:
            a: Regular algebra
            psi: Bilinear map A x A -> A

        Returns:
            LinearDeformationReport with compatibility, symmetry, psi-Hom-Jacobi and the
            mixed identity

        Raises:
            SingularTwist: When alpha is not invertible
            BridgeViolation: When the mixed identity and d^2 psi = 0 disagree
        """
        if not a.is_regular():
            raise SingularTwist("alpha", -1)
        if psi.dim != a.dim or psi.dim_out != a.dim:
            raise DimensionMismatch("linear_mult_deformation_check", (a.dim, a.dim), (psi.dim, psi.dim_out))
        twisted = psi.precompose(a.alpha)
        compatible = IdentityCheck.run(
            "compatible",
            sorted_pairs(a.dim),
            lambda i, j: _subtract(a.alpha.apply(psi.values[i][j]), twisted.values[i][j]),
        )
        symmetric = IdentityCheck.run(
            "symmetric",
            ((i, j) for i in range(a.dim) for j in range(i + 1, a.dim)),
            lambda i, j: _subtract(psi.values[i][j], psi.values[j][i]),
        )
        hom_jacobi = IdentityCheck.run("hom_jacobi", sorted_triples(a.dim), _cyclic(a, psi, psi))
        first, second = _cyclic(a, a.product, psi), _cyclic(a, psi, a.product)
        mixed = IdentityCheck.run(
            "mixed", sorted_triples(a.dim), lambda x, y, z: add_vectors(first(x, y, z), second(x, y, z))
        )
        report = LinearDeformationReport(compatible, symmetric, hom_jacobi, mixed)
        if symmetric.holds and self._settings.ASSERT_INVARIANTS:
            if mixed.holds != self._closed_in_shifted_adjoint(a, psi):
                raise BridgeViolation("mixed identity vs d^2 psi = 0")
        return report

    # ==========================================
    # Formal deformations of products
    # ==========================================

    def formal_deformation_check(self, s: FormalProductSeries) -> FormalDeformationReport:
        """
        Evaluate the deformation equation at each order 0..2k on sorted basis triples.

        Order s collects sum_i mu_i(mu_(s-i)(x, y), alpha z) over cyclic permutations.

        Args:
            s: Series of order k

        Returns:
            FormalDeformationReport with the first failing order and its witnesses

        Raises:
            BridgeViolation: When order 1 passes but d^2 mu_1 != 0 on a regular algebra
        """
        a = s.algebra
        orders = []
        for order in range(2 * s.order + 1):
            terms = [
                _cyclic(a, s.coefficient(i), s.coefficient(order - i))
                for i in range(max(0, order - s.order), min(order, s.order) + 1)
            ]
            orders.append(
                IdentityCheck.run(
                    f"order {order}",
                    sorted_triples(a.dim),
                    lambda x, y, z, terms=terms: sum_vectors((term(x, y, z) for term in terms), a.dim),
                )
            )

        def leaves_c2(i: int, x: int, y: int) -> Vector:
            mu = s.coeffs[i]
            return _subtract(a.alpha.apply(mu.values[x][y]), mu(a.alpha.column(x), a.alpha.column(y)))

        compatible = IdentityCheck.run(
            "compatible",
            ((i, x, y) for i in range(1, len(s.coeffs)) for x, y in sorted_pairs(a.dim)),
            leaves_c2,
        )
        report = FormalDeformationReport(tuple(orders), compatible)
        failing = report.first_failing_order
        logger.debug("Formal deformation of order %d: first failing order %s", s.order, failing)

        passes_order1 = s.order >= 1 and (failing is None or failing > 1)
        if passes_order1 and a.is_regular() and self._settings.ASSERT_INVARIANTS:
            if not self._closed_in_shifted_adjoint(a, s.coefficient(1)):
                raise BridgeViolation("order-1 deformation equation vs d^2 mu_1 = 0")
        return report

    def equivalence_check(
        self, s1: FormalProductSeries, s2: FormalProductSeries, phi: FormalMapSeries
    ) -> EquivalenceReport:
        """
        Whether phi_t(mu_t(x, y)) = mu'_t(phi_t x, phi_t y) with phi_t alpha = alpha phi_t.

        Args:
            s1: Source series mu_t
            s2: Target series mu'_t
            phi: Series with phi_0 = Id

        Returns:
            EquivalenceReport; orders are checked up to max(k_phi + k_mu, k_mu' + 2 k_phi)

        Raises:
            AlgebraMismatch: When the series live on different algebras
            InvalidSeries: When phi_0 is not the identity
            BridgeViolation: When order 1 passes but mu_1 - mu'_1 != delta^1 phi_1
        """
        a = s1.algebra
        if a.product != s2.algebra.product or a.alpha != s2.algebra.alpha:
            raise AlgebraMismatch("equivalence_check")
        self._check_square(a, phi.coefficient(0), "equivalence_check")
        if phi.coeffs[0] != Matrix.identity(a.dim):
            raise InvalidSeries("phi_0 must be the identity")

        residuals = [phi.coefficient(i) @ a.alpha - a.alpha @ phi.coefficient(i) for i in range(len(phi.coeffs))]
        twist = IdentityCheck.run(
            "twist",
            ((i, x) for i in range(1, len(phi.coeffs)) for x in range(a.dim)),
            lambda i, x: residuals[i].column(x),
        )

        top = max(phi.order + s1.order, s2.order + 2 * phi.order)
        images = [[phi.coefficient(i).column(x) for x in range(a.dim)] for i in range(top + 1)]

        def residual(order: int) -> Callable[[int, int], Vector]:
            def value(x: int, y: int) -> Vector:
                left = sum_vectors(
                    (phi.coefficient(i).apply(s1.coefficient(order - i).values[x][y]) for i in range(order + 1)),
                    a.dim,
                )
                right = sum_vectors(
                    (
                        s2.coefficient(j)(images[i][x], images[order - i - j][y])
                        for i in range(order + 1)
                        for j in range(order - i + 1)
                    ),
                    a.dim,
                )
                return _subtract(left, right)

            return value

        orders = tuple(
            IdentityCheck.run(f"order {order}", sorted_pairs(a.dim), residual(order))
            for order in range(top + 1)
        )

        linear = None
        # Id + tN with first-order products, trailing zero coefficients allowed
        if phi.degree <= 1 and s1.degree <= 1 and s2.degree <= 1:
            linear = self.linear_equivalence_check(a, s2.coefficient(1), s1.coefficient(1), phi.coefficient(1))

        report = EquivalenceReport(twist, orders, linear)
        if linear is not None and linear.valid != report.valid:
            raise BridgeViolation("per-order equivalence vs linear equivalence conditions")
        failing = report.first_failing_order
        if (failing is None or failing > 1) and top >= 1 and a.is_regular() and self._settings.ASSERT_INVARIANTS:
            difference = s1.coefficient(1) - s2.coefficient(1)
            if difference != self._shifted_coboundary(a, phi.coefficient(1)):
                raise BridgeViolation("mu_1 - mu'_1 vs delta^1 phi_1")
        return report

    def linear_equivalence_check(
        self, a: HomAlgebra, psi1: BilinearMap, psi2: BilinearMap, n: Matrix
    ) -> LinearEquivalenceReport:
        """
        Whether Id + tN maps (A, * + t psi2, alpha) to (A, * + t psi1, alpha).

        Args:
            a: Algebra
            psi1: Target deformation
            psi2: Source deformation
            n: Linear map A -> A

        Returns:
            LinearEquivalenceReport with one check per order of t

        Raises:
            BridgeViolation: When orders 0 and 1 hold on a regular algebra but psi2 - psi1
                is not a coboundary
        """
        self._check_square(a, n, "linear_equivalence_check")
        images = [n.column(x) for x in range(a.dim)]
        commutator = n @ a.alpha - a.alpha @ n

        def order1(x: int, y: int) -> Vector:
            coboundary = add_vectors(
                a.multiply(a.basis_vector(x), images[y]),
                a.multiply(images[x], a.basis_vector(y)),
                tuple(-c for c in n.apply(a.c[x][y])),
            )
            return _subtract(_subtract(psi2.values[x][y], psi1.values[x][y]), coboundary)

        def order2(x: int, y: int) -> Vector:
            return _subtract(
                n.apply(psi2.values[x][y]),
                add_vectors(
                    a.multiply(images[x], images[y]),
                    psi1(a.basis_vector(x), images[y]),
                    psi1(images[x], a.basis_vector(y)),
                ),
            )

        report = LinearEquivalenceReport(
            twist=IdentityCheck.run("twist", ((x,) for x in range(a.dim)), lambda x: commutator.column(x)),
            order1=IdentityCheck.run("order 1", sorted_pairs(a.dim), order1),
            order2=IdentityCheck.run("order 2", sorted_pairs(a.dim), order2),
            order3=IdentityCheck.run(
                "order 3", sorted_pairs(a.dim), lambda x, y: psi1(images[x], images[y])
            ),
        )
        if report.twist.holds and report.order1.holds and a.is_regular() and self._settings.ASSERT_INVARIANTS:
            rep = self._representations.adjoint_rep(a, -1)
            coboundaries = image(self._cohomology.skew_coboundary(rep, 1)[1])
            if not coboundaries.contains(Cochain.from_bilinear(psi2 - psi1).coeffs):
                raise BridgeViolation("psi2 - psi1 is not in B^2")
        return report

    def rigidity_probe(self, a: HomAlgebra) -> RigidityReport:
        """
        H^2 of the alpha^-1-adjoint representation; its vanishing is sufficient for rigidity.

        Raises:
            SingularTwist: When alpha is not invertible
        """
        rep = self._representations.adjoint_rep(a, -1)
        warnings: list[str] = []
        if not self._algebras.verify_algebra(a).valid:
            message = "the algebra fails its axioms; dimensions are reported without guarantees"
            logger.warning(message)
            warnings.append(message)
        report = self._cohomology.cohomology(rep, 2)
        return RigidityReport(report, (*warnings, *report.warnings))

    # ==========================================
    # Formal deformations of Rota-Baxter operators
    # ==========================================

    def _check_rb_series(self, op: RBOperator, ts: FormalMapSeries) -> None:
        if ts.shape != op.t.shape:
            raise InvalidSeries(f"coefficients must have shape {op.t.shape}")
        if ts.coeffs[0] != op.t:
            raise InvalidSeries("T_0 must equal the base operator")

    def rb_formal_deformation_check(self, op: RBOperator, ts: FormalMapSeries) -> RBFormalReport:
        """
        Evaluate T_i phi = alpha T_i and the Rota-Baxter identity of T_t order by order.

        Order s collects sum_i T_i u * T_(s-i) v - T_i(rho(T_(s-i) u) v + rho(T_(s-i) v) u).

        Args:
            op: Rota-Baxter operator T = T_0
            ts: Series T_0, ..., T_k

        Returns:
            RBFormalReport; t1_derivation records whether T_1 is a phi^0-derivation of the
            induced algebra once order 1 passes

        Raises:
            NotRotaBaxter: When T_0 fails verify_rb
            InvalidSeries: When T_0 differs from op
            BridgeViolation: When order 1 passes but T_1 is not such a derivation
        """
        self._check_rb_series(op, ts)
        algebra = self._rota_baxter.induced_algebra(op)
        rep, a = op.rep, op.rep.algebra
        k = ts.order
        images = [[ts.coefficient(i).column(j) for j in range(rep.dim_v)] for i in range(2 * k + 1)]
        actions = [[rep.action(v) for v in column] for column in images]
        residuals = [ts.coefficient(i) @ rep.phi - a.alpha @ ts.coefficient(i) for i in range(k + 1)]
        twist = IdentityCheck.run(
            "twist",
            ((i, j) for i in range(k + 1) for j in range(rep.dim_v)),
            lambda i, j: residuals[i].column(j),
        )

        def residual(order: int) -> Callable[[int, int], Vector]:
            def value(u: int, v: int) -> Vector:
                terms = []
                for i in range(max(0, order - k), min(order, k) + 1):
                    t_i = ts.coefficient(i)
                    rest = order - i
                    terms.append(a.multiply(images[i][u], images[rest][v]))
                    moved = add_vectors(actions[rest][u].column(v), actions[rest][v].column(u))
                    terms.append(tuple(-x for x in t_i.apply(moved)))
                return sum_vectors(terms, a.dim)

            return value

        orders = tuple(
            IdentityCheck.run(f"order {order}", sorted_pairs(rep.dim_v), residual(order))
            for order in range(2 * k + 1)
        )
        report = RBFormalReport(twist, orders)
        failing = report.first_failing_order
        if k < 1 or (failing is not None and failing <= 1):
            return report

        query = DerivationQuery(algebra, self._rota_baxter.induced_rep(op), 0, False)
        t1_derivation = self._derivations.is_member(query, ts.coefficient(1))
        first_twists_hold = all(is_zero_vector(residuals[i].entries) for i in range(2))
        if first_twists_hold and not t1_derivation:
            raise BridgeViolation("order-1 Rota-Baxter equation vs T_1 derivation")
        return RBFormalReport(twist, orders, t1_derivation)

    def induced_formal_deformation(self, op: RBOperator, ts: FormalMapSeries) -> FormalProductSeries:
        """
        The series mu_i(u, v) = rho(T_i u) v + rho(T_i v) u on the induced algebra.

        Raises:
            InvalidSeries: When ts is not a formal deformation of op
        """
        report = self.rb_formal_deformation_check(op, ts)
        if not report.twist.holds:
            raise InvalidSeries("T_i phi != alpha T_i for some i")
        if report.first_failing_order is not None:
            raise InvalidSeries(f"the deformation equation fails at order {report.first_failing_order}")
        algebra = self._rota_baxter.induced_algebra(op)
        coeffs = tuple(
            self._rota_baxter.symmetrized_action(op.rep, t) for t in ts.coeffs
        )
        return FormalProductSeries(algebra, coeffs)


deformation_service = DeformationService()
