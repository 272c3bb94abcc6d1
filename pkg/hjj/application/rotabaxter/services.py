"""Relative Rota-Baxter operator services."""
from fractions import Fraction

from hjj.application.algebra.services import AlgebraService, algebra_service
from hjj.application.cohomology.services import CohomologyService, cohomology_service
from hjj.application.derivation.services import DerivationService, derivation_service
from hjj.application.representation.services import (
    RepresentationService,
    representation_service,
)
from hjj.core.config import Settings, get_settings
from hjj.core.logging import get_logger
from hjj.domain.algebra.entities import (
    BilinearMap,
    HomAlgebra,
    IdentityCheck,
    sorted_pairs,
)
from hjj.domain.cohomology.entities import Cochain, CohomologyReport
from hjj.domain.deformation.errors import BridgeViolation
from hjj.domain.derivation.entities import DerivationQuery
from hjj.domain.linalg.entities import Matrix, Subspace, Vector, add_vectors
from hjj.domain.linalg.errors import DimensionMismatch
from hjj.domain.linalg.operations import SparseRow, solve_homogeneous
from hjj.domain.representation.entities import Representation
from hjj.domain.rotabaxter.entities import (
    GeneratorReport,
    NijenhuisReport,
    RBMorphism,
    RBMorphismReport,
    RBOperator,
    RBReport,
)
from hjj.domain.rotabaxter.errors import (
    NotAGenerator,
    NotRotaBaxter,
    PreconditionFailed,
    RepresentationMismatch,
)

logger = get_logger(__name__)


def _subtract(x: Vector, y: Vector) -> Vector:
    return tuple(a - b for a, b in zip(x, y, strict=True))


def _columns(m: Matrix) -> list[Vector]:
    return [m.column(j) for j in range(m.cols)]


def _symmetrized_action(rep: Representation, t: Matrix) -> BilinearMap:
    """(u, v) -> rho(t u) v + rho(t v) u on V."""
    actions = [rep.action(image) for image in _columns(t)]
    return BilinearMap.from_function(
        rep.dim_v,
        rep.dim_v,
        lambda i, j: add_vectors(actions[i].column(j), actions[j].column(i)),
    )


def _rb_product_check(name: str, rep: Representation, t: Matrix) -> IdentityCheck:
    a = rep.algebra
    images = _columns(t)
    symmetrized = _symmetrized_action(rep, t)
    return IdentityCheck.run(
        name,
        sorted_pairs(rep.dim_v),
        lambda i, j: _subtract(a.multiply(images[i], images[j]), t.apply(symmetrized.values[i][j])),
    )


def _twist_check(name: str, rep: Representation, t: Matrix) -> IdentityCheck:
    residual = t @ rep.phi - rep.algebra.alpha @ t
    return IdentityCheck.run(name, ((j,) for j in range(rep.dim_v)), lambda j: residual.column(j))


class RotaBaxterService:
    """Verification, induced structures and deformations of relative Rota-Baxter operators."""

    def __init__(
        self,
        settings: Settings | None = None,
        algebras: AlgebraService | None = None,
        representations: RepresentationService | None = None,
        derivations: DerivationService | None = None,
        cohomology: CohomologyService | None = None,
    ):
        self._settings = settings or get_settings()
        self._algebras = algebras or algebra_service
        self._representations = representations or representation_service
        self._derivations = derivations or derivation_service
        self._cohomology = cohomology or cohomology_service

    # ==========================================
    # Verification and induced structures
    # ==========================================

    def verify_rb(self, op: RBOperator) -> RBReport:
        """
        Check T phi = alpha T per basis vector of V and the Rota-Baxter identity per pair.

        Args:
            op: Operator to check

        Returns:
            RBReport with the first failing witness of each identity
        """
        return RBReport(
            _twist_check("twist", op.rep, op.t),
            _rb_product_check("product", op.rep, op.t),
        )

    def _require_rb(self, op: RBOperator) -> None:
        report = self.verify_rb(op)
        for check in report.checks:
            if not check.holds:
                witness = check.witness
                raise NotRotaBaxter(check.name, witness.args if witness else None)

    def _induced_algebra(self, op: RBOperator) -> HomAlgebra:
        labels = tuple(f"v{j + 1}" for j in range(op.rep.dim_v))
        return HomAlgebra(_symmetrized_action(op.rep, op.t), op.rep.phi, labels)

    def _induced_rep(self, op: RBOperator, algebra: HomAlgebra | None = None) -> Representation:
        rep, a, t = op.rep, op.rep.algebra, op.t
        algebra = algebra or self._induced_algebra(op)
        rho = []
        for j in range(rep.dim_v):
            left = a.left_matrix(op.image(j))
            columns = [
                _subtract(left.column(i), t.apply(rep.rho[i].column(j))) for i in range(a.dim)
            ]
            rho.append(Matrix.from_columns(columns, a.dim))
        return Representation(algebra, tuple(rho), a.alpha)

    def induced_algebra(self, op: RBOperator) -> HomAlgebra:
        """
        The algebra (V, *_T, phi) with u *_T v = rho(Tu)v + rho(Tv)u.

        Raises:
            NotRotaBaxter: When op fails verify_rb
        """
        self._require_rb(op)
        return self._induced_algebra(op)

    def induced_rep(self, op: RBOperator) -> Representation:
        """
        The representation (A, rho_T, alpha) of (V, *_T, phi), rho_T(u)x = Tu * x - T(rho(x)u).

        Raises:
            NotRotaBaxter: When op fails verify_rb
        """
        self._require_rb(op)
        return self._induced_rep(op)

    def symmetrized_action(self, rep: Representation, t: Matrix) -> BilinearMap:
        """(u, v) -> rho(t u) v + rho(t v) u; the induced product when t is Rota-Baxter."""
        return _symmetrized_action(rep, t)

    def compatible_operators(self, rep: Representation) -> Subspace:
        """
        All maps T: V -> A with T phi = alpha T.

        Args:
            rep: Representation

        Returns:
            Subspace of matrix coordinates; entry (o, j) at o * dim V + j
        """
        da, dv = rep.dim_a, rep.dim_v
        alpha, phi = rep.algebra.alpha, rep.phi
        equations: list[SparseRow] = []
        for o in range(da):
            for j in range(dv):
                row: dict[int, Fraction] = {}
                for p in range(dv):
                    if phi[p, j] != 0:
                        row[o * dv + p] = row.get(o * dv + p, Fraction(0)) + phi[p, j]
                for q in range(da):
                    if alpha[o, q] != 0:
                        row[q * dv + j] = row.get(q * dv + j, Fraction(0)) - alpha[o, q]
                equations.append(row)
        return solve_homogeneous(equations, da * dv)

    # ==========================================
    # Cohomology
    # ==========================================

    def rb_cohomology(self, op: RBOperator, n: int) -> CohomologyReport:
        """
        Cohomology of the induced algebra with values in the induced representation.

        Raises:
            NotRotaBaxter: When op fails verify_rb
            DegreeCap: When n is outside 0..MAX_DEGREE
        """
        self._require_rb(op)
        return self._cohomology.cohomology(self._induced_rep(op), n)

    def rb_cocycle_condition(self, op: RBOperator, f: Matrix) -> IdentityCheck:
        """
        Degree-1 closedness of f: V -> A evaluated directly on basis pairs of V.

        alpha(Tu) * f(v) + alpha(Tv) * f(u) - T(rho(f u) phi v + rho(f v) phi u)
        + f(rho(Tu) v + rho(Tv) u) = 0

        Args:
            op: Operator
            f: Matrix of shape (dim A, dim V)

        Returns:
            IdentityCheck named "rb_cocycle"
        """
        rep, a, t = op.rep, op.rep.algebra, op.t
        if f.shape != t.shape:
            raise DimensionMismatch("rb_cocycle_condition", t.shape, f.shape)
        twisted = _columns(a.alpha @ t)
        values = _columns(f)
        phi_basis = _columns(rep.phi)
        symmetrized = _symmetrized_action(rep, t)

        def residual(i: int, j: int) -> Vector:
            return add_vectors(
                a.multiply(twisted[i], values[j]),
                a.multiply(twisted[j], values[i]),
                tuple(
                    -x
                    for x in t.apply(
                        add_vectors(rep.act(values[i], phi_basis[j]), rep.act(values[j], phi_basis[i]))
                    )
                ),
                f.apply(symmetrized.values[i][j]),
            )

        return IdentityCheck.run("rb_cocycle", sorted_pairs(rep.dim_v), residual)

    # ==========================================
    # Linear deformations
    # ==========================================

    def linear_deformation_generator_check(self, op: RBOperator, z: Matrix) -> GeneratorReport:
        """
        Whether T + tZ is a Rota-Baxter operator for every t.

        Args:
            op: Operator T
            z: Matrix of shape (dim A, dim V)

        Returns:
            GeneratorReport; the direct verdict and the derivation verdict always agree

        Raises:
            BridgeViolation: When the two verdicts disagree
        """
        rep, a, t = op.rep, op.rep.algebra, op.t
        if z.shape != t.shape:
            raise DimensionMismatch("linear_deformation_generator_check", t.shape, z.shape)
        t_images, z_images = _columns(t), _columns(z)
        t_sym = _symmetrized_action(rep, t)
        z_sym = _symmetrized_action(rep, z)

        def mixed(i: int, j: int) -> Vector:
            return add_vectors(
                a.multiply(t_images[i], z_images[j]),
                a.multiply(z_images[i], t_images[j]),
                tuple(-x for x in t.apply(z_sym.values[i][j])),
                tuple(-x for x in z.apply(t_sym.values[i][j])),
            )

        report = GeneratorReport(
            twist=_twist_check("twist", rep, z),
            rota_baxter=_rb_product_check("rota_baxter", rep, z),
            mixed=IdentityCheck.run("mixed", sorted_pairs(rep.dim_v), mixed),
            derivation_verdict=False,
        )
        algebra = self._induced_algebra(op)
        query = DerivationQuery(algebra, self._induced_rep(op, algebra), 0, False)
        verdict = report.rota_baxter.holds and self._derivations.is_member(query, z)
        if verdict != report.valid:
            raise BridgeViolation("generator check vs derivation reformulation")
        return GeneratorReport(report.twist, report.rota_baxter, report.mixed, verdict)

    def induced_linear_deformation(self, op: RBOperator, z: Matrix) -> BilinearMap:
        """
        psi_Z(u, v) = rho(Zu)v + rho(Zv)u, a linear deformation of (V, *_T, phi).

        Raises:
            NotAGenerator: When z does not generate a linear deformation of op
        """
        report = self.linear_deformation_generator_check(op, z)
        for check in report.checks:
            if not check.holds:
                raise NotAGenerator(check.name)
        return _symmetrized_action(op.rep, z)

    def nijenhuis_check(self, a: HomAlgebra, n: Matrix) -> NijenhuisReport:
        """
        Check N alpha = alpha N and N(u) * N(v) = N(u *_N v).

        u *_N v = N(u) * v + u * N(v) - N(u * v). On a regular algebra the deformed product
        is compared with delta^1 N in the alpha^-1-adjoint complex.

        Args:
            a: Algebra
            n: Linear map A -> A

        Returns:
            NijenhuisReport carrying the deformed product

        Raises:
            BridgeViolation: When *_N differs from delta^1 N
        """
        if n.shape != (a.dim, a.dim):
            raise DimensionMismatch("nijenhuis_check", (a.dim, a.dim), n.shape)
        images = _columns(n)

        def deformed(i: int, j: int) -> Vector:
            return add_vectors(
                a.multiply(images[i], a.basis_vector(j)),
                a.multiply(a.basis_vector(i), images[j]),
                tuple(-x for x in n.apply(a.c[i][j])),
            )

        product = BilinearMap.from_function(a.dim, a.dim, deformed)
        residual = n @ a.alpha - a.alpha @ n
        report = NijenhuisReport(
            twist=IdentityCheck.run("twist", ((i,) for i in range(a.dim)), lambda i: residual.column(i)),
            nijenhuis=IdentityCheck.run(
                "nijenhuis",
                sorted_pairs(a.dim),
                lambda i, j: _subtract(
                    a.multiply(images[i], images[j]), n.apply(product.values[i][j])
                ),
            ),
            deformed_product=product,
        )
        if report.valid and a.is_regular() and self._settings.ASSERT_INVARIANTS:
            coboundary = self._cohomology.differential(
                self._representations.adjoint_rep(a, -1), Cochain.from_matrix(n), "delta"
            )
            if coboundary != Cochain.from_bilinear(product):
                raise BridgeViolation("deformed product vs delta^1 N")
        return report

    # ==========================================
    # Morphisms
    # ==========================================

    def _morphism_checks(
        self, source: RBOperator, target: RBOperator, m: RBMorphism
    ) -> tuple[IdentityCheck, IdentityCheck, IdentityCheck]:
        rep = target.rep
        phi_a, phi_v = m.phi_a, m.phi_v
        twist = phi_v @ rep.phi - rep.phi @ phi_v
        intertwining = target.t @ phi_v - phi_a @ source.t
        moved = [rep.action(phi_a.column(x)) for x in range(rep.dim_a)]
        return (
            IdentityCheck.run("twist", ((j,) for j in range(rep.dim_v)), lambda j: twist.column(j)),
            IdentityCheck.run(
                "intertwining", ((j,) for j in range(rep.dim_v)), lambda j: intertwining.column(j)
            ),
            IdentityCheck.run(
                "equivariance",
                ((x, u) for x in range(rep.dim_a) for u in range(rep.dim_v)),
                lambda x, u: _subtract(
                    phi_v.apply(rep.rho[x].column(u)), moved[x].apply(phi_v.column(u))
                ),
            ),
        )

    def _shapes(self, op: RBOperator, m: RBMorphism) -> None:
        if m.phi_a.shape != (op.rep.dim_a, op.rep.dim_a):
            raise DimensionMismatch("RBMorphism phi_a", (op.rep.dim_a, op.rep.dim_a), m.phi_a.shape)
        if m.phi_v.shape != (op.rep.dim_v, op.rep.dim_v):
            raise DimensionMismatch("RBMorphism phi_v", (op.rep.dim_v, op.rep.dim_v), m.phi_v.shape)

    def rb_morphism_check(self, from_op: RBOperator, to_op: RBOperator, m: RBMorphism) -> RBMorphismReport:
        """
        Whether (phi_A, phi_V) is a morphism from T' = from_op to T = to_op.

        Args:
            from_op: Source operator T'
            to_op: Target operator T
            m: Candidate morphism

        Returns:
            RBMorphismReport, including the inverse pair and the induced algebra morphism
            when they apply

        Raises:
            RepresentationMismatch: When the operators use different representations
        """
        if from_op.rep != to_op.rep:
            raise RepresentationMismatch()
        self._shapes(to_op, m)
        a = to_op.rep.algebra
        algebra_morphism = self._algebras.check_morphism(a, a, m.phi_a)
        twist, intertwining, equivariance = self._morphism_checks(from_op, to_op, m)
        report = RBMorphismReport(algebra_morphism, twist, intertwining, equivariance)
        if not report.valid:
            return report

        inverse_pair = None
        if m.is_invertible():
            inverse = m.inverse()
            inverse_pair = self._algebras.check_morphism(a, a, inverse.phi_a).valid and all(
                check.holds for check in self._morphism_checks(to_op, from_op, inverse)
            )
        induced = None
        if self.verify_rb(from_op).valid and self.verify_rb(to_op).valid:
            induced = self._algebras.check_morphism(
                self._induced_algebra(from_op), self._induced_algebra(to_op), m.phi_v
            )
        return RBMorphismReport(
            algebra_morphism, twist, intertwining, equivariance, inverse_pair, induced
        )

    def conjugate_rb(self, op: RBOperator, m: RBMorphism) -> RBOperator:
        """
        T' = phi_A^-1 T phi_V, a Rota-Baxter operator with (phi_A, phi_V) a morphism T' -> T.

        Args:
            op: Rota-Baxter operator T
            m: Invertible pair with phi_A an automorphism commuting with alpha

        Returns:
            The conjugated operator

        Raises:
            PreconditionFailed: Naming the first violated condition
        """
        self._shapes(op, m)
        rep, a = op.rep, op.rep.algebra
        if not m.phi_a.is_invertible():
            raise PreconditionFailed("phi_A is invertible")
        if not m.phi_v.is_invertible():
            raise PreconditionFailed("phi_V is invertible")
        if a.alpha @ m.phi_a != m.phi_a @ a.alpha:
            raise PreconditionFailed("alpha phi_A = phi_A alpha")
        if not self._algebras.check_morphism(a, a, m.phi_a).valid:
            raise PreconditionFailed("phi_A is an algebra automorphism")
        twist, _, equivariance = self._morphism_checks(op, op, m)
        if not twist.holds:
            raise PreconditionFailed("phi_V phi = phi phi_V")
        if not equivariance.holds:
            raise PreconditionFailed("phi_V rho(x) = rho(phi_A x) phi_V")
        if not self.verify_rb(op).valid:
            raise PreconditionFailed("T is a relative Rota-Baxter operator")

        conjugated = op.with_matrix(m.phi_a.inverse() @ op.t @ m.phi_v)
        if not self.verify_rb(conjugated).valid:
            raise BridgeViolation("conjugated operator fails the Rota-Baxter identities")
        logger.debug("Conjugated operator %s", conjugated.t)
        return conjugated


rota_baxter_service = RotaBaxterService()
