"""Hom-algebra application services."""
from collections.abc import Sequence
from fractions import Fraction

from hjj.core.logging import get_logger
from hjj.domain.algebra.entities import (
    AxiomReport,
    BilinearMap,
    HomAlgebra,
    IdentityCheck,
    MorphismReport,
    ordered_triples,
    sorted_pairs,
    sorted_triples,
)
from hjj.domain.algebra.errors import InvalidFactor
from hjj.domain.linalg.entities import Matrix, Subspace, Vector, add_vectors, unit_vector
from hjj.domain.linalg.errors import DimensionMismatch
from hjj.domain.linalg.operations import SparseRow, solve_homogeneous

logger = get_logger(__name__)


def _subtract(x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
    return tuple(a - b for a, b in zip(x, y, strict=True))


def _matrix_rows(m: Matrix) -> list[SparseRow]:
    return [{j: x for j, x in enumerate(m.row(i)) if x != 0} for i in range(m.rows)]


class AlgebraService:
    """Axiom verification and constructions for Hom-Jacobi-Jordan algebras."""

    # ==========================================
    # Axioms
    # ==========================================

    def verify_algebra(self, a: HomAlgebra) -> AxiomReport:
        """
        Check commutativity, multiplicativity and the Hom-Jacobi identity on basis tuples.

        Args:
            a: Algebra to verify

        Returns:
            AxiomReport listing every failing tuple in lexicographic order
        """
        n = a.dim
        e = [a.basis_vector(i) for i in range(n)]
        alpha_e = [a.alpha.column(i) for i in range(n)]

        commutative = IdentityCheck.run(
            "commutative",
            ((i, j) for i in range(n) for j in range(i + 1, n)),
            lambda i, j: _subtract(a.c[i][j], a.c[j][i]),
        )
        multiplicative = IdentityCheck.run(
            "multiplicative",
            sorted_pairs(n),
            lambda i, j: _subtract(a.alpha.apply(a.c[i][j]), a.multiply(alpha_e[i], alpha_e[j])),
        )
        hom_jacobi = IdentityCheck.run(
            "hom_jacobi",
            sorted_triples(n),
            lambda i, j, k: self.hom_jacobian(a, e[i], e[j], e[k]),
        )
        report = AxiomReport(commutative, multiplicative, hom_jacobi)
        if not report.valid:
            logger.debug(
                "Axiom failures: %s",
                {check.name: len(check.failures) for check in report.checks if not check.holds},
            )
        return report

    def hom_jacobian(
        self,
        a: HomAlgebra,
        x: Sequence[Fraction],
        y: Sequence[Fraction],
        z: Sequence[Fraction],
    ) -> Vector:
        """(x*y)*alpha(z) + (y*z)*alpha(x) + (z*x)*alpha(y)."""
        for v in (x, y, z):
            if len(v) != a.dim:
                raise DimensionMismatch("hom_jacobian", a.dim, len(v))
        return add_vectors(
            a.multiply(a.multiply(x, y), a.twist(z)),
            a.multiply(a.multiply(y, z), a.twist(x)),
            a.multiply(a.multiply(z, x), a.twist(y)),
        )

    def check_hom_associative(self, a: HomAlgebra) -> IdentityCheck:
        """
        Check (x*y)*alpha(z) = alpha(x)*(y*z) on ordered basis triples.

        Args:
            a: Commutative Hom-algebra

        Returns:
            IdentityCheck named "hom_associative"
        """
        n = a.dim
        e = [a.basis_vector(i) for i in range(n)]
        return IdentityCheck.run(
            "hom_associative",
            ordered_triples(n),
            lambda i, j, k: _subtract(
                a.multiply(a.multiply(e[i], e[j]), a.twist(e[k])),
                a.multiply(a.twist(e[i]), a.multiply(e[j], e[k])),
            ),
        )

    def check_associative(self, product: BilinearMap) -> IdentityCheck:
        """Ordinary associativity of a structure-constant product."""
        n = product.dim
        e = [unit_vector(n, i) for i in range(n)]
        return IdentityCheck.run(
            "associative",
            ordered_triples(n),
            lambda i, j, k: _subtract(
                product(product(e[i], e[j]), e[k]),
                product(e[i], product(e[j], e[k])),
            ),
        )

    def check_morphism(self, source: HomAlgebra, target: HomAlgebra, f: Matrix) -> MorphismReport:
        """
        Check that f: source -> target intertwines twists and products.

        Args:
            source: Domain algebra
            target: Codomain algebra
            f: Matrix of shape (target.dim, source.dim)

        Returns:
            MorphismReport with per-basis-vector twist failures and per-pair product failures
        """
        if f.shape != (target.dim, source.dim):
            raise DimensionMismatch("check_morphism", (target.dim, source.dim), f.shape)
        images = [f.column(j) for j in range(source.dim)]
        twist = IdentityCheck.run(
            "twist",
            ((j,) for j in range(source.dim)),
            lambda j: _subtract(f.apply(source.alpha.column(j)), target.alpha.apply(images[j])),
        )
        product = IdentityCheck.run(
            "product",
            sorted_pairs(source.dim),
            lambda i, j: _subtract(f.apply(source.c[i][j]), target.multiply(images[i], images[j])),
        )
        return MorphismReport(twist, product)

    # ==========================================
    # Subspaces
    # ==========================================

    def hom_annihilator(self, a: HomAlgebra) -> Subspace:
        """
        Elements fixed by alpha and annihilated by every product.

        Args:
            a: Algebra

        Returns:
            Canonical subspace {b : alpha(b) = b, e_i * b = 0 for all i}
        """
        equations = _matrix_rows(a.alpha - Matrix.identity(a.dim))
        for i in range(a.dim):
            equations.extend(_matrix_rows(a.left_matrix(a.basis_vector(i))))
        return solve_homogeneous(equations, a.dim)

    def check_hom_ideal(self, a: HomAlgebra, s: Subspace) -> bool:
        """
        Whether alpha(s) and A * s both lie in s.

        Args:
            a: Algebra
            s: Candidate subspace of the algebra

        Returns:
            True when s is a Hom-ideal
        """
        if s.ambient_dim != a.dim:
            raise DimensionMismatch("check_hom_ideal", a.dim, s.ambient_dim)
        for v in s.vectors:
            if not s.contains(a.twist(v)):
                return False
            for i in range(a.dim):
                if not s.contains(a.multiply(a.basis_vector(i), v)):
                    return False
        return True

    # ==========================================
    # Constructions
    # ==========================================

    def current_algebra(self, l: HomAlgebra, assoc: BilinearMap) -> HomAlgebra:  # noqa: E741
        """
        Current algebra L (x) B with (x(x)a)(y(x)b) = (x*y)(x)(ab) and twist alpha (x) Id.

        Args:
            l: Hom-Jacobi-Jordan algebra
            assoc: Commutative associative product on B

        Returns:
            Algebra on the tensor basis, index (i, p) -> i * dim B + p

        Raises:
            InvalidFactor: When l or assoc fails its axioms
        """
        if not self.verify_algebra(l).valid:
            raise InvalidFactor("current_algebra", "L is not a Hom-Jacobi-Jordan algebra")
        if assoc.dim_out != assoc.dim:
            raise InvalidFactor("current_algebra", "B product must map B x B to B")
        if not assoc.is_symmetric():
            raise InvalidFactor("current_algebra", "B is not commutative")
        if not self.check_associative(assoc).holds:
            raise InvalidFactor("current_algebra", "B is not associative")
        labels = tuple(f"{x}⊗b{p + 1}" for x in l.basis_labels for p in range(assoc.dim))
        return HomAlgebra(
            l.product.tensor(assoc),
            l.alpha.kron(Matrix.identity(assoc.dim)),
            labels,
        )

    def tensor_hom_algebra(self, l: HomAlgebra, a: HomAlgebra) -> HomAlgebra:  # noqa: E741
        """
        Tensor product of a Hom-Jacobi-Jordan algebra with a commutative Hom-associative one.

        Args:
            l: Hom-Jacobi-Jordan algebra (L, *, alpha)
            a: Commutative Hom-associative algebra (A, mu, beta)

        Returns:
            (L (x) A, tensor product, alpha (x) beta)

        Raises:
            InvalidFactor: When a factor fails its axioms
        """
        if not self.verify_algebra(l).valid:
            raise InvalidFactor("tensor_hom_algebra", "L is not a Hom-Jacobi-Jordan algebra")
        if not self.verify_algebra(a).multiplicative.holds:
            raise InvalidFactor("tensor_hom_algebra", "A is not multiplicative")
        if not self.check_hom_associative(a).holds:
            raise InvalidFactor("tensor_hom_algebra", "A is not Hom-associative")
        labels = tuple(f"{x}⊗{y}" for x in l.basis_labels for y in a.basis_labels)
        return HomAlgebra(l.product.tensor(a.product), l.alpha.kron(a.alpha), labels)


algebra_service = AlgebraService()
