"""Zigzag cohomology services.

Cochains live in the full coordinate space of n-linear maps A^n -> V. Every subspace
(C^n, A^n, S^n, Z^n, B^n) is returned as a canonical subspace of that space, so results
for different representations or degrees compare structurally.
"""
from fractions import Fraction
from itertools import product

from hjj.application.algebra.services import AlgebraService, algebra_service
from hjj.application.representation.services import (
    RepresentationService,
    representation_service,
)
from hjj.core.config import Settings, get_settings
from hjj.core.errors import ValidationError
from hjj.core.logging import get_logger
from hjj.domain.algebra.entities import HomAlgebra
from hjj.domain.cohomology.entities import (
    Cochain,
    CochainOperator,
    CohomologyReport,
    basis_tuples,
    cochain_index,
)
from hjj.domain.cohomology.errors import DegreeCap, EquivarianceViolation, ZigzagViolation
from hjj.domain.linalg.entities import Matrix, Subspace, is_zero_vector
from hjj.domain.linalg.operations import SparseRow, quotient_basis, solve_homogeneous, span
from hjj.domain.representation.entities import Representation

logger = get_logger(__name__)


def _add(row: dict[int, Fraction], key: int, value: Fraction) -> None:
    total = row.get(key, Fraction(0)) + value
    if total == 0:
        row.pop(key, None)
    else:
        row[key] = total


def _column_support(m: Matrix) -> list[list[tuple[int, Fraction]]]:
    """Nonzero entries of each column, as (row, value) pairs."""
    return [[(i, m[i, j]) for i in range(m.rows) if m[i, j] != 0] for j in range(m.cols)]


class CohomologyService:
    """Cochain spaces, coboundary operators and cohomology of representations."""

    def __init__(
        self,
        settings: Settings | None = None,
        algebras: AlgebraService | None = None,
        representations: RepresentationService | None = None,
    ):
        self._settings = settings or get_settings()
        self._algebras = algebras or algebra_service
        self._representations = representations or representation_service

    @property
    def max_degree(self) -> int:
        return self._settings.MAX_DEGREE

    def _check_degree(self, n: int) -> None:
        if n < 0 or n > self.max_degree:
            raise DegreeCap(n, self.max_degree)

    def _verified(self, r: Representation) -> bool:
        return (
            self._algebras.verify_algebra(r.algebra).valid
            and self._representations.verify_representation(r).valid
        )

    # ==========================================
    # Cochain spaces
    # ==========================================

    def _compatibility_equations(self, r: Representation, n: int) -> list[SparseRow]:
        """phi o f = f o alpha^(tensor n), one row per (output, input tuple)."""
        da, dv = r.dim_a, r.dim_v
        alpha = _column_support(r.algebra.alpha)
        equations: list[SparseRow] = []
        for args in basis_tuples(da, n):
            expansions = list(product(*(alpha[i] for i in args)))
            for o in range(dv):
                row: dict[int, Fraction] = {}
                for p in range(dv):
                    if r.phi[o, p] != 0:
                        _add(row, cochain_index(p, args, da), r.phi[o, p])
                for combo in expansions:
                    coeff = Fraction(1)
                    for _, value in combo:
                        coeff *= value
                    _add(row, cochain_index(o, [i for i, _ in combo], da), -coeff)
                if row:
                    equations.append(row)
        return equations

    def _skew_equations(self, r: Representation, n: int) -> list[SparseRow]:
        """f(.., x_p, .., alpha x_q, ..) + f(.., x_q, .., alpha x_p, ..) = 0 for p < q."""
        da, dv = r.dim_a, r.dim_v
        alpha = _column_support(r.algebra.alpha)
        equations: list[SparseRow] = []
        for p in range(n):
            for q in range(p + 1, n):
                for args in basis_tuples(da, n):
                    if args[p] > args[q]:
                        continue
                    swapped = list(args)
                    swapped[p] = args[q]
                    for o in range(dv):
                        row: dict[int, Fraction] = {}
                        for target, source in ((list(args), args[q]), (swapped, args[p])):
                            for i, value in alpha[source]:
                                target[q] = i
                                _add(row, cochain_index(o, target, da), value)
                        if row:
                            equations.append(row)
        return equations

    def _symmetry_equations(self, r: Representation, n: int) -> list[SparseRow]:
        """f(.., x_t, x_t+1, ..) = f(.., x_t+1, x_t, ..) for adjacent positions."""
        da, dv = r.dim_a, r.dim_v
        equations: list[SparseRow] = []
        for t in range(n - 1):
            for args in basis_tuples(da, n):
                if args[t] >= args[t + 1]:
                    continue
                swapped = list(args)
                swapped[t], swapped[t + 1] = args[t + 1], args[t]
                for o in range(dv):
                    equations.append({
                        cochain_index(o, args, da): Fraction(1),
                        cochain_index(o, swapped, da): Fraction(-1),
                    })
        return equations

    def cochain_dim(self, r: Representation, n: int) -> int:
        """Dimension of the full space of n-linear maps A^n -> V."""
        return r.dim_v * r.dim_a**n

    def hom_cochain_space(self, r: Representation, n: int) -> Subspace:
        """
        Compatible cochains C^n = {f : phi o f = f o alpha^(tensor n)}.

        Args:
            r: Representation
            n: Degree; n = 0 gives the phi-fixed vectors

        Returns:
            Canonical subspace of the full degree-n coordinate space
        """
        self._check_degree(n)
        return solve_homogeneous(self._compatibility_equations(r, n), self.cochain_dim(r, n))

    def alpha_skew_subspace(self, r: Representation, n: int) -> Subspace:
        """
        alpha-skew-symmetric compatible cochains A^n.

        Args:
            r: Representation
            n: Degree

        Returns:
            Subspace of hom_cochain_space(r, n)
        """
        self._check_degree(n)
        equations = self._compatibility_equations(r, n) + self._skew_equations(r, n)
        return solve_homogeneous(equations, self.cochain_dim(r, n))

    def symmetric_subspace(self, r: Representation, n: int) -> Subspace:
        """Symmetric compatible cochains S^n."""
        self._check_degree(n)
        equations = self._compatibility_equations(r, n) + self._symmetry_equations(r, n)
        return solve_homogeneous(equations, self.cochain_dim(r, n))

    # ==========================================
    # Operators
    # ==========================================

    def _operator(self, r: Representation, n: int, sign: int) -> CochainOperator:
        """Full operator on n-cochains; sign is +1 for d and -1 for delta."""
        a: HomAlgebra = r.algebra
        da, dv = r.dim_a, r.dim_v
        alpha = _column_support(a.alpha)
        twisted = a.alpha.power(n)
        actions = [r.action(twisted.column(i)) for i in range(da)]
        rows: list[dict[int, Fraction]] = [{} for _ in range(self.cochain_dim(r, n + 1))]
        for args in basis_tuples(da, n + 1):
            for o in range(dv):
                row = rows[cochain_index(o, args, da)]
                # rho(alpha^n x_i) f(.., x_i omitted, ..)
                for i in range(n + 1):
                    rest = args[:i] + args[i + 1:]
                    action = actions[args[i]]
                    for p in range(dv):
                        if action[o, p] != 0:
                            _add(row, cochain_index(p, rest, da), action[o, p])
                # sign * f(x_i * x_j, alpha x_1, .., alpha x_n+1) without positions i, j
                for i in range(n + 1):
                    for j in range(i + 1, n + 1):
                        products = [(k, c) for k, c in enumerate(a.c[args[i]][args[j]]) if c != 0]
                        if not products:
                            continue
                        others = [alpha[args[t]] for t in range(n + 1) if t not in (i, j)]
                        for combo in product(*others):
                            coeff = Fraction(sign)
                            for _, value in combo:
                                coeff *= value
                            tail = [index for index, _ in combo]
                            for k, c in products:
                                _add(row, cochain_index(o, [k, *tail], da), coeff * c)
        name = "d" if sign > 0 else "delta"
        logger.debug("Assembled %s^%d: %d x %d", name, n, len(rows), self.cochain_dim(r, n))
        return CochainOperator(name, n, tuple(rows), self.cochain_dim(r, n))

    def d_operator(self, r: Representation, n: int) -> CochainOperator:
        """d^n on the full space of n-cochains."""
        self._check_degree(n)
        return self._operator(r, n, 1)

    def delta_operator(self, r: Representation, n: int) -> CochainOperator:
        """delta^n on the full space of n-cochains."""
        self._check_degree(n)
        return self._operator(r, n, -1)

    def differential(self, r: Representation, f: Cochain, operator: str = "d") -> Cochain:
        """
        Apply d or delta to a cochain given in full coordinates.

        Not bounded by MAX_DEGREE: the cochain already exists, so only one operator row
        set is assembled.

        Args:
            r: Representation
            f: Cochain of degree n
            operator: "d" or "delta"

        Returns:
            Cochain of degree n + 1
        """
        op = self._operator(r, f.degree, 1 if operator == "d" else -1)
        return Cochain(f.degree + 1, r.dim_a, r.dim_v, op.apply(f.coeffs))

    def coboundary_d(self, r: Representation, n: int) -> Matrix:
        """
        Matrix of d^n from the canonical basis of C^n to full (n+1)-cochains.

        Args:
            r: Representation
            n: Degree

        Returns:
            Matrix of shape (dim V * dim A^(n+1), dim C^n)
        """
        op = self.d_operator(r, n)
        domain = self.hom_cochain_space(r, n)
        matrix = op.restrict(domain)
        self._assert_equivariant(r, n, matrix, "d")
        return matrix

    def coboundary_delta(self, r: Representation, n: int) -> Matrix:
        """
        Matrix of delta^n from the canonical basis of A^n to full (n+1)-cochains.

        Args:
            r: Representation
            n: Degree

        Returns:
            Matrix of shape (dim V * dim A^(n+1), dim A^n)

        Raises:
            ZigzagViolation: When d^(n+1) o delta^n is nonzero on verified inputs
        """
        self._check_degree(n)
        return self.skew_coboundary(r, n)[1]

    def skew_coboundary(self, r: Representation, n: int) -> tuple[Subspace, Matrix]:
        """
        A^n together with the matrix of delta^n on its canonical basis, at any degree.

        Consistency checks in other services call this so that a small MAX_DEGREE does not
        block them. The zigzag identity is asserted whenever n + 1 is within MAX_DEGREE.

        Raises:
            ZigzagViolation: When d^(n+1) o delta^n is nonzero on verified inputs
        """
        domain = solve_homogeneous(
            self._compatibility_equations(r, n) + self._skew_equations(r, n), self.cochain_dim(r, n)
        )
        matrix = self._operator(r, n, -1).restrict(domain)
        self._assert_equivariant(r, n, matrix, "delta")
        if self._settings.ASSERT_INVARIANTS and n + 1 <= self.max_degree:
            if not self._composite(r, n + 1, matrix).is_zero() and self._verified(r):
                raise ZigzagViolation(n + 1)
        return domain, matrix

    def _composite(self, r: Representation, n: int, delta_matrix: Matrix) -> Matrix:
        d = self._operator(r, n, 1)
        columns = [d.apply(delta_matrix.column(j)) for j in range(delta_matrix.cols)]
        return Matrix.from_columns(columns, len(d.rows))

    def zigzag_composite(self, r: Representation, n: int) -> Matrix:
        """
        d^n o delta^(n-1) on the canonical basis of A^(n-1).

        Args:
            r: Representation
            n: Degree, 1..MAX_DEGREE

        Returns:
            Matrix of shape (dim V * dim A^(n+1), dim A^(n-1))
        """
        self._check_degree(n)
        if n < 1:
            raise ValidationError("d o delta is defined from degree 1", details={"degree": n})
        domain = self.alpha_skew_subspace(r, n - 1)
        return self._composite(r, n, self._operator(r, n - 1, -1).restrict(domain))

    def _assert_equivariant(self, r: Representation, n: int, matrix: Matrix, operator: str) -> None:
        if not self._settings.ASSERT_INVARIANTS:
            return
        equations = self._compatibility_equations(r, n + 1)
        for j in range(matrix.cols):
            image = matrix.column(j)
            if any(sum((x * image[k] for k, x in row.items()), Fraction(0)) != 0 for row in equations):
                if self._verified(r):
                    raise EquivarianceViolation(n, operator)
                logger.warning("%s^%d leaves the compatible cochains on an unverified input", operator, n)
                return

    # ==========================================
    # Cohomology
    # ==========================================

    def cohomology(self, r: Representation, n: int) -> CohomologyReport:
        """
        Z^n, B^n and representatives of H^n = Z^n / B^n.

        Args:
            r: Representation
            n: Degree

        Returns:
            CohomologyReport; dim_h is omitted with a warning when B is not inside Z

        Raises:
            DegreeCap: When n is outside 0..MAX_DEGREE
            ZigzagViolation: When B is not inside Z on verified inputs
        """
        self._check_degree(n)
        total = self.cochain_dim(r, n)
        compatible = self._compatibility_equations(r, n)
        c = solve_homogeneous(compatible, total)
        skew = solve_homogeneous(compatible + self._skew_equations(r, n), total)
        d = self._operator(r, n, 1)
        z = solve_homogeneous(compatible + list(d.rows), total)
        if self._settings.ASSERT_INVARIANTS:
            self._assert_equivariant(r, n, d.restrict(c), "d")

        if n == 0:
            b = Subspace.zero(total)
        else:
            source = self.alpha_skew_subspace(r, n - 1)
            delta = self._operator(r, n - 1, -1)
            b = span([delta.apply(v) for v in source.vectors], total)

        warnings: list[str] = []
        h = None
        if z.contains_subspace(b):
            h = tuple(quotient_basis(z, b))
        else:
            verified = self._verified(r)
            if verified and self._settings.ASSERT_INVARIANTS:
                raise ZigzagViolation(n)
            message = f"B^{n} is not contained in Z^{n}; the quotient is undefined"
            if not verified:
                message += " (the algebra or representation fails its axioms)"
            warnings.append(message)
            logger.warning(message)

        report = CohomologyReport(
            degree=n,
            dim_c=c.dim,
            dim_a_skew=skew.dim,
            z=z,
            b=b,
            h=h,
            warnings=tuple(warnings),
        )
        logger.info(
            "H^%d: dim C=%d, dim Z=%d, dim B=%d, dim H=%s",
            n, report.dim_c, report.dim_z, report.dim_b, report.dim_h,
        )
        return report

    def adjoint_cohomology(self, a: HomAlgebra, s: int, n: int) -> CohomologyReport:
        """Cohomology of the alpha^s-adjoint representation."""
        self._check_degree(n)
        return self.cohomology(self._representations.adjoint_rep(a, s), n)

    def trivial_cohomology(self, a: HomAlgebra, n: int) -> CohomologyReport:
        """Cohomology with values in the trivial representation."""
        self._check_degree(n)
        return self.cohomology(self._representations.trivial_rep(a), n)

    def is_cocycle(self, r: Representation, f: Cochain) -> bool:
        """Whether f is compatible and d f = 0."""
        compatible = self._compatibility_equations(r, f.degree)
        if any(sum((x * f.coeffs[k] for k, x in row.items()), Fraction(0)) != 0 for row in compatible):
            return False
        return is_zero_vector(self._operator(r, f.degree, 1).apply(f.coeffs))


cohomology_service = CohomologyService()
