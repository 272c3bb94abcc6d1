"""Derivation application services."""
from fractions import Fraction

from hjj.application.representation.services import (
    RepresentationService,
    representation_service,
    twist_power,
)
from hjj.core.logging import get_logger
from hjj.domain.algebra.entities import HomAlgebra, IdentityCheck, sorted_pairs
from hjj.domain.derivation.entities import (
    BracketReport,
    DerivationQuery,
    DerivationReport,
    map_from_coordinates,
)
from hjj.domain.derivation.errors import NotAMember
from hjj.domain.linalg.entities import Matrix, Subspace, Vector, add_vectors, scale_vector
from hjj.domain.linalg.errors import DimensionMismatch
from hjj.domain.linalg.operations import SparseRow, solve_homogeneous, span
from hjj.domain.representation.entities import Representation
from hjj.domain.representation.errors import SingularTwist

logger = get_logger(__name__)


def _subtract(x: Vector, y: Vector) -> Vector:
    return tuple(a - b for a, b in zip(x, y, strict=True))


class DerivationService:
    """Spaces of alpha^k-derivations and antiderivations."""

    def __init__(self, representations: RepresentationService | None = None):
        self._representations = representations or representation_service

    def _resolve(self, q: DerivationQuery) -> tuple[Representation, Matrix]:
        rep = q.rep or self._representations.adjoint_rep(q.algebra, 0)
        if q.k < 0 and not rep.phi.is_invertible():
            raise SingularTwist("phi", q.k)
        return rep, twist_power(q.algebra, q.k)

    def derivation_space(self, q: DerivationQuery) -> Subspace:
        """
        Solve the twist and (anti)Leibniz conditions for maps A -> V.

        Args:
            q: Algebra, representation, power k and the anti flag

        Returns:
            Canonical subspace of map coordinates; entry (o, i) at o * dim A + i
        """
        rep, power = self._resolve(q)
        a = q.algebra
        da, dv = a.dim, rep.dim_v

        def coord(o: int, i: int) -> int:
            return o * da + i

        equations: list[SparseRow] = []
        # D alpha = phi D
        for i in range(da):
            for o in range(dv):
                row: dict[int, Fraction] = {}
                for j in range(da):
                    if a.alpha[j, i] != 0:
                        row[coord(o, j)] = row.get(coord(o, j), Fraction(0)) + a.alpha[j, i]
                for p in range(dv):
                    if rep.phi[o, p] != 0:
                        row[coord(p, i)] = row.get(coord(p, i), Fraction(0)) - rep.phi[o, p]
                equations.append(row)
        # D(e_a * e_b) = sign (rho(alpha^k e_a) D e_b + rho(alpha^k e_b) D e_a)
        twisted = [rep.action(power.column(i)) for i in range(da)]
        for x, y in sorted_pairs(da):
            for o in range(dv):
                row = {}
                for j, c in enumerate(a.c[x][y]):
                    if c != 0:
                        row[coord(o, j)] = row.get(coord(o, j), Fraction(0)) + c
                for p in range(dv):
                    for left, right in ((x, y), (y, x)):
                        value = twisted[left][o, p]
                        if value != 0:
                            key = coord(p, right)
                            row[key] = row.get(key, Fraction(0)) - q.sign * value
                equations.append(row)
        logger.debug("Derivation system %s: %d equations, %d unknowns", q.space_name, len(equations), dv * da)
        return solve_homogeneous(equations, dv * da)

    def derivation_maps(self, q: DerivationQuery) -> list[Matrix]:
        """Canonical basis of derivation_space as matrices."""
        rep = q.rep or self._representations.adjoint_rep(q.algebra, 0)
        return [
            map_from_coordinates(v, rep.dim_v, q.algebra.dim)
            for v in self.derivation_space(q).vectors
        ]

    def defect(self, q: DerivationQuery, d: Matrix) -> DerivationReport:
        """
        Evaluate both defining conditions of the query's space on d.

        Args:
            q: Space description
            d: Matrix of shape (dim V, dim A)

        Returns:
            DerivationReport with residuals per basis element and per sorted pair
        """
        rep, power = self._resolve(q)
        a = q.algebra
        if d.shape != (rep.dim_v, a.dim):
            raise DimensionMismatch("derivation defect", (rep.dim_v, a.dim), d.shape)
        images = [d.column(i) for i in range(a.dim)]
        twisted = [rep.action(power.column(i)) for i in range(a.dim)]
        twist = IdentityCheck.run(
            "twist",
            ((i,) for i in range(a.dim)),
            lambda i: _subtract(d.apply(a.alpha.column(i)), rep.phi.apply(images[i])),
        )
        leibniz = IdentityCheck.run(
            "antileibniz" if q.anti else "leibniz",
            sorted_pairs(a.dim),
            lambda x, y: _subtract(
                d.apply(a.c[x][y]),
                scale_vector(
                    q.sign,
                    add_vectors(twisted[x].apply(images[y]), twisted[y].apply(images[x])),
                ),
            ),
        )
        return DerivationReport(twist, leibniz)

    def is_member(self, q: DerivationQuery, d: Matrix) -> bool:
        """Membership by direct evaluation."""
        return self.defect(q, d).valid

    def inner_antiderivation_space(self, a: HomAlgebra, rep: Representation | None = None, k: int = 0) -> Subspace:
        """
        Span of the inner maps v -> rho(alpha^k v) u over phi-fixed u.

        Args:
            a: Algebra
            rep: Representation, adjoint when omitted
            k: Power of the twist

        Returns:
            Subspace of map coordinates contained in the alpha^(k+1)-antiderivations
        """
        rep = rep or self._representations.adjoint_rep(a, 0)
        power = twist_power(a, k)
        fixed = solve_homogeneous(
            [
                {j: x for j, x in enumerate((rep.phi - Matrix.identity(rep.dim_v)).row(i)) if x != 0}
                for i in range(rep.dim_v)
            ],
            rep.dim_v,
        )
        twisted = [rep.action(power.column(i)) for i in range(a.dim)]
        maps = [
            Matrix.from_columns([twisted[i].apply(u) for i in range(a.dim)], rep.dim_v).entries
            for u in fixed.vectors
        ]
        return span(maps, rep.dim_v * a.dim)

    def bracket_classify(
        self,
        a: HomAlgebra,
        d1: Matrix,
        k1: int,
        anti1: bool,
        d2: Matrix,
        k2: int,
        anti2: bool,
    ) -> BracketReport:
        """
        Locate the commutator and anticommutator of two algebra (anti)derivations.

        Args:
            a: Algebra
            d1: Member of Der or ADer with power k1
            d2: Member of Der or ADer with power k2

        Returns:
            BracketReport for power k1 + k2

        Raises:
            NotAMember: When d1 or d2 is not in its declared space
        """
        q1 = DerivationQuery(a, None, k1, anti1)
        q2 = DerivationQuery(a, None, k2, anti2)
        if not self.is_member(q1, d1):
            raise NotAMember("d1", q1.space_name)
        if not self.is_member(q2, d2):
            raise NotAMember("d2", q2.space_name)

        power = k1 + k2
        mixed = anti1 != anti2
        commutator = d1 @ d2 - d2 @ d1
        anticommutator = d1 @ d2 + d2 @ d1
        commutator_member = self.is_member(DerivationQuery(a, None, power, mixed), commutator)
        if not commutator_member:
            logger.warning(
                "Commutator of %s and %s is not in %s",
                q1.space_name,
                q2.space_name,
                DerivationQuery(a, None, power, mixed).space_name,
            )

        a_k1, a_k2 = twist_power(a, k1), twist_power(a, k2)
        left = a_k2 @ d1
        right = a_k1 @ d2

        def cross(x: int, y: int) -> Vector:
            return add_vectors(
                a.multiply(left.column(x), right.column(y)),
                a.multiply(right.column(x), left.column(y)),
            )

        def image(x: int, y: int) -> Vector:
            return anticommutator.apply(a.c[x][y])

        if mixed:
            anti_condition = IdentityCheck.run("antiderivation_condition", sorted_pairs(a.dim), cross)
            der_condition = IdentityCheck.run(
                "derivation_condition",
                sorted_pairs(a.dim),
                lambda x, y: add_vectors(image(x, y), cross(x, y)),
            )
        else:
            der_condition = IdentityCheck.run("derivation_condition", sorted_pairs(a.dim), cross)
            anti_condition = IdentityCheck.run(
                "antiderivation_condition",
                sorted_pairs(a.dim),
                lambda x, y: _subtract(image(x, y), cross(x, y)),
            )

        return BracketReport(
            power=power,
            commutator=commutator,
            commutator_anti=mixed,
            commutator_member=commutator_member,
            anticommutator=anticommutator,
            derivation_condition=der_condition,
            antiderivation_condition=anti_condition,
            anticommutator_in_der=self.is_member(DerivationQuery(a, None, power, False), anticommutator),
            anticommutator_in_ader=self.is_member(DerivationQuery(a, None, power, True), anticommutator),
        )


derivation_service = DerivationService()
