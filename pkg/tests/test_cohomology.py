"""Zigzag cohomology tests."""
from fractions import Fraction

import pytest

from hjj.application.cohomology.services import CohomologyService
from hjj.core.config import Settings
from hjj.core.errors import ValidationError
from hjj.domain.algebra.entities import BilinearMap
from hjj.domain.cohomology.entities import Cochain, CochainOperator, cochain_index
from hjj.domain.cohomology.errors import DegreeCap, ZigzagViolation
from hjj.domain.derivation.entities import DerivationQuery
from hjj.domain.linalg.entities import Matrix
from hjj.domain.linalg.operations import span
from hjj.domain.representation.entities import Representation
from hjj.domain.representation.errors import SingularTwist
from tests.factories import algebra, mat, vec

SHIFT = mat([0, 0], [1, 0])


# ==========================================
# Cochain spaces
# ==========================================

class TestCochainSpaces:
    """C^n, A^n and S^n."""

    def test_cochain_index(self):
        """Inputs are little-endian below the output coordinate."""
        assert cochain_index(1, (0, 1), 2) == 4 + 2
        assert cochain_index(0, (1, 0), 3) == 1

    def test_full_dimension(self, cohomology, alg2_adjoint):
        """dim V * dim A^n."""
        assert cohomology.cochain_dim(alg2_adjoint, 2) == 8

    def test_degree_zero_is_fixed_vectors(self, cohomology, alg2_adjoint):
        """C^0 is the set of phi-fixed vectors."""
        assert cohomology.hom_cochain_space(alg2_adjoint, 0) == span([vec(0, 1)], 2)

    def test_alg2_adjoint_c1(self, cohomology, alg2_adjoint):
        """Maps commuting with alpha on ALG2 form a plane."""
        assert cohomology.hom_cochain_space(alg2_adjoint, 1).dim == 2

    def test_trivial_degree_two(self, cohomology, alg2_trivial):
        """Forms with values in the trivial representation."""
        assert cohomology.hom_cochain_space(alg2_trivial, 2).dim == 2
        assert cohomology.alpha_skew_subspace(alg2_trivial, 2).dim == 1
        assert cohomology.symmetric_subspace(alg2_trivial, 2).dim == 1

    def test_subspaces_nest(self, cohomology, alg2_adjoint):
        """A^n and S^n sit inside C^n."""
        c = cohomology.hom_cochain_space(alg2_adjoint, 2)
        assert c.contains_subspace(cohomology.alpha_skew_subspace(alg2_adjoint, 2))
        assert c.contains_subspace(cohomology.symmetric_subspace(alg2_adjoint, 2))

    def test_cochain_conversions(self):
        """Matrices and bilinear maps become cochains of degree 1 and 2."""
        f = Cochain.from_matrix(SHIFT)
        assert (f.degree, f.dim_a, f.dim_v) == (1, 2, 2)
        assert f.value((0,)) == vec(0, 1)
        assert f.to_matrix() == SHIFT


# ==========================================
# Operators
# ==========================================

class TestOperators:
    """d, delta and their composite."""

    def test_d_of_derivation_vanishes(self, cohomology, alg2_adjoint):
        """The alpha-antiderivation of ALG2 is a 1-cocycle."""
        assert cohomology.differential(alg2_adjoint, Cochain.from_matrix(SHIFT)).is_zero()
        assert cohomology.is_cocycle(alg2_adjoint, Cochain.from_matrix(SHIFT))

    def test_identity_not_cocycle(self, cohomology, alg2_adjoint):
        """d Id(e1, e1) = 3 e2."""
        image = cohomology.differential(alg2_adjoint, Cochain.from_matrix(Matrix.identity(2)))
        assert image.value((0, 0)) == vec(0, 3)

    def test_delta_of_degree_zero(self, cohomology, alg2_adjoint):
        """delta^0 v (x) = x * v."""
        v = Cochain(0, 2, 2, vec(1, 0))
        image = cohomology.differential(alg2_adjoint, v, "delta")
        assert image.value((0,)) == vec(0, 1)
        assert image.value((1,)) == vec(0, 0)

    def test_coboundary_shapes(self, cohomology, alg2_adjoint):
        """Restricted matrices map the canonical basis into full cochains."""
        assert cohomology.coboundary_d(alg2_adjoint, 1).shape == (8, 2)
        assert cohomology.coboundary_delta(alg2_adjoint, 0).shape == (4, 1)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_zigzag_vanishes(self, cohomology, alg2_adjoint, n):
        """d^n o delta^(n-1) = 0 on a valid algebra."""
        assert cohomology.zigzag_composite(alg2_adjoint, n).is_zero()

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_zigzag_trivial(self, cohomology, alg2_trivial, n):
        """Also for the trivial representation."""
        assert cohomology.zigzag_composite(alg2_trivial, n).is_zero()

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_zigzag_abel1(self, cohomology, representations, abel1, n):
        """Adjoint and trivial coefficients on the one-dimensional zero algebra."""
        assert cohomology.zigzag_composite(representations.adjoint_rep(abel1, 0), n).is_zero()
        assert cohomology.zigzag_composite(representations.trivial_rep(abel1), n).is_zero()

    def test_zigzag_current_algebra(self, cohomology, representations, algebras, alg2):
        """ALG2 tensored with the dual numbers K[x]/(x^2)."""
        dual = BilinearMap.from_entries(2, 2, {(0, 0): vec(1, 0), (0, 1): vec(0, 1), (1, 0): vec(0, 1)})
        current = algebras.current_algebra(alg2, dual)
        for r in (representations.adjoint_rep(current, 0), representations.trivial_rep(current)):
            assert cohomology.zigzag_composite(r, 3).is_zero()

    def test_zigzag_tensor(self, cohomology, representations, algebras, alg2):
        """ALG2 tensored with twisted dual numbers, alpha(x) = -x."""
        twisted = algebra(mat([1, 0], [0, -1]), {(0, 0): vec(1, 0), (0, 1): vec(0, -1)})
        tensor = algebras.tensor_hom_algebra(alg2, twisted)
        assert algebras.verify_algebra(tensor).valid
        assert cohomology.zigzag_composite(representations.adjoint_rep(tensor, 0), 3).is_zero()

    def test_zigzag_central_extension(self, cohomology, representations, extensions, alg2):
        """The extension of ALG2 by theta(e1, e1) = 1."""
        theta = BilinearMap.from_form(mat([1, 0], [0, 0]))
        extended = extensions.central_extension(alg2, theta).algebra
        for r in (representations.adjoint_rep(extended, 0), representations.trivial_rep(extended)):
            assert cohomology.zigzag_composite(r, 3).is_zero()
            assert cohomology.cohomology(r, 3).dim_h is not None

    def test_zigzag_starts_at_one(self, cohomology, alg2_adjoint):
        """There is no delta^-1."""
        with pytest.raises(ValidationError):
            cohomology.zigzag_composite(alg2_adjoint, 0)


# ==========================================
# Cohomology
# ==========================================

class TestCohomology:
    """Dimensions and representatives."""

    def test_h0_is_annihilator(self, cohomology, algebras, alg2):
        """H^0 of the adjoint representation is the phi-fixed annihilator."""
        report = cohomology.adjoint_cohomology(alg2, 0, 0)
        assert report.z == algebras.hom_annihilator(alg2)
        assert report.dim_b == 0
        assert report.h == (vec(0, 1),)

    def test_alg2_adjoint_h1(self, cohomology, alg2_adjoint):
        """One class, represented by e1 -> e2."""
        report = cohomology.cohomology(alg2_adjoint, 1)
        assert (report.dim_c, report.dim_z, report.dim_b, report.dim_h) == (2, 1, 0, 1)
        assert report.h == (vec(0, 0, 1, 0),)
        assert report.warnings == ()

    def test_alg2_trivial_h1(self, cohomology, alg2):
        """Trivial coefficients: the functional e1^*."""
        report = cohomology.trivial_cohomology(alg2, 1)
        assert report.h == (vec(1, 0),)

    def test_alg3_adjoint_h1(self, cohomology, alg3):
        """ALG3 has no 1-cocycles."""
        report = cohomology.adjoint_cohomology(alg3, 0, 1)
        assert (report.dim_z, report.dim_b, report.dim_h) == (0, 0, 0)

    def test_abel1_h2(self, cohomology, abel1):
        """The one-dimensional zero algebra has a single 2-class."""
        assert cohomology.adjoint_cohomology(abel1, 0, 2).dim_h == 1

    @pytest.mark.parametrize("n", [0, 1, 2, 3])
    def test_b_inside_z(self, cohomology, alg2_adjoint, alg2_trivial, n):
        """On a valid algebra every degree has a defined quotient."""
        for r in (alg2_adjoint, alg2_trivial):
            report = cohomology.cohomology(r, n)
            assert report.z.contains_subspace(report.b)
            assert report.dim_h == report.dim_z - report.dim_b
            assert report.warnings == ()

    def test_singular_twist(self, cohomology, point1):
        """Negative adjoint powers need an invertible alpha."""
        with pytest.raises(SingularTwist):
            cohomology.adjoint_cohomology(point1, -1, 1)


class TestDerivationBridge:
    """Degree-one cocycles and coboundaries are antiderivations."""

    @pytest.mark.parametrize("name", ["alg2", "alg3"])
    def test_z1_is_antiderivations(self, cohomology, derivations, representations, request, name):
        """Z^1 equals ADer_{alpha^1} with values in the representation."""
        a = request.getfixturevalue(name)
        r = representations.adjoint_rep(a, 0)
        expected = derivations.derivation_space(DerivationQuery(a, r, 1, True))
        assert cohomology.cohomology(r, 1).z == expected

    def test_z1_trivial(self, cohomology, derivations, alg2, alg2_trivial):
        """Same statement with trivial coefficients."""
        expected = derivations.derivation_space(DerivationQuery(alg2, alg2_trivial, 1, True))
        assert cohomology.cohomology(alg2_trivial, 1).z == expected

    def test_b1_is_inner(self, cohomology, derivations, alg2_adjoint, alg2):
        """B^1 equals the inner antiderivations."""
        assert cohomology.cohomology(alg2_adjoint, 1).b == derivations.inner_antiderivation_space(alg2)


class TestDegreeCap:
    """MAX_DEGREE bounds every degree argument."""

    @pytest.fixture
    def capped(self) -> CohomologyService:
        return CohomologyService(Settings(MAX_DEGREE=1))

    def test_above_cap(self, capped, alg2_adjoint):
        """Degree 2 is refused when the cap is 1."""
        with pytest.raises(DegreeCap) as exc:
            capped.cohomology(alg2_adjoint, 2)
        assert exc.value.details == {"degree": 2, "max_degree": 1}

    def test_negative(self, capped, alg2_adjoint):
        """Negative degrees are refused."""
        with pytest.raises(DegreeCap):
            capped.hom_cochain_space(alg2_adjoint, -1)

    def test_at_cap(self, capped, alg2_adjoint):
        """The cap itself is allowed."""
        assert capped.cohomology(alg2_adjoint, 1).dim_h == 1

    def test_evaluation_is_not_capped(self, alg2_adjoint, alg2_trivial):
        """Applying d or delta to a given cochain works above the cap."""
        capped = CohomologyService(Settings(MAX_DEGREE=0))
        f = Cochain.from_matrix(SHIFT)
        assert capped.differential(alg2_adjoint, f, "d").is_zero()
        assert capped.is_cocycle(alg2_adjoint, f)
        skew, delta = capped.skew_coboundary(alg2_trivial, 1)
        assert delta.shape == (4, skew.dim)
        with pytest.raises(DegreeCap):
            capped.coboundary_delta(alg2_trivial, 1)


# ==========================================
# Zigzag enforcement
# ==========================================

class _MisassembledDelta(CohomologyService):
    """delta^2 replaced by the map sending a cochain to its coordinate sum everywhere."""

    def _operator(self, r: Representation, n: int, sign: int) -> CochainOperator:
        if sign < 0 and n == 2:
            cols = self.cochain_dim(r, 2)
            rows = tuple({j: Fraction(1) for j in range(cols)} for _ in range(self.cochain_dim(r, 3)))
            return CochainOperator("delta", 2, rows, cols)
        return super()._operator(r, n, sign)


class _MisassembledD(CohomologyService):
    """d^3 replaced by the coordinate embedding of 3-cochains into 4-cochains."""

    def _operator(self, r: Representation, n: int, sign: int) -> CochainOperator:
        if sign > 0 and n == 3:
            cols = self.cochain_dim(r, 3)
            rows = tuple({k: Fraction(1)} if k < cols else {} for k in range(self.cochain_dim(r, 4)))
            return CochainOperator("d", 3, rows, cols)
        return super()._operator(r, n, sign)


class TestZigzagEnforcement:
    """A nonzero d o delta on verified inputs is an error at every degree up to the cap."""

    def test_cohomology_degree_three(self, alg2_trivial):
        """B^3 outside Z^3 on ALG2 raises."""
        service = _MisassembledDelta(Settings(MAX_DEGREE=4))
        with pytest.raises(ZigzagViolation) as exc:
            service.cohomology(alg2_trivial, 3)
        assert exc.value.details == {"degree": 3}

    def test_reported_without_assertions(self, alg2_trivial):
        """With ASSERT_INVARIANTS off the failure becomes a warning."""
        service = _MisassembledDelta(Settings(MAX_DEGREE=4, ASSERT_INVARIANTS=False))
        report = service.cohomology(alg2_trivial, 3)
        assert report.dim_h is None
        assert report.warnings == ("B^3 is not contained in Z^3; the quotient is undefined",)

    def test_coboundary_delta_degree_two(self, alg2_trivial):
        """delta^2 is checked against d^3."""
        service = _MisassembledD(Settings(MAX_DEGREE=4))
        with pytest.raises(ZigzagViolation) as exc:
            service.coboundary_delta(alg2_trivial, 2)
        assert exc.value.details == {"degree": 3}

    def test_check_stays_within_cap(self, alg2_trivial):
        """d^3 is not assembled when the cap is 2."""
        service = _MisassembledD(Settings(MAX_DEGREE=2))
        assert service.coboundary_delta(alg2_trivial, 2).cols == 1
