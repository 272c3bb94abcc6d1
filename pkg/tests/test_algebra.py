"""Hom-Jacobi-Jordan axiom, subspace and construction tests."""
import pytest

from hjj.domain.algebra.entities import BilinearMap, HomAlgebra
from hjj.domain.algebra.errors import AsymmetricProduct, InvalidFactor, InvalidForm
from hjj.domain.linalg.entities import Matrix, Subspace
from hjj.domain.linalg.errors import DimensionMismatch
from hjj.domain.linalg.operations import span
from tests.factories import algebra, mat, vec


# ==========================================
# Axioms
# ==========================================

class TestVerifyAlgebra:
    """verify_algebra on the fixture algebras."""

    def test_alg2_valid(self, algebras, alg2):
        """ALG2 satisfies every axiom."""
        report = algebras.verify_algebra(alg2)
        assert report.valid
        assert all(check.holds for check in report.checks)

    def test_abel1_valid(self, algebras, abel1):
        """A zero product with the identity twist is valid."""
        assert algebras.verify_algebra(abel1).valid

    def test_point1_valid(self, algebras, point1):
        """e * e = e with a zero twist satisfies the axioms."""
        assert algebras.verify_algebra(point1).valid

    def test_alg3_multiplicativity_witness(self, algebras, alg3):
        """alpha(e2 * e2) = 2 e3 but alpha(e2) * alpha(e2) = 4 e3."""
        report = algebras.verify_algebra(alg3)
        assert not report.valid
        witness = report.multiplicative.witness
        assert witness is not None
        assert witness.args == (1, 1)
        assert witness.residual == vec(0, 0, -2)

    def test_alg3_hom_jacobi_failures(self, algebras, alg3):
        """The first failing triple is (e2, e2, e2); (e2, e2, e3) fails with residual 4 e3."""
        check = algebras.verify_algebra(alg3).hom_jacobi
        assert check.witness is not None
        assert check.witness.args == (1, 1, 1)
        assert check.witness.residual == vec(12, 0, 0)
        failures = {w.args: w.residual for w in check.failures}
        assert failures[(1, 1, 2)] == vec(0, 0, 4)

    def test_asymmetric_product_rejected(self):
        """Structure constants must be commutative."""
        product = BilinearMap.from_entries(2, 2, {(0, 1): vec(1, 0)})
        with pytest.raises(AsymmetricProduct):
            HomAlgebra(product, Matrix.identity(2))

    def test_alpha_shape_checked(self):
        """alpha must be square of the algebra's dimension."""
        with pytest.raises(DimensionMismatch):
            HomAlgebra(BilinearMap.zero(2), Matrix.identity(3))


class TestHomJacobian:
    """Direct evaluation of the Hom-Jacobi expression."""

    def test_alg2_zero(self, algebras, alg2):
        """(e1, e1, e1) gives zero because e2 annihilates."""
        e1 = alg2.basis_vector(0)
        assert algebras.hom_jacobian(alg2, e1, e1, e1) == vec(0, 0)

    def test_alg3_residual(self, algebras, alg3):
        """(e2, e2, e3) gives 4 e3."""
        e2, e3 = alg3.basis_vector(1), alg3.basis_vector(2)
        assert algebras.hom_jacobian(alg3, e2, e2, e3) == vec(0, 0, 4)

    def test_wrong_length(self, algebras, alg2):
        """Arguments must live in the algebra."""
        with pytest.raises(DimensionMismatch):
            algebras.hom_jacobian(alg2, vec(1), vec(1, 0), vec(1, 0))


# ==========================================
# Subspaces
# ==========================================

class TestHomAnnihilator:
    """Hom-annihilator computation."""

    def test_alg2(self, algebras, alg2):
        """ALG2 has annihilator span{e2}."""
        assert algebras.hom_annihilator(alg2) == span([vec(0, 1)], 2)

    def test_abel1(self, algebras, abel1):
        """Everything annihilates in a zero-product algebra with identity twist."""
        assert algebras.hom_annihilator(abel1) == Subspace.full(1)

    def test_alg3(self, algebras, alg3):
        """ALG3 has annihilator span{e1}."""
        assert algebras.hom_annihilator(alg3) == span([vec(1, 0, 0)], 3)


class TestHomIdeal:
    """Hom-ideal membership."""

    def test_annihilator_is_ideal(self, algebras, alg2):
        """span{e2} is stable under alpha and products."""
        assert algebras.check_hom_ideal(alg2, span([vec(0, 1)], 2))

    def test_not_alpha_stable(self, algebras, alg2):
        """alpha(e1) = e1 + e2 leaves span{e1}."""
        assert not algebras.check_hom_ideal(alg2, span([vec(1, 0)], 2))


class TestMorphisms:
    """Hom-algebra morphisms."""

    def test_alpha_is_endomorphism(self, algebras, alg2):
        """A multiplicative twist is a morphism of the algebra to itself."""
        assert algebras.check_morphism(alg2, alg2, alg2.alpha).valid

    def test_scaling_fails_product(self, algebras, alg2):
        """2 Id does not preserve e1 * e1 = e2."""
        report = algebras.check_morphism(alg2, alg2, Matrix.scalar(2, 2))
        assert report.twist.holds
        assert not report.product.holds
        assert report.product.witness is not None
        assert report.product.witness.args == (0, 0)

    def test_hom_associative(self, algebras, alg2, alg3):
        """ALG2 is Hom-associative; ALG3 is not."""
        assert algebras.check_hom_associative(alg2).holds
        assert not algebras.check_hom_associative(alg3).holds


# ==========================================
# Constructions
# ==========================================

class TestCurrentAlgebra:
    """Current algebras L (x) B."""

    def test_unit_factor(self, algebras, alg2):
        """Tensoring with the field gives ALG2 back."""
        unit = BilinearMap.from_entries(1, 1, {(0, 0): vec(1)})
        current = algebras.current_algebra(alg2, unit)
        assert current.product == alg2.product
        assert current.alpha == alg2.alpha

    def test_dual_numbers(self, algebras, alg2):
        """ALG2 (x) K[eps]/(eps^2) is a valid four-dimensional algebra."""
        dual = BilinearMap.from_entries(2, 2, {(0, 0): vec(1, 0), (0, 1): vec(0, 1), (1, 0): vec(0, 1)})
        current = algebras.current_algebra(alg2, dual)
        assert current.dim == 4
        assert algebras.verify_algebra(current).valid

    def test_zero_product_factor(self, algebras, abel1):
        """ABEL1 gives a zero product whatever the associative factor."""
        dual = BilinearMap.from_entries(2, 2, {(0, 0): vec(1, 0), (0, 1): vec(0, 1), (1, 0): vec(0, 1)})
        assert algebras.current_algebra(abel1, dual).product.is_zero()

    def test_invalid_factor(self, algebras, alg3):
        """A factor failing its axioms is rejected."""
        unit = BilinearMap.from_entries(1, 1, {(0, 0): vec(1)})
        with pytest.raises(InvalidFactor):
            algebras.current_algebra(alg3, unit)

    def test_non_associative_factor(self, algebras, alg2):
        """B must be associative."""
        b = BilinearMap.from_entries(2, 2, {(0, 0): vec(0, 1), (1, 1): vec(1, 0)})
        with pytest.raises(InvalidFactor):
            algebras.current_algebra(alg2, b)


class TestTensorHomAlgebra:
    """Tensor products with commutative Hom-associative algebras."""

    def test_unit_factor(self, algebras, alg2):
        """The field with beta = Id gives ALG2 back."""
        field = algebra(mat([1]), {(0, 0): vec(1)})
        result = algebras.tensor_hom_algebra(alg2, field)
        assert result.product == alg2.product
        assert result.alpha == alg2.alpha
        assert algebras.verify_algebra(result).valid

    def test_zero_product_factor(self, algebras, abel1, alg2):
        """ABEL1 tensored with anything has a zero product."""
        assert algebras.tensor_hom_algebra(abel1, alg2).product.is_zero()

    def test_not_hom_associative(self, algebras, alg2, alg3):
        """ALG3 is not Hom-associative."""
        with pytest.raises(InvalidFactor):
            algebras.tensor_hom_algebra(alg2, alg3)


class TestCentralExtension:
    """One-dimensional central extensions."""

    def test_zero_form(self, extensions, algebras, alg2):
        """theta = 0 gives the direct product with a line."""
        result = extensions.central_extension(alg2, BilinearMap.zero(2, 1))
        assert result.valid
        assert result.algebra.dim == 3
        assert algebras.verify_algebra(result.algebra).valid

    def test_valid_form(self, extensions, algebras, alg2):
        """theta(e1, e1) = 1 gives a valid three-dimensional extension."""
        theta = BilinearMap.from_form(mat([1, 0], [0, 0]))
        result = extensions.central_extension(alg2, theta)
        assert result.valid
        assert result.algebra.basis_labels == ("e1", "e2", "c")
        assert algebras.verify_algebra(result.algebra).valid

    def test_non_invariant_form(self, extensions, algebras, alg2):
        """theta(e1, e2) = 1 is not invariant under alpha."""
        theta = BilinearMap.from_form(mat([0, 1], [1, 0]))
        result = extensions.central_extension(alg2, theta)
        assert not result.valid
        assert not algebras.verify_algebra(result.algebra).valid

    def test_asymmetric_form(self, extensions, alg2):
        """Forms must be symmetric."""
        with pytest.raises(InvalidForm):
            extensions.central_extension(alg2, BilinearMap.from_form(mat([0, 1], [0, 0])))

    def test_isomorphism_of_cohomologous_forms(self, extensions, alg2):
        """theta and theta + delta g give isomorphic extensions."""
        theta = BilinearMap.from_form(mat([1, 0], [0, 0]))
        phi = extensions.central_extension_isomorphism(alg2, theta, theta)
        assert phi == Matrix.identity(3)

    def test_no_isomorphism(self, extensions, alg2):
        """theta(e1, e1) = 1 is not exact, so it is not equivalent to zero."""
        theta = BilinearMap.from_form(mat([1, 0], [0, 0]))
        assert extensions.central_extension_isomorphism(alg2, theta, BilinearMap.zero(2, 1)) is None


class TestDExtension:
    """Extensions A + KD by an antiderivation."""

    def test_shift_is_valid(self, extensions, algebras, alg2):
        """d(e1) = e2, d(e2) = 0 squares to zero and is an alpha-antiderivation."""
        result = extensions.d_extension(alg2, mat([0, 0], [1, 0]))
        assert result.valid
        assert result.algebra.basis_labels == ("e1", "e2", "D")
        assert algebras.verify_algebra(result.algebra).valid

    def test_identity_is_invalid(self, extensions, algebras, alg2):
        """Id is not an alpha-antiderivation of ALG2."""
        result = extensions.d_extension(alg2, Matrix.identity(2))
        assert not result.valid
        assert "d is not an alpha-antiderivation" in result.reasons
        assert not algebras.verify_algebra(result.algebra).valid

    def test_shape(self, extensions, alg2):
        """d must be an endomorphism of A."""
        with pytest.raises(DimensionMismatch):
            extensions.d_extension(alg2, Matrix.identity(3))
