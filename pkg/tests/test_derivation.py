"""Derivation and antiderivation space tests."""
import pytest

from hjj.domain.derivation.entities import DerivationQuery, map_from_coordinates
from hjj.domain.derivation.errors import NotAMember
from hjj.domain.linalg.entities import Matrix, Subspace
from hjj.domain.linalg.operations import span
from hjj.domain.representation.errors import SingularTwist
from tests.factories import mat, vec

SHIFT = mat([0, 0], [1, 0])  # e1 -> e2, e2 -> 0


class TestDerivationSpace:
    """derivation_space on the fixtures."""

    def test_alg2_derivations(self, derivations, alg2):
        """Der_{alpha^0}(ALG2) is spanned by e1 -> e2."""
        space = derivations.derivation_space(DerivationQuery(alg2, None, 0, False))
        assert space == span([SHIFT.entries], 4)

    def test_alg2_antiderivations(self, derivations, alg2):
        """ADer_{alpha^1}(ALG2) is spanned by e1 -> e2."""
        space = derivations.derivation_space(DerivationQuery(alg2, None, 1, True))
        assert space.dim == 1
        assert derivations.derivation_maps(DerivationQuery(alg2, None, 1, True)) == [SHIFT]

    @pytest.mark.parametrize("k", [-1, 0, 2])
    @pytest.mark.parametrize("anti", [False, True])
    def test_abel1_everything(self, derivations, abel1, k, anti):
        """On a zero product with identity twist every map qualifies."""
        assert derivations.derivation_space(DerivationQuery(abel1, None, k, anti)) == Subspace.full(1)

    def test_trivial_values(self, derivations, alg2, alg2_trivial):
        """Derivations into the trivial representation are alpha-invariant functionals killing e2."""
        space = derivations.derivation_space(DerivationQuery(alg2, alg2_trivial, 0, False))
        assert space == span([vec(1, 0)], 2)

    def test_singular_phi(self, derivations, point1, representations):
        """Negative k needs an invertible phi."""
        q = DerivationQuery(point1, representations.adjoint_rep(point1, 0), -1, False)
        with pytest.raises(SingularTwist):
            derivations.derivation_space(q)

    def test_space_name(self, alg2):
        """Spaces are named after their type and power."""
        assert DerivationQuery(alg2, None, 2, True).space_name == "ADer_alpha^2"
        assert DerivationQuery(alg2, None, 0, False).space_name == "Der_alpha^0"


class TestDefect:
    """Direct evaluation of the defining conditions."""

    def test_alg3_constraint_pattern(self, derivations, alg3):
        """diag(6, 1, -4) meets every antiderivation condition except at (e3, e3)."""
        d = mat([6, 0, 0], [0, 1, 0], [0, 0, -4])
        report = derivations.defect(DerivationQuery(alg3, None, 1, True), d)
        assert report.twist.holds
        assert [w.args for w in report.leibniz.failures] == [(2, 2)]
        assert report.leibniz.failures[0].residual == vec(0, 0, -40)

    def test_membership_matches_space(self, derivations, alg2):
        """Every basis map of the space passes is_member."""
        q = DerivationQuery(alg2, None, 1, True)
        for d in derivations.derivation_maps(q):
            assert derivations.is_member(q, d)
        assert not derivations.is_member(q, Matrix.identity(2))

    def test_coordinates(self):
        """Coordinate o * dim A + i holds entry (o, i)."""
        assert map_from_coordinates(vec(0, 0, 1, 0), 2, 2) == SHIFT


class TestInnerAntiderivations:
    """Inner antiderivation spaces."""

    def test_alg2_adjoint(self, derivations, alg2):
        """The fixed vectors of ALG2 annihilate, so there are no inner maps."""
        assert derivations.inner_antiderivation_space(alg2).dim == 0

    def test_alg3_adjoint(self, derivations, alg3):
        """e1 spans the fixed vectors and annihilates."""
        assert derivations.inner_antiderivation_space(alg3).dim == 0

    @pytest.mark.parametrize("k", [0, 1, 2])
    def test_trivial(self, derivations, alg2, alg2_trivial, k):
        """A zero action gives no inner maps."""
        assert derivations.inner_antiderivation_space(alg2, alg2_trivial, k).dim == 0


class TestBracketClassify:
    """Commutators and anticommutators of (anti)derivations."""

    def test_commuting_nilpotents(self, derivations, alg2):
        """Two copies of the ALG2 derivation commute and anticommute to zero."""
        report = derivations.bracket_classify(alg2, SHIFT, 0, False, SHIFT, 0, False)
        assert report.commutator.is_zero()
        assert report.anticommutator.is_zero()
        assert report.commutator_member
        assert report.anticommutator_in_der and report.anticommutator_in_ader
        assert report.conditions_agree

    def test_antiderivation_pair(self, derivations, alg2):
        """The commutator of two alpha-antiderivations lies in Der_{alpha^2}."""
        report = derivations.bracket_classify(alg2, SHIFT, 1, True, SHIFT, 1, True)
        assert report.power == 2
        assert not report.commutator_anti
        assert report.commutator_member
        assert report.conditions_agree

    def test_mixed_pair(self, derivations, abel1):
        """A derivation and an antiderivation bracket into ADer."""
        d1, d2 = mat([2]), mat([3])
        report = derivations.bracket_classify(abel1, d1, 0, False, d2, 0, True)
        assert report.commutator_anti
        assert report.commutator_member
        assert report.conditions_agree

    def test_non_member_rejected(self, derivations, alg2):
        """Inputs outside their declared spaces are rejected."""
        with pytest.raises(NotAMember):
            derivations.bracket_classify(alg2, Matrix.identity(2), 0, False, SHIFT, 0, False)
