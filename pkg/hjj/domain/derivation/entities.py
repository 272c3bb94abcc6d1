"""Derivation entities."""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from hjj.domain.algebra.entities import HomAlgebra, IdentityCheck
from hjj.domain.linalg.entities import Matrix
from hjj.domain.representation.entities import Representation


@dataclass(frozen=True)
class DerivationQuery:
    """Which space of alpha^k-(anti)derivations A -> V to compute.

    rep=None means the adjoint representation with s = 0, so maps are A -> A.
    """

    algebra: HomAlgebra
    rep: Representation | None = None
    k: int = 0
    anti: bool = False

    @property
    def sign(self) -> int:
        return -1 if self.anti else 1

    @property
    def space_name(self) -> str:
        prefix = "ADer" if self.anti else "Der"
        return f"{prefix}_alpha^{self.k}"


def map_from_coordinates(coordinates: Sequence[Fraction], dim_v: int, dim_a: int) -> Matrix:
    """The map A -> V whose entry (o, i) sits at coordinate o * dim_a + i."""
    return Matrix(dim_v, dim_a, tuple(coordinates))


@dataclass(frozen=True)
class DerivationReport:
    """Twist compatibility and (anti)Leibniz rule of one linear map."""

    twist: IdentityCheck
    leibniz: IdentityCheck

    @property
    def valid(self) -> bool:
        return self.twist.holds and self.leibniz.holds


@dataclass(frozen=True)
class BracketReport:
    """Where the commutator and anticommutator of two (anti)derivations land.

    The derivation and antiderivation conditions are evaluated on basis pairs; the
    membership flags come from direct membership tests in the alpha^power spaces.
    """

    power: int
    commutator: Matrix
    commutator_anti: bool
    commutator_member: bool
    anticommutator: Matrix
    derivation_condition: IdentityCheck
    antiderivation_condition: IdentityCheck
    anticommutator_in_der: bool
    anticommutator_in_ader: bool

    @property
    def conditions_agree(self) -> bool:
        return (
            self.derivation_condition.holds == self.anticommutator_in_der
            and self.antiderivation_condition.holds == self.anticommutator_in_ader
        )
