"""DTOs for Hom-algebra reports."""
from collections.abc import Sequence

from pydantic import BaseModel, Field

from hjj.domain.algebra.entities import AxiomReport, IdentityCheck, MorphismReport, Witness
from hjj.domain.linalg.entities import Subspace, format_vector


# ==========================================
# Shared building blocks
# ==========================================

# Per-position label lists; None renders the raw index (coefficient numbers).
PositionLabels = Sequence[Sequence[str] | None]


def _render(i: int, position: int, labels: Sequence[str] | None, positions: PositionLabels | None) -> str:
    if positions is not None:
        names = positions[position] if position < len(positions) else None
        return names[i] if names is not None else str(i)
    return labels[i] if labels else f"e{i + 1}"


class WitnessDTO(BaseModel):
    """Failing basis tuple and its residual."""
    args: list[str]
    residual: list[str]

    @classmethod
    def from_witness(
        cls,
        witness: Witness,
        labels: Sequence[str] | None = None,
        positions: PositionLabels | None = None,
    ) -> "WitnessDTO":
        return cls(
            args=[_render(i, p, labels, positions) for p, i in enumerate(witness.args)],
            residual=format_vector(witness.residual),
        )


class IdentityCheckDTO(BaseModel):
    """One identity checked on all basis tuples."""
    name: str
    holds: bool
    witness: WitnessDTO | None = None
    failures: list[WitnessDTO] = Field(default_factory=list)

    @classmethod
    def from_check(
        cls,
        check: IdentityCheck,
        labels: Sequence[str] | None = None,
        positions: PositionLabels | None = None,
    ) -> "IdentityCheckDTO":
        failures = [WitnessDTO.from_witness(w, labels, positions) for w in check.failures]
        return cls(
            name=check.name,
            holds=check.holds,
            witness=failures[0] if failures else None,
            failures=failures,
        )


class SubspaceDTO(BaseModel):
    """Canonical basis of a subspace, rows in reduced echelon form."""
    ambient_dim: int
    dim: int
    basis: list[list[str]]

    @classmethod
    def from_subspace(cls, s: Subspace) -> "SubspaceDTO":
        return cls(
            ambient_dim=s.ambient_dim,
            dim=s.dim,
            basis=[format_vector(v) for v in s.vectors],
        )


# ==========================================
# Algebra reports
# ==========================================

class AxiomReportResponse(BaseModel):
    """Hom-Jacobi-Jordan axiom verification result."""
    valid: bool
    commutative: IdentityCheckDTO
    multiplicative: IdentityCheckDTO
    hom_jacobi: IdentityCheckDTO

    @classmethod
    def from_report(cls, report: AxiomReport, labels: Sequence[str]) -> "AxiomReportResponse":
        return cls(
            valid=report.valid,
            commutative=IdentityCheckDTO.from_check(report.commutative, labels),
            multiplicative=IdentityCheckDTO.from_check(report.multiplicative, labels),
            hom_jacobi=IdentityCheckDTO.from_check(report.hom_jacobi, labels),
        )


class MorphismReportResponse(BaseModel):
    """Whether a linear map is a morphism of Hom-algebras."""
    valid: bool
    twist: IdentityCheckDTO
    product: IdentityCheckDTO

    @classmethod
    def from_report(cls, report: MorphismReport, labels: Sequence[str]) -> "MorphismReportResponse":
        return cls(
            valid=report.valid,
            twist=IdentityCheckDTO.from_check(report.twist, labels),
            product=IdentityCheckDTO.from_check(report.product, labels),
        )


class AnnihilatorResponse(BaseModel):
    """Hom-annihilator of an algebra."""
    annihilator: SubspaceDTO
    basis_labels: list[str]
