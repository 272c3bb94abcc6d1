"""DTOs for derivation spaces and bracket reports."""
from pydantic import BaseModel

from hjj.application.algebra.dtos import IdentityCheckDTO, SubspaceDTO
from hjj.domain.derivation.entities import BracketReport, DerivationQuery, DerivationReport
from hjj.domain.linalg.entities import Matrix, Subspace, format_matrix
from hjj.infrastructure.files.schemas import AlgebraFile, RepresentationFile


class DerivationSpaceResponse(BaseModel):
    """Basis of a space of alpha^k-(anti)derivations as matrices."""
    space: str
    k: int
    anti: bool
    dim: int
    maps: list[list[list[str]]]
    coordinates: SubspaceDTO

    @classmethod
    def from_space(cls, q: DerivationQuery, space: Subspace, maps: list[Matrix]) -> "DerivationSpaceResponse":
        return cls(
            space=q.space_name,
            k=q.k,
            anti=q.anti,
            dim=space.dim,
            maps=[format_matrix(m) for m in maps],
            coordinates=SubspaceDTO.from_subspace(space),
        )


class DerivationReportResponse(BaseModel):
    valid: bool
    twist: IdentityCheckDTO
    leibniz: IdentityCheckDTO

    @classmethod
    def from_report(cls, report: DerivationReport, labels: list[str]) -> "DerivationReportResponse":
        return cls(
            valid=report.valid,
            twist=IdentityCheckDTO.from_check(report.twist, labels),
            leibniz=IdentityCheckDTO.from_check(report.leibniz, labels),
        )


class BracketReportResponse(BaseModel):
    """Where the commutator and anticommutator of two maps land."""
    power: int
    commutator: list[list[str]]
    commutator_member: bool
    anticommutator: list[list[str]]
    derivation_condition: IdentityCheckDTO
    antiderivation_condition: IdentityCheckDTO
    anticommutator_in_der: bool
    anticommutator_in_ader: bool

    @classmethod
    def from_report(cls, report: BracketReport, labels: list[str]) -> "BracketReportResponse":
        return cls(
            power=report.power,
            commutator=format_matrix(report.commutator),
            commutator_member=report.commutator_member,
            anticommutator=format_matrix(report.anticommutator),
            derivation_condition=IdentityCheckDTO.from_check(report.derivation_condition, labels),
            antiderivation_condition=IdentityCheckDTO.from_check(report.antiderivation_condition, labels),
            anticommutator_in_der=report.anticommutator_in_der,
            anticommutator_in_ader=report.anticommutator_in_ader,
        )


class DerivationRequest(BaseModel):
    """Algebra and parameters of a derivation space query."""
    algebra: AlgebraFile
    k: int = 0
    anti: bool = False
    representation: RepresentationFile | None = None
