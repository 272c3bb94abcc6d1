"""DTOs for deformation reports."""
from collections.abc import Sequence

from pydantic import BaseModel, Field

from hjj.application.algebra.dtos import IdentityCheckDTO
from hjj.application.cohomology.dtos import CohomologyReportResponse
from hjj.domain.algebra.entities import IdentityCheck
from hjj.domain.deformation.entities import (
    EquivalenceReport,
    FormalDeformationReport,
    LinearDeformationReport,
    LinearEquivalenceReport,
    RBFormalReport,
    RigidityReport,
)
from hjj.infrastructure.files.schemas import SeriesFile


def _orders(checks: Sequence[IdentityCheck], labels: Sequence[str]) -> list[IdentityCheckDTO]:
    return [IdentityCheckDTO.from_check(check, labels) for check in checks]


class LinearDeformationReportResponse(BaseModel):
    valid: bool
    compatible: IdentityCheckDTO
    symmetric: IdentityCheckDTO
    hom_jacobi: IdentityCheckDTO
    mixed: IdentityCheckDTO

    @classmethod
    def from_report(cls, report: LinearDeformationReport, labels: Sequence[str]) -> "LinearDeformationReportResponse":
        return cls(
            valid=report.valid,
            compatible=IdentityCheckDTO.from_check(report.compatible, labels),
            symmetric=IdentityCheckDTO.from_check(report.symmetric, labels),
            hom_jacobi=IdentityCheckDTO.from_check(report.hom_jacobi, labels),
            mixed=IdentityCheckDTO.from_check(report.mixed, labels),
        )


class FormalDeformationReportResponse(BaseModel):
    """Deformation equation order by order."""
    valid: bool
    first_failing_order: int | None
    orders: list[IdentityCheckDTO]
    compatible: IdentityCheckDTO

    @classmethod
    def from_report(cls, report: FormalDeformationReport, labels: Sequence[str]) -> "FormalDeformationReportResponse":
        return cls(
            valid=report.valid,
            first_failing_order=report.first_failing_order,
            orders=_orders(report.orders, labels),
            compatible=IdentityCheckDTO.from_check(report.compatible, positions=(None, labels, labels)),
        )


class LinearEquivalenceReportResponse(BaseModel):
    valid: bool
    checks: list[IdentityCheckDTO]

    @classmethod
    def from_report(cls, report: LinearEquivalenceReport, labels: Sequence[str]) -> "LinearEquivalenceReportResponse":
        return cls(valid=report.valid, checks=_orders(report.checks, labels))


class EquivalenceReportResponse(BaseModel):
    valid: bool
    first_failing_order: int | None
    twist: IdentityCheckDTO
    orders: list[IdentityCheckDTO]
    linear: LinearEquivalenceReportResponse | None = None

    @classmethod
    def from_report(cls, report: EquivalenceReport, labels: Sequence[str]) -> "EquivalenceReportResponse":
        return cls(
            valid=report.valid,
            first_failing_order=report.first_failing_order,
            twist=IdentityCheckDTO.from_check(report.twist, positions=(None, labels)),
            orders=_orders(report.orders, labels),
            linear=None if report.linear is None else LinearEquivalenceReportResponse.from_report(report.linear, labels),
        )


class RigidityReportResponse(BaseModel):
    """Second cohomology of the alpha^-1-adjoint representation."""
    rigid_sufficient: bool | None
    cohomology: CohomologyReportResponse
    warnings: list[str] = Field(default_factory=list)

    @classmethod
    def from_report(cls, report: RigidityReport) -> "RigidityReportResponse":
        return cls(
            rigid_sufficient=report.rigid_sufficient,
            cohomology=CohomologyReportResponse.from_report(report.cohomology),
            warnings=list(report.warnings),
        )


class RBFormalReportResponse(BaseModel):
    valid: bool
    first_failing_order: int | None
    twist: IdentityCheckDTO
    orders: list[IdentityCheckDTO]
    t1_derivation: bool | None = None
    induced_series: SeriesFile | None = None

    @classmethod
    def from_report(cls, report: RBFormalReport, module: Sequence[str]) -> "RBFormalReportResponse":
        return cls(
            valid=report.valid,
            first_failing_order=report.first_failing_order,
            twist=IdentityCheckDTO.from_check(report.twist, positions=(None, module)),
            orders=_orders(report.orders, module),
            t1_derivation=report.t1_derivation,
        )
