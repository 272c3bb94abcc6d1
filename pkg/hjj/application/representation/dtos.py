"""DTOs for representations."""
from pydantic import BaseModel

from hjj.application.algebra.dtos import AxiomReportResponse, IdentityCheckDTO
from hjj.domain.representation.entities import RepresentationReport


class RepresentationReportResponse(BaseModel):
    """Representation identity check result."""
    valid: bool
    twist: IdentityCheckDTO
    product: IdentityCheckDTO

    @classmethod
    def from_report(cls, report: RepresentationReport, labels: list[str]) -> "RepresentationReportResponse":
        return cls(
            valid=report.valid,
            twist=IdentityCheckDTO.from_check(report.twist, labels),
            product=IdentityCheckDTO.from_check(report.product, labels),
        )


class VerifyResponse(BaseModel):
    """Axioms of an algebra and, optionally, of one of its representations."""
    algebra: AxiomReportResponse
    representation: RepresentationReportResponse | None = None

    @property
    def valid(self) -> bool:
        return self.algebra.valid and (self.representation is None or self.representation.valid)
