"""DTOs for Rota-Baxter reports."""
from collections.abc import Sequence

from pydantic import BaseModel

from hjj.application.algebra.dtos import IdentityCheckDTO, MorphismReportResponse
from hjj.application.cohomology.dtos import CohomologyReportResponse
from hjj.domain.rotabaxter.entities import (
    GeneratorReport,
    NijenhuisReport,
    RBMorphismReport,
    RBReport,
)
from hjj.infrastructure.files.loaders import bilinear_to_sparse
from hjj.infrastructure.files.schemas import AlgebraFile, RepresentationFile


def module_labels(n: int) -> list[str]:
    return [f"v{i + 1}" for i in range(n)]


class RBReportResponse(BaseModel):
    valid: bool
    twist: IdentityCheckDTO
    product: IdentityCheckDTO

    @classmethod
    def from_report(cls, report: RBReport, module: Sequence[str]) -> "RBReportResponse":
        return cls(
            valid=report.valid,
            twist=IdentityCheckDTO.from_check(report.twist, module),
            product=IdentityCheckDTO.from_check(report.product, module),
        )


class RBResponse(BaseModel):
    """Verification plus induced structures of a Rota-Baxter operator."""
    report: RBReportResponse
    induced_algebra: AlgebraFile | None = None
    induced_algebra_valid: bool | None = None
    induced_representation: RepresentationFile | None = None
    induced_representation_valid: bool | None = None
    cohomology: CohomologyReportResponse | None = None


class GeneratorReportResponse(BaseModel):
    valid: bool
    derivation_verdict: bool
    twist: IdentityCheckDTO
    rota_baxter: IdentityCheckDTO
    mixed: IdentityCheckDTO

    @classmethod
    def from_report(cls, report: GeneratorReport, module: Sequence[str]) -> "GeneratorReportResponse":
        return cls(
            valid=report.valid,
            derivation_verdict=report.derivation_verdict,
            twist=IdentityCheckDTO.from_check(report.twist, module),
            rota_baxter=IdentityCheckDTO.from_check(report.rota_baxter, module),
            mixed=IdentityCheckDTO.from_check(report.mixed, module),
        )


class NijenhuisReportResponse(BaseModel):
    """Nijenhuis identity and the deformed product *_N."""
    valid: bool
    twist: IdentityCheckDTO
    nijenhuis: IdentityCheckDTO
    deformed_product: dict[str, dict[str, str]]

    @classmethod
    def from_report(cls, report: NijenhuisReport, labels: Sequence[str]) -> "NijenhuisReportResponse":
        return cls(
            valid=report.valid,
            twist=IdentityCheckDTO.from_check(report.twist, labels),
            nijenhuis=IdentityCheckDTO.from_check(report.nijenhuis, labels),
            deformed_product=bilinear_to_sparse(report.deformed_product, labels),
        )


class RBMorphismReportResponse(BaseModel):
    valid: bool
    algebra_morphism: MorphismReportResponse
    twist: IdentityCheckDTO
    intertwining: IdentityCheckDTO
    equivariance: IdentityCheckDTO
    inverse_pair: bool | None = None
    induced_morphism: MorphismReportResponse | None = None

    @classmethod
    def from_report(
        cls, report: RBMorphismReport, labels: Sequence[str], module: Sequence[str]
    ) -> "RBMorphismReportResponse":
        return cls(
            valid=report.valid,
            algebra_morphism=MorphismReportResponse.from_report(report.algebra_morphism, labels),
            twist=IdentityCheckDTO.from_check(report.twist, module),
            intertwining=IdentityCheckDTO.from_check(report.intertwining, module),
            equivariance=IdentityCheckDTO.from_check(report.equivariance, positions=(labels, module)),
            inverse_pair=report.inverse_pair,
            induced_morphism=(
                None
                if report.induced_morphism is None
                else MorphismReportResponse.from_report(report.induced_morphism, module)
            ),
        )
