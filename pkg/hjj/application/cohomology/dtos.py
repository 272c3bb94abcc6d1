"""DTOs for cohomology reports."""
from pydantic import BaseModel, ConfigDict, Field, model_validator

from hjj.application.algebra.dtos import SubspaceDTO
from hjj.domain.cohomology.entities import CohomologyReport
from hjj.domain.linalg.entities import format_vector
from hjj.infrastructure.files.schemas import AlgebraFile, RepresentationFile


class CohomologyReportResponse(BaseModel):
    """Cocycles, coboundaries and cohomology representatives in one degree.

    Serialize with by_alias=True for the dimZ/dimB/dimH keys.
    """
    model_config = ConfigDict(populate_by_name=True)

    degree: int
    dim_c: int = Field(serialization_alias="dimC")
    dim_a: int = Field(serialization_alias="dimA")
    dim_z: int = Field(serialization_alias="dimZ")
    dim_b: int = Field(serialization_alias="dimB")
    dim_h: int | None = Field(serialization_alias="dimH")
    cocycles: SubspaceDTO
    coboundaries: SubspaceDTO
    representatives: list[list[str]] | None
    warnings: list[str] = Field(default_factory=list)

    @classmethod
    def from_report(cls, report: CohomologyReport) -> "CohomologyReportResponse":
        return cls(
            degree=report.degree,
            dim_c=report.dim_c,
            dim_a=report.dim_a_skew,
            dim_z=report.dim_z,
            dim_b=report.dim_b,
            dim_h=report.dim_h,
            cocycles=SubspaceDTO.from_subspace(report.z),
            coboundaries=SubspaceDTO.from_subspace(report.b),
            representatives=None if report.h is None else [format_vector(v) for v in report.h],
            warnings=list(report.warnings),
        )


class CohomologyRequest(BaseModel):
    """Algebra, degree and exactly one representation selector."""
    algebra: AlgebraFile
    degree: int = Field(..., ge=0)
    adjoint: int | None = None
    trivial: bool = False
    representation: RepresentationFile | None = None

    @model_validator(mode="after")
    def one_selector(self) -> "CohomologyRequest":
        chosen = [self.adjoint is not None, self.trivial, self.representation is not None]
        if sum(chosen) != 1:
            raise ValueError("give exactly one of adjoint, trivial or representation")
        return self
