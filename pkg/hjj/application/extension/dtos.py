"""DTOs for one-dimensional extensions."""
from pydantic import BaseModel, Field

from hjj.domain.algebra.entities import ExtensionResult
from hjj.domain.linalg.entities import Matrix, format_matrix
from hjj.infrastructure.files.loaders import algebra_to_document
from hjj.infrastructure.files.schemas import AlgebraFile


class ExtensionResponse(BaseModel):
    valid: bool
    reasons: list[str] = Field(default_factory=list)
    algebra: AlgebraFile

    @classmethod
    def from_result(cls, result: ExtensionResult) -> "ExtensionResponse":
        return cls(
            valid=result.valid,
            reasons=list(result.reasons),
            algebra=algebra_to_document(result.algebra),
        )


class IsomorphismResponse(BaseModel):
    """Isomorphism between two central extensions, if the forms are cohomologous."""
    exists: bool
    matrix: list[list[str]] | None = None

    @classmethod
    def from_matrix(cls, m: Matrix | None) -> "IsomorphismResponse":
        return cls(exists=m is not None, matrix=None if m is None else format_matrix(m))
