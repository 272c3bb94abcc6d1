"""File schemas for algebras, representations, operators, series and forms."""
from pydantic import BaseModel, ConfigDict, Field, StrictInt, StrictStr, field_validator, model_validator

Scalar = StrictStr | StrictInt
MatrixRows = list[list[Scalar]]
# {"e1,e2": {"e3": "1"}}: the value of a bilinear map on a pair of basis labels
SparseBilinear = dict[str, dict[str, Scalar]]


class _FileModel(BaseModel):
    model_config = ConfigDict(extra="forbid")


# ==========================================
# Algebras
# ==========================================

class ProductEntry(_FileModel):
    left: str
    right: str
    value: dict[str, Scalar] = Field(default_factory=dict)


class AlgebraFile(_FileModel):
    """Structure constants and twist map; alpha rows use the column convention."""
    basis: list[str] = Field(..., min_length=1)
    alpha: MatrixRows
    products: list[ProductEntry] = Field(default_factory=list)

    @field_validator("basis")
    @classmethod
    def labels_unique(cls, v: list[str]) -> list[str]:
        if len(set(v)) != len(v):
            raise ValueError("basis labels must be unique")
        return v


# ==========================================
# Representations and linear maps
# ==========================================

class RepresentationFile(_FileModel):
    """Action matrices per basis label of the algebra; missing labels act by zero."""
    dim: int = Field(..., ge=1)
    phi: MatrixRows
    rho: dict[str, MatrixRows] = Field(default_factory=dict)


class OperatorFile(_FileModel):
    matrix: MatrixRows


class FormFile(_FileModel):
    """Gram matrix of a scalar bilinear form."""
    form: MatrixRows


# ==========================================
# Formal series
# ==========================================

class SeriesFile(_FileModel):
    """Coefficients of a truncated series: bilinear maps or matrices."""
    order: int = Field(..., ge=0)
    coeffs: list[SparseBilinear | MatrixRows]

    @model_validator(mode="after")
    def coefficient_count(self) -> "SeriesFile":
        if len(self.coeffs) != self.order + 1:
            raise ValueError(f"order {self.order} needs {self.order + 1} coefficients")
        return self
