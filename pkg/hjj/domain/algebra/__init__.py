"""Hom-algebra domain."""
from hjj.domain.algebra.entities import (
    AxiomReport,
    BilinearMap,
    ExtensionResult,
    HomAlgebra,
    IdentityCheck,
    MorphismReport,
    Witness,
)

__all__ = [
    "AxiomReport",
    "BilinearMap",
    "ExtensionResult",
    "HomAlgebra",
    "IdentityCheck",
    "MorphismReport",
    "Witness",
]
