"""Relative Rota-Baxter operators."""
from hjj.domain.rotabaxter.entities import (
    GeneratorReport,
    NijenhuisReport,
    RBMorphism,
    RBMorphismReport,
    RBOperator,
    RBReport,
)

__all__ = [
    "GeneratorReport",
    "NijenhuisReport",
    "RBMorphism",
    "RBMorphismReport",
    "RBOperator",
    "RBReport",
]
