"""Linear and formal deformations."""
from hjj.domain.deformation.entities import (
    EquivalenceReport,
    FormalDeformationReport,
    FormalMapSeries,
    FormalProductSeries,
    LinearDeformationReport,
    LinearEquivalenceReport,
    RBFormalReport,
    RigidityReport,
)

__all__ = [
    "EquivalenceReport",
    "FormalDeformationReport",
    "FormalMapSeries",
    "FormalProductSeries",
    "LinearDeformationReport",
    "LinearEquivalenceReport",
    "RBFormalReport",
    "RigidityReport",
]
