"""Representations of Hom-Jacobi-Jordan algebras."""
from hjj.domain.representation.entities import Representation, RepresentationReport

__all__ = ["Representation", "RepresentationReport"]
