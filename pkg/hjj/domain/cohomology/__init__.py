"""Zigzag cochain complexes."""
from hjj.domain.cohomology.entities import Cochain, CochainOperator, CohomologyReport

__all__ = ["Cochain", "CochainOperator", "CohomologyReport"]
