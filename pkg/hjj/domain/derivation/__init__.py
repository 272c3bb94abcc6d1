"""Derivations and antiderivations."""
from hjj.domain.derivation.entities import BracketReport, DerivationQuery, DerivationReport

__all__ = ["BracketReport", "DerivationQuery", "DerivationReport"]
