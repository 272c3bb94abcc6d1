"""Hom-algebra application services."""
