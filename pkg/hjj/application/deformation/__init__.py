"""Deformation application services."""
