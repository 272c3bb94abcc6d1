"""Representation application services."""
