"""Cohomology application services."""
