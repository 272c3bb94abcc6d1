"""Exact computations for finite-dimensional Hom-Jacobi-Jordan algebras."""

__version__ = "0.1.0"
