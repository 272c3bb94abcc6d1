"""Derivation application services."""
