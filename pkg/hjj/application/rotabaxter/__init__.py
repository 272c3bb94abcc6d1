"""Rota-Baxter application services."""
