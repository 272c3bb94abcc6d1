"""Extension application services."""
