"""Exact coefficient field, free algebras and linear algebra."""
