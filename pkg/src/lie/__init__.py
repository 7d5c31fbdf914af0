"""Cartan data, diagram automorphisms and Weyl groups."""
