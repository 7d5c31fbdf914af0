"""Quantized enveloping algebras: triangular arithmetic, braid action, zero tests, PBW data."""
