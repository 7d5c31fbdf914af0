"""Quantum foldings, hat-PBW elements and the diagonal sl_3 family."""
