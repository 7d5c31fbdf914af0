"""Semiclassical limits: specialization at q = 1, Poisson brackets, Jacobi and ideal checks."""
