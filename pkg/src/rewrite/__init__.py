"""Presentations, normal forms, confluence sweeps and sub-PBW analysis."""
