"""Exact, constructive and partition solvers for monochromatic covers."""
