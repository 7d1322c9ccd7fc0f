"""Finite simplicial complexes, finite spaces and fixed point certification."""
__version__ = "0.1.0"
