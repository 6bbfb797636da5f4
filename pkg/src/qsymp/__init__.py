"""Exact engine for a level -1/2 free-field realization of the quantum
affine symplectic algebra, its screening operators and q-vertex
operators, verified mechanically on graded truncations of the Fock
space."""

__version__ = "0.1.0"
