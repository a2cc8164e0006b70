"""Exact computations for Coxeter tetrahedra, their (twisted) Coxeter groups,
and minimal handlebody orbifolds."""

__version__ = "0.1.0"
