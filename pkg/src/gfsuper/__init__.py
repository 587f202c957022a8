"""Exact Lie superalgebra cohomology, with formal vector fields in even and odd variables."""

__version__ = "0.1.0"
