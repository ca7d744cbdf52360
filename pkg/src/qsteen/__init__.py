"""Exact computation of quantum and symplectic Steenrod squares over Z/2."""

__version__ = "0.1.0"
