"""Quantum logic workbench: L(C^d), its distributive-ideal completion and the
weak-Heyting algebra of ray sets, with exact Gaussian-rational arithmetic."""

from .exactlin import ComplexRational, Matrix, Vector, inner_product
from .rayset import Cell, Ray, RaySet, embed_r, implies, pseudo_neg
from .subspace import Subspace, join, meet, ortho, span

__version__ = "0.1.0"

__all__ = [
    "ComplexRational", "Matrix", "Vector", "inner_product",
    "Cell", "Ray", "RaySet", "embed_r", "implies", "pseudo_neg",
    "Subspace", "join", "meet", "ortho", "span",
]
