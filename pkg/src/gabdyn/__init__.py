"""Exact Gabrielov numbers and Coxeter-Dynkin diagrams for cusp singularities
with a finite abelian group of diagonal SL(3,C) symmetries."""
from .cusp import CuspTriple, build_milnor_lattice, delta_invariant, milnor_number
from .symmetry import (
    GroupElement,
    SymmetryGroup,
    close_generators,
    cohomology_dims,
    compute_stats,
    enumerate_symmetry_groups,
    gabrielov_numbers,
)

__version__ = "0.1.0"

__all__ = [
    "CuspTriple",
    "GroupElement",
    "SymmetryGroup",
    "build_milnor_lattice",
    "close_generators",
    "cohomology_dims",
    "compute_stats",
    "delta_invariant",
    "enumerate_symmetry_groups",
    "gabrielov_numbers",
    "milnor_number",
]
