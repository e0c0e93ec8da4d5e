"""Exact symbolic kernel: polynomials, multivector fields, Schouten bracket."""

from .poly import DimensionError, Poly, Rat, coordinates, monomials
from .parse import HBAR, PolySyntaxError, parse_poly
from .multivector import (Multivector, embed, hamiltonian_vf, lie_derivative, poisson_bracket,
                          schouten, sort_sign, wedge)
from .odd import OddModel, odd_schouten, odd_wedge

__all__ = [
    "DimensionError", "HBAR", "embed", "Multivector", "OddModel", "Poly", "PolySyntaxError", "Rat",
    "coordinates", "hamiltonian_vf", "lie_derivative", "monomials", "odd_schouten",
    "odd_wedge", "parse_poly", "poisson_bracket", "schouten", "sort_sign", "wedge",
]
