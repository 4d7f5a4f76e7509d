"""Reductions and the *core of the maximal ideal in Stanley-Reisner rings."""
from __future__ import annotations

__version__ = "0.1.0"

from ._kernels import backend, set_backend
from .complex import ComplexError, SimplicialComplex, complete_skeleton, connected_components, cycle, disjoint_union
from .core import CoreReport, core, core_bruteforce, core_monte_carlo, core_special, verify_bounds
from .field import FieldConfig, Matrix, in_span, rank, rref
from .io import ParseError, load_complex, parse_inline
from .monomials import Monomial, MonomialIdeal, minimal_primes, stanley_reisner_ideal, test_ideal
from .reductions import LinearIdeal, diagonalize, is_star_reduction, random_reduction
from .ring import StanleyReisnerRing

__all__ = [
    "ComplexError", "CoreReport", "FieldConfig", "LinearIdeal", "Matrix", "Monomial", "MonomialIdeal",
    "ParseError", "SimplicialComplex", "StanleyReisnerRing", "backend", "complete_skeleton",
    "connected_components", "core", "core_bruteforce", "core_monte_carlo", "core_special", "cycle",
    "diagonalize", "disjoint_union", "in_span", "is_star_reduction", "load_complex", "minimal_primes",
    "parse_inline", "random_reduction", "rank", "rref", "set_backend", "stanley_reisner_ideal",
    "test_ideal", "verify_bounds",
]
