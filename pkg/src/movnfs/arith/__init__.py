"""Arbitrary-precision integer and polynomial arithmetic substrate."""

from .dickman import dickman_rho
from .factorint import (
    Factorization,
    factor,
    is_probable_prime,
    is_smooth,
    next_prime,
    primes_upto,
    trial_divide,
)
from .intpoly import (
    IntPoly,
    ModPoly,
    factor_degrees_mod,
    gcd_mod,
    is_irreducible_mod,
    is_irreducible_q,
    modpoly_is_irreducible,
    rational_reconstruction,
    resultant,
    roots_mod,
)
from .lll import IntLattice, gauss_reduce_2d, lll_reduce

__all__ = [
    "IntPoly",
    "ModPoly",
    "IntLattice",
    "Factorization",
    "resultant",
    "gcd_mod",
    "roots_mod",
    "factor_degrees_mod",
    "is_irreducible_mod",
    "is_irreducible_q",
    "modpoly_is_irreducible",
    "rational_reconstruction",
    "lll_reduce",
    "gauss_reduce_2d",
    "dickman_rho",
    "factor",
    "is_smooth",
    "is_probable_prime",
    "next_prime",
    "primes_upto",
    "trial_divide",
]
