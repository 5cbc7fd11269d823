"""Combinatorics of gl(m|n): weights, Kazhdan-Lusztig polynomials, Kac modules and characters."""

from superalg.errors import (
    DimensionError,
    DominanceError,
    NotInSpanError,
    ParseError,
    ResourceCapError,
    SuperalgError,
)
from superalg.grothendieck import (
    Decomposition,
    G0Character,
    SupportCache,
    cache_load,
    cache_store,
    decompose,
    irr_g0_character,
    kac_g0_character,
    kac_support,
)
from superalg.invariants import (
    atypical_roots,
    atypicality_matrix,
    block_coordinates,
    degree_of_atypicality,
    height_to_atyp,
    height_vector,
    leq,
    typ_atyp_to_weight,
)
from superalg.kacfactors import interval, kac_composition_factors, kac_irr_mult
from superalg.kl import LaurentPolynomial, Permutation, gen_kl, mult_kac_in_irrd, s_set
from superalg.weights import Weight, new_weight, one, rho, rho_translate, zero

__all__ = [
    "Decomposition",
    "DimensionError",
    "DominanceError",
    "G0Character",
    "LaurentPolynomial",
    "NotInSpanError",
    "ParseError",
    "Permutation",
    "ResourceCapError",
    "SuperalgError",
    "SupportCache",
    "Weight",
    "atypical_roots",
    "atypicality_matrix",
    "block_coordinates",
    "cache_load",
    "cache_store",
    "decompose",
    "degree_of_atypicality",
    "gen_kl",
    "height_to_atyp",
    "height_vector",
    "interval",
    "irr_g0_character",
    "kac_composition_factors",
    "kac_g0_character",
    "kac_irr_mult",
    "kac_support",
    "leq",
    "mult_kac_in_irrd",
    "new_weight",
    "one",
    "rho",
    "rho_translate",
    "s_set",
    "typ_atyp_to_weight",
    "zero",
]
