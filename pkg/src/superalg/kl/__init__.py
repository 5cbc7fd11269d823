"""Generalized Kazhdan-Lusztig polynomials."""

from superalg.kl.laurent import LaurentPolynomial
from superalg.kl.permutations import Permutation
from superalg.kl.polynomials import (
    atyp_dot_action,
    c_related,
    cr_map,
    distance,
    gen_kl,
    iter_s_set,
    mult_kac_in_irrd,
    respects_scr,
    s_set,
    scr_map,
    strongly_c_related,
)

__all__ = [
    "LaurentPolynomial",
    "Permutation",
    "atyp_dot_action",
    "c_related",
    "cr_map",
    "distance",
    "gen_kl",
    "iter_s_set",
    "mult_kac_in_irrd",
    "respects_scr",
    "s_set",
    "scr_map",
    "strongly_c_related",
]
