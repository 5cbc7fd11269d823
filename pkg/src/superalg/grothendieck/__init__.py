"""g₀-characters, Kac supports and decomposition in the Grothendieck group."""

from superalg.grothendieck.cache import SupportCache, cache_load, cache_store
from superalg.grothendieck.characters import (
    G0Character,
    g0_dimension,
    irr_g0_character,
    kac_g0_character,
    kac_support,
    weyl_dimension,
)
from superalg.grothendieck.decompose import Decomposition, decompose
from superalg.grothendieck.littlewood_richardson import (
    lr_coefficient,
    lr_expand,
    tensor_expand,
)
from superalg.grothendieck.partitions import Partition, partitions_in_box

__all__ = [
    "Decomposition",
    "G0Character",
    "Partition",
    "SupportCache",
    "cache_load",
    "cache_store",
    "decompose",
    "g0_dimension",
    "irr_g0_character",
    "kac_g0_character",
    "kac_support",
    "lr_coefficient",
    "lr_expand",
    "partitions_in_box",
    "tensor_expand",
    "weyl_dimension",
]
