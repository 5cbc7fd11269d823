"""Rewrite a g₀-character as an integral combination of irreducible gl(m|n)-characters."""

from collections import Counter
from collections.abc import Mapping
from typing import TYPE_CHECKING

from loguru import logger

from superalg.definitions import DEFAULT_MAX_ITERATIONS
from superalg.errors import NotInSpanError
from superalg.grothendieck.characters import G0Character, WeightMultiplicities, irr_g0_character
from superalg.weights import Weight

if TYPE_CHECKING:
    from superalg.grothendieck.cache import SupportCache


class Decomposition(WeightMultiplicities):
    """ch M = Σ_λ n_λ ch L(λ), stored as λ ↦ n_λ."""

    def character(self, cache: "SupportCache | None" = None, threads: int = 1) -> G0Character:
        """Recombine the irreducible characters into a g₀-character."""
        total = G0Character()
        for lam, mult in self.items():
            total = total + irr_g0_character(lam, cache=cache, threads=threads) * mult
        return total


def decompose(
    module: Mapping[Weight, int],
    cache: "SupportCache | None" = None,
    max_iterations: int = DEFAULT_MAX_ITERATIONS,
    threads: int = 1,
) -> Decomposition:
    """Peel off irreducible characters from the top.

    Each step takes the largest remaining weight λ (by level, then coeff_L, then coeff_R), records
    its multiplicity n and subtracts n · ch L(λ). Every other constituent of ch L(λ) has a lower
    level, so the leading weight strictly decreases.

    Args:
        module: g₀-character as a map from dominant weights to integers
        cache: Optional support cache shared by the irreducible characters
        max_iterations: Number of peeling steps before giving up
        threads: Worker threads passed to `irr_g0_character`

    Returns:
        The decomposition λ ↦ n_λ

    Raises:
        DominanceError: If the module holds a non-dominant weight
        NotInSpanError: If the module is not a finite combination within max_iterations steps
    """
    remaining = module if isinstance(module, G0Character) else G0Character(module)
    result: Counter[Weight] = Counter()
    steps = 0
    while remaining:
        if steps >= max_iterations:
            raise NotInSpanError(max_iterations, len(remaining))
        lam = remaining.leading_weight()
        mult = remaining[lam]
        logger.debug(f"Step {steps + 1}: L({lam.to_canonical_string()}) with multiplicity {mult}")
        remaining = remaining - irr_g0_character(lam, cache=cache, threads=threads) * mult
        result[lam] += mult
        steps += 1
    logger.success(
        f"Decomposed module into {len(+result)} irreducible characters in {steps} steps"
    )
    return Decomposition(result)
