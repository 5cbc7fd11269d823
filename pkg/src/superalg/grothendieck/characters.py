"""g₀-characters of Kac modules and irreducible gl(m|n)-modules.

As a g₀ = gl(m) ⊕ gl(n) module, K(μ) = ⋀(V₀* ⊗ V₁) ⊗ L₀(μ), so

    c_{μ,α} = Σ_γ [L(μ_L) ⊗ S_γ(V₀)* : L(α_L)] · [L(μ_R) ⊗ S_γ'(V₁) : L(α_R)]

with μ_L = coeff_L(μ), μ_R = coeff_R(μ) and γ running over the m x n box. Irreducible characters
follow from ch L(λ) = Σ_μ K_{λ,μ}(-1) ch K(μ).
"""

from collections import Counter, defaultdict
from collections.abc import Iterable, Iterator, Mapping
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import prod
from typing import TYPE_CHECKING, Self

from loguru import logger
from pydantic import BaseModel, ConfigDict, StrictInt, TypeAdapter, ValidationError

from superalg.errors import DimensionError, DominanceError, ParseError
from superalg.grothendieck.littlewood_richardson import (
    cauchy_summands,
    dual_weight,
    lr_skew_expansion,
    tensor_expand,
)
from superalg.grothendieck.partitions import Partition
from superalg.invariants import leq
from superalg.kl.polynomials import mult_kac_in_irrd
from superalg.weights import Weight, WeightJson

if TYPE_CHECKING:
    from superalg.grothendieck.cache import SupportCache


class ModuleTermJson(BaseModel):
    """One `{"weight": {...}, "mult": int}` entry of a module or decomposition."""

    model_config = ConfigDict(extra="forbid")

    weight: WeightJson
    mult: StrictInt


MODULE_ADAPTER = TypeAdapter(list[ModuleTermJson])


def leading_key(weight: Weight) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
    """Order used to pick the largest weight: level, then coeff_L, then coeff_R."""
    return (weight.level, weight.coeff_L, weight.coeff_R)


class WeightMultiplicities(Mapping[Weight, int]):
    """Finite map from dominant weights of one shape to nonzero integers."""

    def __init__(self, mults: Mapping[Weight, int] | Iterable[tuple[Weight, int]] = ()):
        items = mults.items() if isinstance(mults, Mapping) else mults
        totals: dict[Weight, int] = defaultdict(int)
        shape: tuple[int, int] | None = None
        for weight, mult in items:
            if not weight.is_dominant():
                raise DominanceError(weight, type(self).__name__)
            if shape is None:
                shape = weight.shape
            elif weight.shape != shape:
                raise DimensionError(shape, weight.shape)
            totals[weight] += int(mult)
        self._mults = {w: c for w, c in totals.items() if c != 0}

    def __getitem__(self, weight: Weight) -> int:
        return self._mults[weight]

    def __iter__(self) -> Iterator[Weight]:
        return iter(self._mults)

    def __len__(self) -> int:
        return len(self._mults)

    def __repr__(self) -> str:
        body = ", ".join(f"{w.to_canonical_string()}: {c}" for w, c in self.sorted_items())
        return f"{type(self).__name__}({{{body}}})"

    @property
    def shape(self) -> tuple[int, int] | None:
        return next(iter(self._mults)).shape if self._mults else None

    def sorted_items(self) -> list[tuple[Weight, int]]:
        """Items from the largest weight down."""
        return sorted(self._mults.items(), key=lambda item: leading_key(item[0]), reverse=True)

    def leading_weight(self) -> Weight:
        if not self._mults:
            raise ValueError(f"Empty {type(self).__name__} has no leading weight")
        return max(self._mults, key=leading_key)

    def __add__(self, other: "WeightMultiplicities") -> Self:
        if not isinstance(other, WeightMultiplicities):
            return NotImplemented
        return type(self)([*self._mults.items(), *other.items()])

    def __neg__(self) -> Self:
        return type(self)({w: -c for w, c in self._mults.items()})

    def __sub__(self, other: "WeightMultiplicities") -> Self:
        if not isinstance(other, WeightMultiplicities):
            return NotImplemented
        return self + (-other)

    def __mul__(self, factor: int) -> Self:
        if not isinstance(factor, int):
            return NotImplemented
        return type(self)({w: c * factor for w, c in self._mults.items()})

    __rmul__ = __mul__

    def to_json(self) -> list[dict]:
        return [
            ModuleTermJson(weight=w.to_json(), mult=c).model_dump() for w, c in self.sorted_items()
        ]

    @classmethod
    def from_json(cls, data: str | list) -> Self:
        """Parse the JSON array form `[{"weight": {"L": [...], "R": [...]}, "mult": n}, ...]`.

        Raises:
            ParseError: If the document is malformed
        """
        try:
            if isinstance(data, str):
                terms = MODULE_ADAPTER.validate_json(data)
            else:
                terms = MODULE_ADAPTER.validate_python(data)
        except ValidationError as e:
            raise ParseError(f"Malformed module JSON: {e}") from e
        return cls([(Weight.from_json(term.weight), term.mult) for term in terms])


class G0Character(WeightMultiplicities):
    """ch M = Σ_α m_α ch L₀(α) for a g₀-module M."""

    def dimension(self) -> int:
        return sum(c * g0_dimension(w) for w, c in self.items())


def weyl_dimension(hw: Iterable[int]) -> int:
    """dim L(hw) for gl(k): Π_{i<j} (hw_i - hw_j + j - i) / (j - i)."""
    hw = tuple(hw)
    pairs = list(combinations(range(len(hw)), 2))
    value = Fraction(
        prod(hw[i] - hw[j] + j - i for i, j in pairs), prod(j - i for i, j in pairs)
    )
    return int(value)


def g0_dimension(weight: Weight) -> int:
    return weyl_dimension(weight.coeff_L) * weyl_dimension(weight.coeff_R)


def _require_dominant(weight: Weight, operation: str):
    if not weight.is_dominant():
        raise DominanceError(weight, operation)


def _from_coefficients(coeff_L: tuple[int, ...], coeff_R: tuple[int, ...]) -> Weight:
    return Weight(coeff_L, tuple(-x for x in coeff_R))


@lru_cache(maxsize=1024)
def kac_g0_character(mu: Weight) -> G0Character:
    """ch K(μ) as a g₀-character, one Cauchy summand at a time.

    Raises:
        DominanceError: If mu is not dominant
    """
    _require_dominant(mu, "kac_g0_character")
    totals: Counter[Weight] = Counter()
    for gamma, gamma_t in cauchy_summands(mu.m, mu.n):
        left = tensor_expand(mu.coeff_L, gamma, dual=True)
        right = tensor_expand(mu.coeff_R, gamma_t, dual=False)
        for alpha_L, c_L in left.items():
            for alpha_R, c_R in right.items():
                totals[_from_coefficients(alpha_L, alpha_R)] += c_L * c_R
    logger.debug(f"K({mu.to_canonical_string()}) has {len(totals)} g0-constituents")
    return G0Character(totals)


def within_bound(mu: Weight, bound: Weight) -> bool:
    """μ_L <= λ_L and coeff_R(μ) >= coeff_R(λ); every μ ⪯ λ satisfies this."""
    return all(a <= b for a, b in zip(mu.coeff_L, bound.coeff_L)) and all(
        a >= b for a, b in zip(mu.coeff_R, bound.coeff_R)
    )


def kac_support(alpha: Weight, bound: Weight | None = None) -> G0Character:
    """μ ↦ c_{μ,α} for all μ with L₀(α) inside K(μ).

    By adjunction μ_L runs over L(α_L) ⊗ S_γ and μ_R over L(α_R) ⊗ S_γ'*. Both sides are
    expanded for every content at once and joined on γ' = conjugate(γ).

    Args:
        alpha: Dominant g₀-highest weight
        bound: If given, only μ within `bound` (see `within_bound`) are produced

    Raises:
        DominanceError: If alpha is not dominant
    """
    _require_dominant(alpha, "kac_support")
    if bound is not None and bound.shape != alpha.shape:
        raise DimensionError(alpha.shape, bound.shape)
    m, n = alpha.shape

    left_base = alpha.coeff_L[-1]
    left_ceiling = None
    if bound is not None:
        left_ceiling = tuple(b - left_base for b in bound.coeff_L)
    left = lr_skew_expansion(
        tuple(a - left_base for a in alpha.coeff_L), m, n, ceiling=left_ceiling
    )

    right_start = dual_weight(alpha.coeff_R)
    right_base = right_start[-1]
    right_ceiling = None
    if bound is not None:
        right_ceiling = tuple(b - right_base for b in dual_weight(bound.coeff_R))
    right = lr_skew_expansion(
        tuple(a - right_base for a in right_start), n, m, ceiling=right_ceiling
    )
    by_content: dict[Partition, list[tuple[tuple[int, ...], int]]] = defaultdict(list)
    for (outer, content), count in right.items():
        by_content[content].append((outer, count))

    totals: Counter[Weight] = Counter()
    for (outer_L, gamma), c_L in left.items():
        mu_L = tuple(x + left_base for x in outer_L)
        for outer_R, c_R in by_content.get(gamma.conjugate(), ()):
            mu_R = dual_weight(tuple(x + right_base for x in outer_R))
            totals[_from_coefficients(mu_L, mu_R)] += c_L * c_R
    return G0Character(totals)


def cached_kac_support(
    alpha: Weight, bound: Weight | None, cache: "SupportCache | None" = None
) -> G0Character:
    if cache is not None:
        hit = cache.get(alpha, bound)
        if hit is not None:
            return hit
    support = kac_support(alpha, bound=bound)
    if cache is not None:
        cache.put(alpha, bound, support)
    return support


def irr_g0_character(
    lam: Weight, cache: "SupportCache | None" = None, threads: int = 1
) -> G0Character:
    """ch L(λ) as a g₀-character.

    L(λ) is a quotient of K(λ), so only β in the g₀-support of K(λ) can occur. For each such β
    the multiplicity is the finite sum Σ_{μ ⪯ λ} K_{λ,μ}(-1) c_{μ,β}.

    Args:
        lam: Dominant highest weight
        cache: Optional support cache shared across calls
        threads: Number of worker threads for the β loop

    Raises:
        DominanceError: If lam is not dominant
    """
    _require_dominant(lam, "irr_g0_character")
    candidates = list(kac_g0_character(lam))
    logger.info(f"Computing ch L({lam.to_canonical_string()}) over {len(candidates)} weights")

    def multiplicity(beta: Weight) -> int:
        support = cached_kac_support(beta, lam, cache)
        return sum(
            mult_kac_in_irrd(lam, mu) * c for mu, c in support.items() if leq(mu, lam)
        )

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            values = list(pool.map(multiplicity, candidates))
    else:
        values = [multiplicity(beta) for beta in candidates]
    return G0Character(zip(candidates, values))
