"""Generalized Kazhdan-Lusztig polynomials of gl(m|n) and their combinatorial ingredients.

For dominant μ ⪯ λ,

    K_{λ,μ}(q) = q^{|h(λ)| - |h(μ)|} Σ_{σ ∈ S^{λ,μ}} q^{-2 l(σ)},

where S^{λ,μ} holds the permutations σ of the atypical roots of λ whose dot action keeps
atyp(μ) below it componentwise and which keep every strongly c-related pair in order.
"""

from collections.abc import Iterator
from functools import lru_cache

from superalg.definitions import MAX_PERMUTATION_RANK
from superalg.errors import (
    AtypicalIndexError,
    DimensionError,
    InvalidPermutationError,
    ResourceCapError,
)
from superalg.invariants import block_coordinates, height_sum, leq
from superalg.kl.laurent import ZERO, LaurentPolynomial
from superalg.kl.permutations import Permutation
from superalg.weights import Weight


def _check_pair(weight: Weight, s: int, t: int):
    r = block_coordinates(weight).r
    if not 1 <= s < t <= r:
        raise AtypicalIndexError(s, t, r)


def _check_rank(weight: Weight, sigma: Permutation):
    r = block_coordinates(weight).r
    if len(sigma) != r:
        raise InvalidPermutationError(
            f"Permutation of rank {len(sigma)} given for a {r}-fold atypical weight"
        )


def distance(weight: Weight, s: int, t: int) -> int:
    """Number of ∅ positions of the weight diagram in the closed interval [a_s, a_t]."""
    _check_pair(weight, s, t)
    coords = block_coordinates(weight)
    occupied = set(coords.typ0) | set(coords.typ1) | set(coords.atyp)
    low, high = coords.atyp[s - 1], coords.atyp[t - 1]
    return sum(1 for position in range(low, high + 1) if position not in occupied)


def c_related(weight: Weight, s: int, t: int) -> bool:
    return distance(weight, s, t) < t - s


def strongly_c_related(weight: Weight, s: int, t: int) -> bool:
    """γ_s is c-related to every γ_u with s < u <= t.

    Equivalently a_t lies under the cup starting at a_s. For t = s + 1 this is c-relatedness.
    """
    _check_pair(weight, s, t)
    return all(c_related(weight, s, u) for u in range(s + 1, t + 1))


@lru_cache(maxsize=65536)
def cr_map(weight: Weight) -> frozenset[tuple[int, int]]:
    r = block_coordinates(weight).r
    return frozenset(
        (s, t) for s in range(1, r + 1) for t in range(s + 1, r + 1) if c_related(weight, s, t)
    )


@lru_cache(maxsize=65536)
def scr_map(weight: Weight) -> frozenset[tuple[int, int]]:
    """All strongly c-related pairs (s, t), s < t."""
    r = block_coordinates(weight).r
    pairs = set()
    for s in range(1, r + 1):
        t = s + 1
        while t <= r and c_related(weight, s, t):
            pairs.add((s, t))
            t += 1
    return frozenset(pairs)


def relation_dict(pairs: frozenset[tuple[int, int]], r: int) -> dict[int, tuple[int, ...]]:
    return {s: tuple(sorted(t for a, t in pairs if a == s)) for s in range(1, r + 1)}


def atyp_dot_action(weight: Weight, sigma: Permutation) -> tuple[int, ...]:
    """Atypical tuple of σ•λ: A^σ_s = a_{σ⁻¹(s)}."""
    _check_rank(weight, sigma)
    return sigma.permute(block_coordinates(weight).atyp)


def respects_scr(weight: Weight, sigma: Permutation) -> bool:
    _check_rank(weight, sigma)
    return all(sigma(s) < sigma(t) for s, t in scr_map(weight))


def iter_s_set(lam: Weight, mu: Weight) -> Iterator[Permutation]:
    """Lazily enumerate S^{λ,μ} in lexicographic order of images.

    σ(s) is chosen for s = 1..r in turn; a choice p survives only if atyp(μ)_p <= atyp(λ)_s and
    every strongly c-related predecessor of s already sits below p.

    Raises:
        ResourceCapError: If the degree of atypicality exceeds MAX_PERMUTATION_RANK
    """
    if lam.shape != mu.shape:
        raise DimensionError(lam.shape, mu.shape)
    if not leq(mu, lam):
        return
    upper = block_coordinates(lam).atyp
    lower = block_coordinates(mu).atyp
    r = len(upper)
    if r > MAX_PERMUTATION_RANK:
        raise ResourceCapError(
            f"Degree of atypicality {r} exceeds the permutation rank cap {MAX_PERMUTATION_RANK}"
        )
    predecessors: dict[int, list[int]] = {t: [] for t in range(1, r + 1)}
    for s, t in scr_map(lam):
        predecessors[t].append(s)

    images = [0] * r
    used = [False] * (r + 1)

    def place(s: int) -> Iterator[Permutation]:
        if s > r:
            yield Permutation(tuple(images))
            return
        for p in range(1, r + 1):
            if used[p] or lower[p - 1] > upper[s - 1]:
                continue
            if any(images[q - 1] >= p for q in predecessors[s]):
                continue
            images[s - 1] = p
            used[p] = True
            yield from place(s + 1)
            used[p] = False

    yield from place(1)


def s_set(lam: Weight, mu: Weight) -> tuple[Permutation, ...]:
    return tuple(iter_s_set(lam, mu))


@lru_cache(maxsize=262144)
def gen_kl(lam: Weight, mu: Weight) -> LaurentPolynomial:
    """K_{λ,μ}(q); the zero polynomial unless μ ⪯ λ.

    Raises:
        DominanceError: If either weight is not dominant
    """
    if not leq(mu, lam):
        return ZERO
    shift = height_sum(lam) - height_sum(mu)
    return LaurentPolynomial(tuple((shift - 2 * sigma.length, 1) for sigma in iter_s_set(lam, mu)))


def mult_kac_in_irrd(lam: Weight, mu: Weight) -> int:
    """b_{λμ} = K_{λ,μ}(-1), the coefficient of ch K(μ) in ch L(λ)."""
    return gen_kl(lam, mu)(-1)
