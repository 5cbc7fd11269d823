"""Atypicality invariants of dominant weights and the block order.

Block coordinates (typ0, typ1, atyp) are read off the ρ-translate: atyp collects the values shared
by its even and odd parts, typ0 and typ1 keep the rest in their original order. A block is the set
of dominant weights with a fixed typical tuple, parametrized by strictly increasing atyp tuples.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from loguru import logger

from superalg.definitions import HEIGHT_SCAN_RADIUS_FACTOR
from superalg.errors import (
    DimensionError,
    DominanceError,
    InconsistentHeightError,
    InvalidBlockError,
)
from superalg.weights import Weight, rho, rho_translate


class AtypicalRoot(NamedTuple):
    """The s-th atypical root ε_i - δ_k of a weight.

    Attributes:
        s: 1-based order index
        i: Even position in 1..m
        j_global: Odd position as a global index m+k
        value: Common entry of the ρ-translate at positions i and j_global
    """

    s: int
    i: int
    j_global: int
    value: int

    def as_pair(self) -> tuple[int, int]:
        return (self.i, self.j_global)


@dataclass(frozen=True)
class BlockCoordinates:
    """Typical and atypical tuples of a dominant weight.

    Attributes:
        typ0: Unmatched even ρ-translate entries, strictly decreasing
        typ1: Unmatched odd ρ-translate entries, strictly increasing
        atyp: Matched values, strictly increasing
    """

    typ0: tuple[int, ...]
    typ1: tuple[int, ...]
    atyp: tuple[int, ...]

    @property
    def typ(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return (self.typ0, self.typ1)

    @property
    def r(self) -> int:
        return len(self.atyp)

    @property
    def m(self) -> int:
        return len(self.typ0) + self.r

    @property
    def n(self) -> int:
        return len(self.typ1) + self.r

    def to_dict(self) -> dict[str, list[int]]:
        return {"typ0": list(self.typ0), "typ1": list(self.typ1), "atyp": list(self.atyp)}


def _require_dominant(weight: Weight, operation: str):
    if not weight.is_dominant():
        raise DominanceError(weight, operation)


def _check_same_shape(x: Weight, y: Weight):
    if x.shape != y.shape:
        raise DimensionError(x.shape, y.shape)


def bilinear_form(x: Weight, y: Weight) -> int:
    """Evaluate (x, y) with (ε_i, ε_i) = 1 and (δ_j, δ_j) = -1."""
    _check_same_shape(x, y)
    even = sum(a * b for a, b in zip(x.coeff_L, y.coeff_L))
    odd = sum(a * b for a, b in zip(x.coeff_R, y.coeff_R))
    return even - odd


def odd_root(m: int, n: int, i: int, j_global: int) -> Weight:
    """Return the positive odd root ε_i - δ_k (k = j_global - m) as a weight."""
    k = j_global - m
    if not (1 <= i <= m and 1 <= k <= n):
        raise IndexError(f"({i}, {j_global}) is not a positive odd root of gl({m}|{n})")
    # δ_k carries coefficient -1, stored as +1 in the odd part
    return Weight(
        tuple(1 if a == i else 0 for a in range(1, m + 1)),
        tuple(1 if b == k else 0 for b in range(1, n + 1)),
    )


def positive_odd_roots(m: int, n: int) -> list[tuple[int, int]]:
    if m < 1 or n < 1:
        raise DimensionError(None, (m, n))
    return [(i, m + k) for i in range(1, m + 1) for k in range(1, n + 1)]


@lru_cache(maxsize=65536)
def atypical_roots(weight: Weight) -> tuple[AtypicalRoot, ...]:
    """Match equal entries of the two parts of the ρ-translate.

    Returns:
        Roots ordered by increasing value, so i decreases and j_global increases with s

    Raises:
        DominanceError: If the weight is not dominant
    """
    _require_dominant(weight, "atypical_roots")
    translate = rho_translate(weight)
    even_pos = {v: i for i, v in enumerate(translate.L, start=1)}
    odd_pos = {v: k for k, v in enumerate(translate.R, start=1)}
    common = sorted(even_pos.keys() & odd_pos.keys())
    return tuple(
        AtypicalRoot(s, even_pos[v], weight.m + odd_pos[v], v)
        for s, v in enumerate(common, start=1)
    )


def degree_of_atypicality(weight: Weight) -> int:
    return len(atypical_roots(weight))


def atypicality_matrix(weight: Weight) -> tuple[tuple[int, ...], ...]:
    """A_jk = (λ^ρ, ε_j - δ_k), defined for every integral weight."""
    translate = rho_translate(weight)
    return tuple(tuple(a - b for b in translate.R) for a in translate.L)


@lru_cache(maxsize=65536)
def block_coordinates(weight: Weight) -> BlockCoordinates:
    _require_dominant(weight, "block_coordinates")
    translate = rho_translate(weight)
    atyp = tuple(root.value for root in atypical_roots(weight))
    matched = set(atyp)
    return BlockCoordinates(
        typ0=tuple(v for v in translate.L if v not in matched),
        typ1=tuple(v for v in translate.R if v not in matched),
        atyp=atyp,
    )


@lru_cache(maxsize=65536)
def height_vector(weight: Weight) -> tuple[int, ...]:
    """h_s = λ_{m_s} - n_s + s with n_s the local odd index of the s-th atypical root."""
    _require_dominant(weight, "height_vector")
    return tuple(
        weight.L[root.i - 1] - (root.j_global - weight.m) + root.s
        for root in atypical_roots(weight)
    )


def height_sum(weight: Weight) -> int:
    return sum(height_vector(weight))


@lru_cache(maxsize=262144)
def leq(mu: Weight, lam: Weight) -> bool:
    """Block order: same typical tuple and atyp(mu) <= atyp(lam) componentwise."""
    _check_same_shape(mu, lam)
    lower = block_coordinates(mu)
    upper = block_coordinates(lam)
    if lower.typ != upper.typ or lower.r != upper.r:
        return False
    return all(b <= a for b, a in zip(lower.atyp, upper.atyp))


def _validate_block(typ0: Sequence[int], typ1: Sequence[int], atyp: Sequence[int]):
    for name, values in (("typ0", typ0), ("typ1", typ1), ("atyp", atyp)):
        if len(set(values)) != len(values):
            raise InvalidBlockError(f"Repeated value in {name}: {tuple(values)}")
    for name, values in (("typ0", typ0), ("typ1", typ1)):
        overlap = set(values) & set(atyp)
        if overlap:
            raise InvalidBlockError(f"atyp shares values {sorted(overlap)} with {name}")
    if set(typ0) & set(typ1):
        raise InvalidBlockError(
            f"typ0 and typ1 share values {sorted(set(typ0) & set(typ1))}; "
            "shared values belong to atyp"
        )


def typ_atyp_to_weight(
    typ: tuple[Sequence[int], Sequence[int]], atyp: Sequence[int]
) -> Weight:
    """Rebuild the dominant weight with the given block coordinates.

    Args:
        typ: Pair (typ0, typ1) of typical tuples
        atyp: Atypical tuple

    Returns:
        The weight whose ρ-translate merges typ0 ∪ atyp descending and typ1 ∪ atyp ascending

    Raises:
        InvalidBlockError: If values repeat within a side or atyp meets a typical tuple
    """
    typ0, typ1 = tuple(typ[0]), tuple(typ[1])
    atyp = tuple(atyp)
    _validate_block(typ0, typ1, atyp)
    even = sorted(typ0 + atyp, reverse=True)
    odd = sorted(typ1 + atyp)
    if not even or not odd:
        raise DimensionError(None, (len(even), len(odd)))
    shift = rho(len(even), len(odd))
    return Weight(
        tuple(v - p for v, p in zip(even, shift.L)),
        tuple(v - p for v, p in zip(odd, shift.R)),
    )


def _height_at(
    value: int, s: int, m: int, r: int, typ0: Sequence[int], typ1: Sequence[int]
) -> int:
    above = sum(1 for v in typ0 if v > value)
    below = sum(1 for v in typ1 if v < value)
    return value - m + r - s + above - below


def height_to_atyp(
    height: Sequence[int],
    typ: tuple[Sequence[int], Sequence[int]],
    radius: int | None = None,
) -> tuple[int, ...]:
    """Invert the height vector inside the block given by `typ`.

    Entries are placed for s = 1..r in increasing order. Each is found by scanning admissible
    values upward from just above the previous placement and evaluating the forward height
    formula until it matches.

    Args:
        height: Target height vector (h_1, ..., h_r)
        typ: Pair (typ0, typ1) of typical tuples
        radius: Number of values scanned per entry (default 4·(m+n))

    Returns:
        The strictly increasing atypical tuple realizing `height`

    Raises:
        InconsistentHeightError: If some entry has no match within the scan
    """
    typ0, typ1 = tuple(typ[0]), tuple(typ[1])
    height = tuple(height)
    r = len(height)
    m, n = len(typ0) + r, len(typ1) + r
    if m < 1 or n < 1:
        raise DimensionError(None, (m, n))
    if radius is None:
        radius = HEIGHT_SCAN_RADIUS_FACTOR * (m + n)
    blocked = set(typ0) | set(typ1)

    atyp: list[int] = []
    for s, target in enumerate(height, start=1):
        # every admissible match lies at or above this value
        start = target + m - r + s - len(typ0)
        if atyp:
            start = max(start, atyp[-1] + 1)
        for candidate in range(start, start + radius):
            if candidate in blocked:
                continue
            value = _height_at(candidate, s, m, r, typ0, typ1)
            if value == target:
                atyp.append(candidate)
                break
            if value > target:
                raise InconsistentHeightError(height, s)
        else:
            raise InconsistentHeightError(height, s)
    logger.debug(f"height {height} with typ {typ0}|{typ1} -> atyp {tuple(atyp)}")
    return tuple(atyp)
