"""Integral weights of gl(m|n).

A weight is stored as the pair of integer tuples (L | R) = (λ⁰ | λ¹). The even part holds the
coefficients of ε_1..ε_m; the odd part holds λ¹, whose δ_j coefficients are -λ¹_j.
"""

import operator
from collections.abc import Iterable
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

from pydantic import BaseModel, ConfigDict, StrictInt, ValidationError

from superalg.errors import DimensionError, ParseError

if TYPE_CHECKING:
    from superalg.kl.permutations import Permutation


class WeightJson(BaseModel):
    """Interchange form `{"L": [...], "R": [...]}`."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    L: list[StrictInt]
    R: list[StrictInt]


def _as_int_tuple(values: Iterable[Any], part: str) -> tuple[int, ...]:
    try:
        return tuple(operator.index(v) for v in values)
    except TypeError as e:
        raise ParseError(f"Weight entries in {part} must be integers, got {values!r}") from e


@dataclass(frozen=True)
class Weight:
    """An integral weight (λ⁰ | λ¹) of gl(m|n).

    Attributes:
        L: Even part λ⁰, length m
        R: Odd part λ¹, length n
    """

    L: tuple[int, ...]
    R: tuple[int, ...]

    def __post_init__(self):
        """Normalize both parts to integer tuples and reject empty parts."""
        object.__setattr__(self, "L", _as_int_tuple(self.L, "L"))
        object.__setattr__(self, "R", _as_int_tuple(self.R, "R"))
        if not self.L or not self.R:
            raise DimensionError(None, (len(self.L), len(self.R)))

    @property
    def m(self) -> int:
        return len(self.L)

    @property
    def n(self) -> int:
        return len(self.R)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.m, self.n)

    # Indexing

    def entry(self, j: int) -> int:
        """Return λ_j for a 1-based global index j in 1..m+n."""
        if not 1 <= j <= self.m + self.n:
            raise IndexError(f"Global index {j} outside 1..{self.m + self.n}")
        return self.L[j - 1] if j <= self.m else self.R[j - self.m - 1]

    def entry_part(self, p: int, i: int) -> int:
        """Return λ^p_i for p in {0, 1} and a 1-based local index i."""
        if p not in (0, 1):
            raise IndexError(f"Part must be 0 or 1, got {p}")
        part = self.L if p == 0 else self.R
        if not 1 <= i <= len(part):
            raise IndexError(f"Index {i} outside 1..{len(part)} for part {p}")
        return part[i - 1]

    def __getitem__(self, key: int | tuple[int, int]) -> int:
        if isinstance(key, tuple):
            return self.entry_part(*key)
        return self.entry(key)

    # Arithmetic

    def _check_shape(self, other: "Weight"):
        if self.shape != other.shape:
            raise DimensionError(self.shape, other.shape)

    def __add__(self, other: "Weight") -> "Weight":
        if not isinstance(other, Weight):
            return NotImplemented
        self._check_shape(other)
        return Weight(
            tuple(a + b for a, b in zip(self.L, other.L)),
            tuple(a + b for a, b in zip(self.R, other.R)),
        )

    def __sub__(self, other: "Weight") -> "Weight":
        if not isinstance(other, Weight):
            return NotImplemented
        self._check_shape(other)
        return Weight(
            tuple(a - b for a, b in zip(self.L, other.L)),
            tuple(a - b for a, b in zip(self.R, other.R)),
        )

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.L), tuple(-a for a in self.R))

    # Block order

    def __le__(self, other: "Weight") -> bool:
        if not isinstance(other, Weight):
            return NotImplemented
        from superalg.invariants import leq

        return leq(self, other)

    def __ge__(self, other: "Weight") -> bool:
        if not isinstance(other, Weight):
            return NotImplemented
        from superalg.invariants import leq

        return leq(other, self)

    def __lt__(self, other: "Weight") -> bool:
        if not isinstance(other, Weight):
            return NotImplemented
        return self != other and self <= other

    def __gt__(self, other: "Weight") -> bool:
        if not isinstance(other, Weight):
            return NotImplemented
        return self != other and self >= other

    # Coefficients

    @property
    def coeff_L(self) -> tuple[int, ...]:
        """Coefficients of ε_1..ε_m."""
        return self.L

    @property
    def coeff_R(self) -> tuple[int, ...]:
        """Coefficients of δ_1..δ_n, i.e. the negated odd part."""
        return tuple(-b for b in self.R)

    @property
    def level(self) -> int:
        return sum(self.L)

    def is_dominant(self) -> bool:
        """Check that λ⁰ is weakly decreasing and λ¹ weakly increasing."""
        return all(a >= b for a, b in zip(self.L, self.L[1:])) and all(
            a <= b for a, b in zip(self.R, self.R[1:])
        )

    def rho(self) -> "Weight":
        """Return the ρ-translate λ + ρ."""
        return rho_translate(self)

    # Invariants exposed as properties

    @property
    def atypical_roots(self) -> list[tuple[int, int]]:
        from superalg.invariants import atypical_roots

        return [root.as_pair() for root in atypical_roots(self)]

    @property
    def adeg(self) -> int:
        from superalg.invariants import degree_of_atypicality

        return degree_of_atypicality(self)

    @property
    def atypicality_matrix(self) -> tuple[tuple[int, ...], ...]:
        from superalg.invariants import atypicality_matrix

        return atypicality_matrix(self)

    @property
    def typ(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        from superalg.invariants import block_coordinates

        return block_coordinates(self).typ

    @property
    def atyp(self) -> tuple[int, ...]:
        from superalg.invariants import block_coordinates

        return block_coordinates(self).atyp

    @property
    def height(self) -> tuple[int, ...]:
        from superalg.invariants import height_vector

        return height_vector(self)

    @property
    def cr(self) -> dict[int, tuple[int, ...]]:
        """c-related atypical roots as `{s: (t, ...)}` with s < t."""
        from superalg.kl.polynomials import cr_map, relation_dict

        return relation_dict(cr_map(self), self.adeg)

    @property
    def scr(self) -> dict[int, tuple[int, ...]]:
        """Strongly c-related atypical roots as `{s: (t, ...)}` with s < t."""
        from superalg.kl.polynomials import relation_dict, scr_map

        return relation_dict(scr_map(self), self.adeg)

    def atyp_dot_action(self, sigma: "Permutation") -> tuple[int, ...]:
        from superalg.kl.polynomials import atyp_dot_action

        return atyp_dot_action(self, sigma)

    def respects_scr(self, sigma: "Permutation") -> bool:
        from superalg.kl.polynomials import respects_scr

        return respects_scr(self, sigma)

    # Serialization

    def __str__(self) -> str:
        return f"gl({self.m}|{self.n}) weight {self.format_padded()}"

    def format_padded(self, width: int = 0) -> str:
        """Render `(a, b | c, d)` with every entry right-aligned to `width` characters."""
        left = ", ".join(str(a).rjust(width) for a in self.L)
        right = ", ".join(str(b).rjust(width) for b in self.R)
        return f"({left} | {right})"

    def to_latex(self) -> str:
        left = ", ".join(str(a) for a in self.L)
        right = ", ".join(str(b) for b in self.R)
        return rf"\left({left} \mid {right}\right)"

    def to_canonical_string(self) -> str:
        """Whitespace-free `a1,...,am|b1,...,bn`, used as the cache key."""
        return ",".join(map(str, self.L)) + "|" + ",".join(map(str, self.R))

    @classmethod
    def parse(cls, text: str) -> "Weight":
        """Parse the canonical string form, tolerating whitespace.

        Raises:
            ParseError: If the text is not `ints|ints`
        """
        compact = "".join(text.split())
        parts = compact.split("|")
        if len(parts) != 2:
            raise ParseError(f"Expected exactly one '|' in weight '{text}'")
        try:
            left, right = ([int(x) for x in part.split(",")] if part else [] for part in parts)
        except ValueError as e:
            raise ParseError(f"Invalid integer in weight '{text}'") from e
        return cls(left, right)

    def to_json(self) -> WeightJson:
        return WeightJson(L=list(self.L), R=list(self.R))

    @classmethod
    def from_json(cls, data: WeightJson | dict | str) -> "Weight":
        """Build a weight from its JSON form (model, mapping or JSON text).

        Raises:
            ParseError: If the document is malformed
        """
        if isinstance(data, WeightJson):
            return cls(data.L, data.R)
        try:
            if isinstance(data, str):
                model = WeightJson.model_validate_json(data)
            else:
                model = WeightJson.model_validate(data)
        except ValidationError as e:
            raise ParseError(f"Malformed weight JSON: {e}") from e
        return cls(model.L, model.R)

    def to_dict(self) -> dict[str, list[int]]:
        return self.to_json().model_dump()


def new_weight(L: Iterable[int], R: Iterable[int]) -> Weight:
    return Weight(tuple(L), tuple(R))


def rho(m: int, n: int) -> Weight:
    """The distinguished weight ρ = (m, ..., 1 | 1, ..., n)."""
    if m < 1 or n < 1:
        raise DimensionError(None, (m, n))
    return Weight(tuple(range(m, 0, -1)), tuple(range(1, n + 1)))


def one(m: int, n: int) -> Weight:
    if m < 1 or n < 1:
        raise DimensionError(None, (m, n))
    return Weight((1,) * m, (1,) * n)


def zero(m: int, n: int) -> Weight:
    if m < 1 or n < 1:
        raise DimensionError(None, (m, n))
    return Weight((0,) * m, (0,) * n)


def rho_translate(weight: Weight) -> Weight:
    return weight + rho(weight.m, weight.n)
