"""Composition factors of Kac modules.

The multiplicities a_{λμ} = [K(λ) : L(μ)] are the inverse of the unitriangular matrix
b_{λμ} = K_{λ,μ}(-1) on the block order:

    a_{λμ} = δ_{λμ} - Σ_{μ ≺ ν ⪯ λ} a_{λν} b_{νμ}.

Everything below λ in its block is indexed by strictly increasing atyp tuples, so the recursion
runs over integer tuples processed in decreasing order of their sum.
"""

from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from loguru import logger

from superalg.definitions import MAX_FACTOR_SLACK
from superalg.errors import (
    DimensionError,
    IncomparableWeightsError,
    MultiplicityError,
    ResourceCapError,
)
from superalg.invariants import block_coordinates, leq, typ_atyp_to_weight
from superalg.kl.polynomials import mult_kac_in_irrd
from superalg.weights import Weight


@dataclass(frozen=True)
class BlockInterval:
    """All ν with mu ⪯ ν ⪯ lam, by decreasing atyp sum then decreasing ρ-translate.

    Attributes:
        lam: Top of the interval
        mu: Bottom of the interval
        members: Weights of the interval, lam first
    """

    lam: Weight
    mu: Weight
    members: tuple[Weight, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Weight]:
        return iter(self.members)

    def __contains__(self, weight: object) -> bool:
        return weight in self.members


def _increasing_tuples(
    lower: Sequence[int], upper: Sequence[int], blocked: set[int]
) -> Iterator[tuple[int, ...]]:
    """Strictly increasing tuples c with lower[s] <= c[s] <= upper[s], avoiding `blocked`."""
    r = len(upper)
    prefix: list[int] = []

    def extend() -> Iterator[tuple[int, ...]]:
        s = len(prefix)
        if s == r:
            yield tuple(prefix)
            return
        start = lower[s] if not prefix else max(lower[s], prefix[-1] + 1)
        for value in range(start, upper[s] + 1):
            if value in blocked:
                continue
            prefix.append(value)
            yield from extend()
            prefix.pop()

    yield from extend()


def _top_down(tuples: Iterator[tuple[int, ...]]) -> list[tuple[int, ...]]:
    # any ν ≻ c has a strictly larger sum, so this is a linear extension of the order
    return sorted(tuples, key=lambda c: (-sum(c), tuple(-x for x in reversed(c))))


def _listing_order(weight: Weight) -> tuple[tuple[int, ...], tuple[int, ...]]:
    translate = weight.rho()
    return (translate.L, translate.R)


class _FactorSolver:
    """Runs the a-recursion for a fixed λ, remembering the nonzero values only."""

    def __init__(self, lam: Weight):
        self.lam = lam
        self.coords = block_coordinates(lam)
        self.nonzero: dict[tuple[int, ...], tuple[Weight, int]] = {}

    def weight(self, atyp: tuple[int, ...]) -> Weight:
        return typ_atyp_to_weight(self.coords.typ, atyp)

    def solve(self, atyp: tuple[int, ...]) -> int:
        """Compute a_{λν} for ν with the given atyp tuple.

        Every tuple above `atyp` inside the search region must have been solved already.
        """
        if atyp in self.nonzero:
            return self.nonzero[atyp][1]
        nu = self.lam if atyp == self.coords.atyp else None
        if nu is not None:
            value = 1
        else:
            total = 0
            for top, (top_weight, a) in self.nonzero.items():
                if top != atyp and all(x <= y for x, y in zip(atyp, top)):
                    if nu is None:
                        nu = self.weight(atyp)
                    total += a * mult_kac_in_irrd(top_weight, nu)
            value = -total
        if value:
            self.nonzero[atyp] = (nu if nu is not None else self.weight(atyp), value)
        return value


def interval(mu: Weight, lam: Weight) -> BlockInterval:
    """Materialize the block interval [mu, lam].

    Members run by decreasing atyp sum, ties broken by decreasing ρ-translate, so lam comes
    first and mu last.

    Raises:
        IncomparableWeightsError: If mu is not below lam
    """
    if not leq(mu, lam):
        raise IncomparableWeightsError(mu, lam)
    top = block_coordinates(lam)
    bottom = block_coordinates(mu)
    blocked = set(top.typ0) | set(top.typ1)
    members = [
        typ_atyp_to_weight(top.typ, c)
        for c in _increasing_tuples(bottom.atyp, top.atyp, blocked)
    ]
    members.sort(
        key=lambda nu: (sum(block_coordinates(nu).atyp), _listing_order(nu)), reverse=True
    )
    return BlockInterval(lam=lam, mu=mu, members=tuple(members))


def kac_irr_mult(lam: Weight, mu: Weight) -> int:
    """a_{λμ} = [K(λ) : L(μ)], zero unless μ ⪯ λ.

    Raises:
        DominanceError: If either weight is not dominant
    """
    if lam.shape != mu.shape:
        raise DimensionError(lam.shape, mu.shape)
    if not leq(mu, lam):
        return 0
    top = block_coordinates(lam)
    bottom = block_coordinates(mu)
    blocked = set(top.typ0) | set(top.typ1)
    solver = _FactorSolver(lam)
    value = 0
    for c in _top_down(_increasing_tuples(bottom.atyp, top.atyp, blocked)):
        value = solver.solve(c)
    # the last tuple processed is atyp(mu), the unique minimum of the interval
    return value


def kac_composition_factors(
    lam: Weight, slack: int | None = None, max_widening: int = MAX_FACTOR_SLACK
) -> tuple[Weight, ...]:
    """All composition factors L(μ) of K(λ), each listed once.

    Candidates are the atyp tuples below atyp(λ) with entries at least atyp(λ)_1 - r - slack.
    The window then widens downward by r per round until a round adds no factor.

    Args:
        lam: Dominant highest weight
        slack: Extra room below atyp(λ)_1 - r for the first round (default r)
        max_widening: Largest total widening before giving up

    Returns:
        Factors ordered by decreasing ρ-translate, λ first

    Raises:
        DominanceError: If lam is not dominant
        MultiplicityError: If some multiplicity is not 0 or 1
        ResourceCapError: If widening exceeds max_widening
    """
    coords = block_coordinates(lam)
    r = coords.r
    if r == 0:
        return (lam,)
    if slack is None:
        slack = r
    if slack < 0:
        raise ValueError(f"slack must be non-negative, got {slack}")

    solver = _FactorSolver(lam)
    blocked = set(coords.typ0) | set(coords.typ1)
    initial_floor = coords.atyp[0] - r - slack
    floor = initial_floor
    previous_floor: int | None = None
    factors: list[Weight] = []

    while True:
        upper = list(coords.atyp)
        if previous_floor is not None:
            upper[0] = min(upper[0], previous_floor - 1)
        candidates = _top_down(_increasing_tuples([floor] * r, upper, blocked))
        added = 0
        for c in candidates:
            value = solver.solve(c)
            if value not in (0, 1):
                raise MultiplicityError(lam, solver.weight(c), value)
            if value:
                factors.append(solver.nonzero[c][0])
                added += 1
        logger.debug(
            f"Factor window from {floor}: {len(candidates)} candidates, {added} new factors"
        )
        if previous_floor is not None and added == 0:
            break
        previous_floor = floor
        floor -= r
        if initial_floor - floor > max_widening:
            raise ResourceCapError(
                f"Composition factor search for {lam} widened beyond {max_widening} "
                "without stabilizing"
            )

    logger.info(f"K({lam.to_canonical_string()}) has {len(factors)} composition factors")
    return tuple(sorted(factors, key=_listing_order, reverse=True))
