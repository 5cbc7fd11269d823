"""Weight diagrams and cup diagrams on the integer line."""

from dataclasses import dataclass, field
from enum import StrEnum

from superalg.invariants import block_coordinates
from superalg.weights import Weight


class Symbol(StrEnum):
    EMPTY = "∅"
    DOT = "•"
    CROSS = "×"
    DOWN = "▼"
    UP = "▲"


@dataclass(frozen=True)
class WeightDiagram:
    """Symbol assignment D(λ): Z -> {∅, •, ×, ▼}.

    Attributes:
        symbols: Non-empty positions only; every other position is ∅
    """

    symbols: dict[int, Symbol] = field(default_factory=dict)

    def __getitem__(self, position: int) -> Symbol:
        return self.symbols.get(position, Symbol.EMPTY)

    def positions(self, symbol: Symbol) -> tuple[int, ...]:
        return tuple(sorted(p for p, s in self.symbols.items() if s is symbol))

    @property
    def window(self) -> tuple[int, int] | None:
        """Smallest interval covering every non-empty position."""
        if not self.symbols:
            return None
        return (min(self.symbols), max(self.symbols))

    def to_dict(self) -> dict:
        return {
            "window": list(self.window) if self.window else None,
            "symbols": {str(p): str(s) for p, s in sorted(self.symbols.items())},
            "arcs": [],
        }


@dataclass(frozen=True)
class CupDiagram:
    """Weight diagram decorated with non-crossing arcs joining each ▼ to a ▲.

    Attributes:
        base: Underlying weight diagram
        arcs: (left, right) endpoint pairs in the order the arcs close
    """

    base: WeightDiagram
    arcs: tuple[tuple[int, int], ...] = ()

    def __getitem__(self, position: int) -> Symbol:
        if position in self.right_ends:
            return Symbol.UP
        return self.base[position]

    @property
    def right_ends(self) -> frozenset[int]:
        return frozenset(right for _, right in self.arcs)

    @property
    def window(self) -> tuple[int, int] | None:
        bounds = self.base.window
        if bounds is None:
            return None
        lo, hi = bounds
        for left, right in self.arcs:
            lo, hi = min(lo, left), max(hi, right)
        return (lo, hi)

    def to_dict(self) -> dict:
        """`{"window": [a, b], "symbols": {"pos": "sym"}, "arcs": [[l, r], ...]}`, ▲ included."""
        symbols = dict(self.base.symbols)
        symbols.update({right: Symbol.UP for right in self.right_ends})
        return {
            "window": list(self.window) if self.window else None,
            "symbols": {str(p): str(s) for p, s in sorted(symbols.items())},
            "arcs": [list(arc) for arc in self.arcs],
        }


def weight_diagram(weight: Weight) -> WeightDiagram:
    """Place • at typ0, × at typ1 and ▼ at atyp.

    Raises:
        DominanceError: If the weight is not dominant
    """
    coords = block_coordinates(weight)
    symbols: dict[int, Symbol] = {}
    symbols.update({v: Symbol.DOT for v in coords.typ0})
    symbols.update({v: Symbol.CROSS for v in coords.typ1})
    symbols.update({v: Symbol.DOWN for v in coords.atyp})
    return WeightDiagram(symbols)


def cup_diagram(weight: Weight) -> CupDiagram:
    """Join every ▼ to the first free ∅ on its right, parenthesis style.

    Scanning left to right, ▼ opens an arc and ∅ closes the innermost open one; • and × are
    passed over. The scan runs past the last ▼ until every arc is closed.
    """
    base = weight_diagram(weight)
    downs = base.positions(Symbol.DOWN)
    if not downs:
        return CupDiagram(base)
    arcs: list[tuple[int, int]] = []
    stack: list[int] = []
    position = downs[0]
    while stack or position <= downs[-1]:
        symbol = base[position]
        if symbol is Symbol.DOWN:
            stack.append(position)
        elif symbol is Symbol.EMPTY and stack:
            arcs.append((stack.pop(), position))
        position += 1
    return CupDiagram(base, tuple(arcs))
