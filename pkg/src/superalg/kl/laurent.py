"""Exact Laurent polynomials in q with integer coefficients."""

from collections import defaultdict
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import sympy
from pydantic import BaseModel, ConfigDict, StrictInt, ValidationError

from superalg.errors import ParseError


class LaurentPolynomialJson(BaseModel):
    """Interchange form `{"coeffs": {"3": 1, "5": 1}}` keyed by exponent."""

    model_config = ConfigDict(extra="forbid")

    coeffs: dict[str, StrictInt]


def _normalize(pairs: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    totals: dict[int, int] = defaultdict(int)
    for exponent, coefficient in pairs:
        totals[int(exponent)] += int(coefficient)
    return tuple(sorted((e, c) for e, c in totals.items() if c != 0))


@dataclass(frozen=True)
class LaurentPolynomial:
    """Σ c_e q^e with finitely many nonzero integer coefficients.

    Attributes:
        terms: (exponent, coefficient) pairs, ascending exponents, no zero coefficients
    """

    terms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "terms", _normalize(self.terms))

    @classmethod
    def from_coeffs(cls, coeffs: Mapping[int, int]) -> "LaurentPolynomial":
        return cls(tuple(coeffs.items()))

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPolynomial":
        return cls(((exponent, coefficient),))

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def min_exponent(self) -> int | None:
        return self.terms[0][0] if self.terms else None

    @property
    def max_exponent(self) -> int | None:
        return self.terms[-1][0] if self.terms else None

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return LaurentPolynomial(self.terms + other.terms)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        if isinstance(other, int):
            return LaurentPolynomial(tuple((e, c * other) for e, c in self.terms))
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return LaurentPolynomial(
            tuple((e1 + e2, c1 * c2) for e1, c1 in self.terms for e2, c2 in other.terms)
        )

    __rmul__ = __mul__

    def __call__(self, q: Any) -> Any:
        """Evaluate at q.

        Integers and Fractions are evaluated exactly, returning an int when the value is
        integral; any other object (for example a sympy Symbol) is combined with `**`, `*`, `+`.
        """
        if isinstance(q, (int, Fraction)):
            if q == 0 and self.terms and self.terms[0][0] < 0:
                raise ZeroDivisionError("Laurent polynomial with negative exponents at q = 0")
            value = sum((c * Fraction(q) ** e for e, c in self.terms), Fraction(0))
            return int(value) if value.denominator == 1 else value
        return sum((c * q**e for e, c in self.terms), 0)

    def to_sympy(self, symbol: str | sympy.Symbol = "q") -> sympy.Expr:
        q = sympy.Symbol(symbol) if isinstance(symbol, str) else symbol
        return sympy.Add(*(sympy.Integer(c) * q ** sympy.Integer(e) for e, c in self.terms))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for index, (exponent, coefficient) in enumerate(self.terms):
            if exponent == 0:
                monomial = str(abs(coefficient))
            else:
                power = "q" if exponent == 1 else f"q^{exponent}"
                monomial = power if abs(coefficient) == 1 else f"{abs(coefficient)}*{power}"
            if index == 0:
                pieces.append(f"-{monomial}" if coefficient < 0 else monomial)
            else:
                pieces.append(f"{'-' if coefficient < 0 else '+'} {monomial}")
        return " ".join(pieces)

    def to_json(self) -> LaurentPolynomialJson:
        return LaurentPolynomialJson(coeffs={str(e): c for e, c in self.terms})

    @classmethod
    def from_json(cls, data: LaurentPolynomialJson | dict | str) -> "LaurentPolynomial":
        try:
            if isinstance(data, str):
                model = LaurentPolynomialJson.model_validate_json(data)
            elif isinstance(data, dict):
                model = LaurentPolynomialJson.model_validate(data)
            else:
                model = data
            return cls(tuple((int(e), c) for e, c in model.coeffs.items()))
        except (ValidationError, ValueError) as e:
            raise ParseError(f"Malformed Laurent polynomial JSON: {e}") from e


ZERO = LaurentPolynomial()
ONE = LaurentPolynomial.monomial(0)
