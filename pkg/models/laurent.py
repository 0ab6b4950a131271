# models/laurent.py
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Tuple, Union


@dataclass(frozen=True)
class LaurentPoly:
    """Integer Laurent polynomial in t, stored as exponent -> nonzero coefficient."""
    coefficients: Dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "coefficients", {
            e: int(c) for e, c in sorted(self.coefficients.items()) if c != 0
        })

    @classmethod
    def constant(cls, value: int) -> "LaurentPoly":
        return cls({0: value})

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPoly":
        return cls({exponent: coefficient})

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, int]]) -> "LaurentPoly":
        coefficients: Dict[int, int] = {}
        for exponent, coefficient in pairs:
            coefficients[exponent] = coefficients.get(exponent, 0) + coefficient
        return cls(coefficients)

    def coeff(self, exponent: int) -> int:
        return self.coefficients.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def degree(self) -> int:
        return max(self.coefficients) if self.coefficients else 0

    def is_symmetric(self) -> bool:
        return all(self.coeff(-e) == c for e, c in self.coefficients.items())

    def terms(self) -> List[Tuple[int, int]]:
        """(exponent, coefficient) pairs, highest exponent first."""
        return sorted(self.coefficients.items(), reverse=True)

    def evaluate(self, t: Union[int, Fraction]) -> Fraction:
        t = Fraction(t)
        return sum((c * t ** e for e, c in self.coefficients.items()), Fraction(0))

    def substitute_power(self, p: int) -> "LaurentPoly":
        """f(t^p)."""
        return LaurentPoly({e * p: c for e, c in self.coefficients.items()})

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        return LaurentPoly.from_pairs(list(self.coefficients.items()) + list(other.coefficients.items()))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.coefficients.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        return LaurentPoly.from_pairs(
            (e1 + e2, c1 * c2)
            for e1, c1 in self.coefficients.items()
            for e2, c2 in other.coefficients.items()
        )

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for exponent, coefficient in self.terms():
            sign = "-" if coefficient < 0 else "+"
            magnitude = abs(coefficient)
            if exponent == 0:
                body = str(magnitude)
            else:
                power = "t" if exponent == 1 else f"t^{exponent}"
                body = power if magnitude == 1 else f"{magnitude}{power}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        return text + "".join(f" {sign} {body}" for sign, body in parts[1:])
