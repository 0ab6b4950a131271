from fractions import Fraction
from math import gcd
from typing import Union
import logging
import warnings

import sympy as sym

from models.complex import HFKTable
from models.errors import NotCoprime, TorsionWarning, ZeroParameter
from models.laurent import LaurentPoly

logger = logging.getLogger(__name__)

t = sym.Symbol("t")


class AlexanderService:
    """Alexander polynomials: Euler characteristics of HFK tables, torus knots and cables."""

    def euler_poly(self, table: HFKTable) -> LaurentPoly:
        """Sum over i of chi(HFK(K, i)) t^i; torsion has zero rational Euler characteristic."""
        torsion = [(i, m, str(g)) for (i, m), g in table.items() if g.has_torsion()]
        if torsion:
            message = f"Euler characteristic ignores torsion classes at {torsion}"
            warnings.warn(message, TorsionWarning)
            logger.warning(message)
        return LaurentPoly.from_pairs(
            (i, (-1) ** (m % 2) * g.free_rank) for (i, m), g in table.items()
        )

    def torus_alexander(self, p: int, q: int) -> LaurentPoly:
        """Symmetrized Alexander polynomial of T(p,q).

        (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)), centered at t^0. T(p,-q) is
        the mirror of T(p,q) and has the same symmetric polynomial.
        """
        if p == 0 or q == 0:
            raise ZeroParameter(f"T({p},{q}) is not a knot")
        if gcd(p, q) != 1:
            raise NotCoprime(f"T({p},{q}) needs gcd(p, q) = 1")
        a, b = abs(p), abs(q)
        numerator = sym.Poly((t ** (a * b) - 1) * (t - 1), t)
        denominator = sym.Poly((t ** a - 1) * (t ** b - 1), t)
        quotient, remainder = sym.div(numerator, denominator)
        if not remainder.is_zero:
            raise ArithmeticError(f"Alexander polynomial division for T({p},{q}) left {remainder}")

        center = (a - 1) * (b - 1) // 2
        poly = LaurentPoly({exponent - center: int(c) for (exponent,), c in quotient.terms()})
        logger.debug(f"Alexander polynomial of T({p},{q}): {poly}")
        return poly

    def cable_alexander(self, delta_k: LaurentPoly, p: int, q: int) -> LaurentPoly:
        """Alexander polynomial of the (p,q) cable: Delta_T(p,q)(t) * Delta_K(t^p)."""
        return self.multiply(self.torus_alexander(p, q), self.substitute_power(delta_k, p))

    @staticmethod
    def substitute_power(f: LaurentPoly, p: int) -> LaurentPoly:
        """f(t^p)."""
        return f.substitute_power(p)

    @staticmethod
    def multiply(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
        """Product of two Laurent polynomials."""
        return f * g

    @staticmethod
    def evaluate(f: LaurentPoly, value: Union[int, Fraction]) -> Fraction:
        """Exact value of f at t = value; Delta(1) = +-1 for every knot."""
        return f.evaluate(value)


alexander_service = AlexanderService()
