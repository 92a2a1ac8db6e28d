"""
z_0 的有理函数及其一阶对数扩展 | Rational functions of z_0 and their first logarithmic extension.

Polynomials are sympy ``Poly`` objects over QQ in the symbol ``z0``. A
``RationalFunction`` is kept reduced with a monic denominator; equality is
decided by cross-multiplication so it never depends on normalisation.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

import sympy
from sympy import QQ, Poly

from app.core.exceptions import PreconditionViolation
from app.series.series import Series, evaluate_polynomial
from app.utils.rational_utils import (
    RationalLike,
    format_rational,
    to_fraction,
    to_sympy,
)

Z0 = sympy.Symbol("z0")


def _poly(coefficients: Sequence[RationalLike]) -> Poly:
    """Poly in z0 from ascending coefficients."""
    values = [to_sympy(c) for c in coefficients] or [sympy.Integer(0)]
    return Poly(list(reversed(values)), Z0, domain=QQ)


def _ascending(poly: Poly) -> list[Fraction]:
    if poly.is_zero:
        return [Fraction(0)]
    return [to_fraction(c) for c in reversed(poly.all_coeffs())]


class RationalFunction:
    __slots__ = ("_numerator", "_denominator")

    def __init__(
        self,
        numerator: Union[Poly, Sequence[RationalLike]],
        denominator: Union[Poly, Sequence[RationalLike], None] = None,
    ) -> None:
        num = numerator if isinstance(numerator, Poly) else _poly(numerator)
        if denominator is None:
            den = Poly(1, Z0, domain=QQ)
        else:
            den = denominator if isinstance(denominator, Poly) else _poly(denominator)
        num = num.set_domain(QQ)
        den = den.set_domain(QQ)
        if den.is_zero:
            raise PreconditionViolation("Rational function with zero denominator.")
        common = num.gcd(den)
        if not common.is_zero and common.degree() > 0:
            num = num.quo(common)
            den = den.quo(common)
        lead = den.LC()
        self._numerator: Poly = num.quo_ground(lead)
        self._denominator: Poly = den.quo_ground(lead)

    @property
    def numerator(self) -> Poly:
        return self._numerator

    @property
    def denominator(self) -> Poly:
        return self._denominator

    def numerator_coefficients(self) -> list[Fraction]:
        return _ascending(self._numerator)

    def denominator_coefficients(self) -> list[Fraction]:
        return _ascending(self._denominator)

    def as_expression(self) -> sympy.Expr:
        return self._numerator.as_expr() / self._denominator.as_expr()

    def is_zero(self) -> bool:
        return self._numerator.is_zero

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return (
            self._numerator * other._denominator - other._numerator * self._denominator
        ).is_zero

    def __hash__(self) -> int:
        return hash((tuple(self.numerator_coefficients()), tuple(self.denominator_coefficients())))

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(
            self._numerator * other._denominator + other._numerator * self._denominator,
            self._denominator * other._denominator,
        )

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(
            self._numerator * other._denominator - other._numerator * self._denominator,
            self._denominator * other._denominator,
        )

    def __mul__(self, other: Union["RationalFunction", RationalLike]) -> "RationalFunction":
        if not isinstance(other, RationalFunction):
            return RationalFunction(
                self._numerator.mul_ground(to_sympy(other)), self._denominator
            )
        return RationalFunction(
            self._numerator * other._numerator, self._denominator * other._denominator
        )

    def __repr__(self) -> str:
        return f"RationalFunction({self.as_expression()})"

    def evaluate(self, z0: RationalLike) -> Fraction:
        point = to_sympy(z0)
        den = self._denominator.eval(point)
        if den == 0:
            raise PreconditionViolation(f"Pole of the rational function at z0={z0}.")
        return to_fraction(self._numerator.eval(point) / den)

    def compose_series(self, z0: Series) -> Series:
        """R(z_0(s)) as a truncated series; the denominator must not vanish at z_0(0)."""
        num = evaluate_polynomial(self.numerator_coefficients(), z0)
        den = evaluate_polynomial(self.denominator_coefficients(), z0)
        return num / den

    def is_divisible_by(self, factor: Sequence[RationalLike]) -> bool:
        """True when the reduced numerator is divisible by the polynomial ``factor``."""
        return self._numerator.rem(_poly(factor)).is_zero

    def pole_order(self, factor: Sequence[RationalLike]) -> int:
        """Multiplicity of ``factor`` in the reduced denominator."""
        divisor = _poly(factor)
        den = self._denominator
        count = 0
        while den.degree() > 0 and den.rem(divisor).is_zero:
            den = den.quo(divisor)
            count += 1
        return count

    def to_payload(self) -> dict[str, list[str]]:
        return {
            "numerator": [format_rational(c) for c in self.numerator_coefficients()],
            "denominator": [format_rational(c) for c in self.denominator_coefficients()],
        }


def nu_factor(nu: int) -> list[Fraction]:
    """Coefficients of ν - (ν-1)z_0, the only allowed pole."""
    return [Fraction(nu), Fraction(-(nu - 1))]


@dataclass(frozen=True)
class LogExtendedFunction:
    """
    R(z_0) + c·log(ν-(ν-1)z_0) + d·log(z_0)

    The rational part and two rational log coefficients; this is the closure the
    e_g closed forms live in.
    """

    nu: int
    rational: RationalFunction
    c_log_nu_term: Fraction = field(default=Fraction(0))
    d_log_z0_term: Fraction = field(default=Fraction(0))

    def compose_series(self, z0: Series) -> Series:
        result = self.rational.compose_series(z0)
        if self.c_log_nu_term:
            inner = evaluate_polynomial(nu_factor(self.nu), z0)
            result = result + inner.log() * self.c_log_nu_term
        if self.d_log_z0_term:
            result = result + z0.log() * self.d_log_z0_term
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LogExtendedFunction):
            return NotImplemented
        return (
            self.nu == other.nu
            and self.rational == other.rational
            and self.c_log_nu_term == other.c_log_nu_term
            and self.d_log_z0_term == other.d_log_z0_term
        )

    def __hash__(self) -> int:
        return hash((self.nu, self.c_log_nu_term, self.d_log_z0_term))
