"""
已发表的 z_g、ζ^{(1)} 与强迫项系数的显式形式 | Published closed forms of z_g, ζ^{(1)} and the forcing families.

These are independent targets: the engine computes everything from the series, and
the comparisons below only report agreement. A mismatch is logged as a probable
misprint, never raised.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import sympy
from sympy import QQ, Poly

from app.series.rational_function import Z0, RationalFunction
from app.series.series import Series
from app.toda.forcing import printed_monomial_coefficient
from app.toda.reconstruct import pole_power
from app.toda.walks import PartitionV
from app.utils.logging_utils import configure_logging
from app.utils.rational_utils import (
    c_nu,
    falling_factorial,
    format_rational,
    to_fraction,
)

logger = configure_logging(name=__name__)

NU = sympy.Symbol("nu")

# z_2: 系数按 z_0 的幂排列，每项是 ν 的升幂系数 | coefficients of z_0^k, each a list of ν-power coefficients
_Z2_BY_Z0_POWER: list[list[int]] = [
    [0, 0, 0, 0, 0, 0, 2, -14, 24],
    [0, 0, 0, -12, 148, -546, 758, -252, -96],
    [0, 0, 264, -1510, 25551, -500, -1789, 840, 144],
    [0, -536, 1396, 912, -4596, 2492, 1296, -868, -96],
    [168, 234, -1467, 558, 1902, -1446, -267, 294, 24],
]

# z_2 的第二种写法，按 w = z_0 - 1 的幂 | second display of z_2, by powers of w = z_0 - 1
_Z2_BY_W_POWER = [
    (NU - 2) * (NU - 3) * (NU - 4) * (5 * NU - 7),
    2 * (NU - 1) * (NU - 2) * (168 + 84 * NU - 246 * NU**2 + 73 * NU**3),
    (NU - 1) ** 2 * (NU - 2) * (-504 - 1158 * NU + 288 * NU**2 + 497 * NU**3),
    4 * (NU - 1) ** 3 * (-168 - 604 * NU - 190 * NU**2 + 288 * NU**3 + 77 * NU**4),
    3 * (NU - 1) ** 4 * (56 + 302 * NU + 383 * NU**2 + 130 * NU**3 + 8 * NU**4),
]

_Z3_BY_W_POWER = [
    (NU - 2) * (NU - 3) * (NU - 4) * (NU - 5) * (NU - 6) * (124 - 147 * NU + 35 * NU**2),
    (NU - 3) * (NU - 2) * (NU - 1)
    * (104160 + 47584 * NU - 332550 * NU**2 + 270697 * NU**3 - 83226 * NU**4 + 8923 * NU**5),
    3 * (NU - 2) * (NU - 1) ** 2
    * (312480 + 744980 * NU - 1245750 * NU**2 + 373091 * NU**3 + 1085920 * NU**4
       - 485414 * NU**5 + 67225 * NU**6),
    (NU - 2) * (NU - 1) ** 3
    * (-1562400 - 7251840 * NU + 290690 * NU**2 + 11468057 * NU**3 - 2824078 * NU**4
       - 3154302 * NU**5 + 1078663 * NU**6),
    (NU - 2) * (NU - 1) ** 4
    * (1562400 + 10781280 * NU + 12588010 * NU**2 - 10677353 * NU**3 - 11255921 * NU**4
       + 3006363 * NU**5 + 1779986 * NU**6),
    3 * (NU - 1) ** 5
    * (624960 + 5411808 * NU + 10100796 * NU**2 - 1315908 * NU**3 - 9371695 * NU**4
       - 973573 * NU**5 + 1835799 * NU**6 + 308858 * NU**7),
    (NU - 1) ** 6
    * (-624960 - 6823584 * NU - 20098900 * NU**2 - 16851720 * NU**3 + 3867117 * NU**4
       + 8356442 * NU**5 + 2223760 * NU**6 + 119824 * NU**7),
    5 * (NU - 1) ** 7
    * (17856 + 235296 * NU + 939236 * NU**2 + 1505064 * NU**3 + 1032603 * NU**4
       + 285860 * NU**5 + 24472 * NU**6 + 64 * NU**7),
]


def _evaluate(expression: sympy.Expr, nu: int) -> sympy.Rational:
    return sympy.Rational(expression.subs(NU, nu))


def _from_w_bracket(nu: int, bracket: Sequence[sympy.Expr], prefactor: Fraction, pole: int) -> RationalFunction:
    """prefactor·z_0(z_0-1)·Σ_k bracket_k (z_0-1)^k / D^pole"""
    body = sum(
        (_evaluate(b, nu) * (Z0 - 1) ** k for k, b in enumerate(bracket)),
        sympy.Integer(0),
    )
    numerator = sympy.Rational(prefactor.numerator, prefactor.denominator) * Z0 * (Z0 - 1) * body
    return RationalFunction(Poly(sympy.expand(numerator), Z0, domain=QQ), pole_power(nu, pole))


def printed_z1(nu: int) -> RationalFunction:
    """(ν-1)ν(z_0-1)z_0(-ν² - 2z_0 + νz_0 + ν²z_0)/(12(ν-(ν-1)z_0)⁴)"""
    numerator = (nu - 1) * nu * (Z0 - 1) * Z0 * (-(nu**2) - 2 * Z0 + nu * Z0 + nu**2 * Z0)
    return RationalFunction(
        Poly(sympy.expand(numerator), Z0, domain=QQ), pole_power(nu, 4) * 12
    )


def printed_z2(nu: int) -> RationalFunction:
    """The z_0-power display of z_2, denominator (ν-(ν-1)z_0)⁹."""
    body = sum(
        (
            sum(c * nu**p for p, c in enumerate(row)) * Z0**k
            for k, row in enumerate(_Z2_BY_Z0_POWER)
        ),
        sympy.Integer(0),
    )
    numerator = sympy.Rational((nu - 1) * nu, 1440) * (Z0 - 1) * Z0 * body
    return RationalFunction(Poly(sympy.expand(numerator), Z0, domain=QQ), pole_power(nu, 9))


def printed_z2_shifted(nu: int) -> RationalFunction:
    """The (z_0-1)-power display of z_2, read off its Taylor-coefficient integrand."""
    return _from_w_bracket(nu, _Z2_BY_W_POWER, Fraction(nu * (nu - 1), 1440), 9)


def printed_z3(nu: int) -> RationalFunction:
    return _from_w_bracket(nu, _Z3_BY_W_POWER, Fraction(nu * (nu - 1), 362880), 14)


def printed_z_forms(nu: int) -> dict[str, RationalFunction]:
    return {
        "z1": printed_z1(nu),
        "z2": printed_z2(nu),
        "z2_shifted": printed_z2_shifted(nu),
        "z3": printed_z3(nu),
    }


@dataclass
class PrintedComparison:
    """逐系数的比较结果 | Coefficient-by-coefficient comparison."""

    name: str
    nu: int
    agrees: bool
    # (z_0 的幂, 发表值, 计算值) | (power of z_0, printed, computed)
    mismatches: list[tuple[int, str, str]] = field(default_factory=list)
    denominator_agrees: bool = True


def compare_printed_zg(
    name: str, nu: int, computed: RationalFunction, printed: RationalFunction
) -> PrintedComparison:
    """
    比较重建结果与发表的形式，不一致时只记录警告。

    Compare a reconstruction with a printed form over the common denominator of the
    printed form; mismatches are logged as probable misprints.
    """
    if computed == printed:
        return PrintedComparison(name, nu, True)
    # bring the computed numerator over the printed denominator
    scaled = computed.numerator * printed.denominator
    quotient, remainder = scaled.div(computed.denominator)
    printed_coeffs = printed.numerator_coefficients()
    computed_coeffs = [Fraction(0)] if quotient.is_zero else [
        to_fraction(c) for c in reversed(quotient.all_coeffs())
    ]
    width = max(len(printed_coeffs), len(computed_coeffs))
    printed_coeffs += [Fraction(0)] * (width - len(printed_coeffs))
    computed_coeffs += [Fraction(0)] * (width - len(computed_coeffs))
    mismatches = [
        (k, format_rational(p), format_rational(q))
        for k, (p, q) in enumerate(zip(printed_coeffs, computed_coeffs))
        if p != q
    ]
    result = PrintedComparison(
        name, nu, False, mismatches, denominator_agrees=remainder.is_zero
    )
    logger.warning(
        f"Printed {name} differs from the reconstruction for nu={nu} at "
        f"{len(mismatches)} coefficient(s); probable misprint."
    )
    return result


def printed_zeta1(nu: int, j: int) -> Fraction:
    """ν c_ν^j·[w^{j-1}] ((ν-1)(ν-2) + (ν+2)w)(w+1)^{νj}/(1-(ν-1)w)³"""
    order = j - 1
    w = Series.variable(order)
    body = Series([(nu - 1) * (nu - 2), nu + 2], order) * (w + 1).power(nu * j)
    body = body * Series([1, -(nu - 1)], order).power(-3)
    return nu * c_nu(nu) ** j * body[order]


@dataclass(frozen=True)
class PrintedMonomial:
    """
    强迫项族的发表系数 ν(ν-1)…(ν-ρ+1)·poly(ν)/denominator。

    Printed coefficient of f^{ν+1-ρ} Π f_{w^{(j)}}^{r_j} with c_ν factored out.
    """

    parts: tuple[int, ...]
    poly: tuple[int, ...]
    denominator: int

    def value(self, nu: int) -> Fraction:
        body = sum(c * nu**k for k, c in enumerate(self.poly))
        return Fraction(falling_factorial(nu, len(self.parts)) * body, self.denominator)


PRINTED_FORCING: dict[int, list[PrintedMonomial]] = {
    1: [
        PrintedMonomial((3,), (1,), 6),
        PrintedMonomial((2, 1), (1,), 3),
        PrintedMonomial((1, 1, 1), (1,), 12),
    ],
    2: [
        PrintedMonomial((5,), (-1, 2), 120),
        PrintedMonomial((4, 1), (-11, 18), 360),
        PrintedMonomial((3, 2), (-5, 6), 72),
        PrintedMonomial((3, 1, 1), (-20, 23), 360),
        PrintedMonomial((2, 2, 1), (-65, 62), 720),
        PrintedMonomial((2, 1, 1, 1), (-19, 16), 360),
        PrintedMonomial((1, 1, 1, 1, 1), (-7, 5), 1440),
    ],
    3: [
        PrintedMonomial((7,), (3, -8, 6), 5040),
        PrintedMonomial((6, 1), (47, -108, 72), 5040 * 3),
        PrintedMonomial((5, 2), (105, -210, 112), 5040 * 2),
        PrintedMonomial((4, 3), (539, -1050, 504), 5040 * 6),
        PrintedMonomial((5, 1, 1), (86, -163, 86), 5040 * 2),
        PrintedMonomial((4, 2, 1), (1387, -2416, 1044), 5040 * 6),
        PrintedMonomial((3, 3, 1), (467, -803, 327), 5040 * 3),
        PrintedMonomial((3, 2, 2), (1456, -2359, 882), 5040 * 6),
        PrintedMonomial((4, 1, 1, 1), (410, -665, 270), 5040 * 6),
        PrintedMonomial((3, 2, 1, 1), (857, -1309, 458), 5040 * 2),
        PrintedMonomial((2, 2, 2, 1), (1327, -1932, 620), 5040 * 6),
        PrintedMonomial((3, 1, 1, 1, 1), (788, -1121, 359), 5040 * 12),
        PrintedMonomial((2, 2, 1, 1, 1), (2431, -3315, 974), 5040 * 12),
        PrintedMonomial((2, 1, 1, 1, 1, 1), (228, -290, 77), 5040 * 6),
        PrintedMonomial((1, 1, 1, 1, 1, 1, 1), (124, -147, 35), 5040 * 72),
    ],
}


@dataclass(frozen=True)
class FamilyRow:
    label: str
    printed: Fraction
    computed: Fraction

    @property
    def agrees(self) -> bool:
        return self.printed == self.computed


def compare_forcing_families(nu: int, g: int) -> list[FamilyRow]:
    """F_g[0] 的每个单项式：发表系数与 d_V 计算值 | Printed versus d_V-computed monomial coefficients of F_g[0]."""
    rows = []
    for monomial in PRINTED_FORCING.get(g, []):
        V = PartitionV(monomial.parts)
        row = FamilyRow(
            V.label(), monomial.value(nu), printed_monomial_coefficient(nu, V)
        )
        if not row.agrees:
            logger.warning(
                f"F_{g}[0] monomial {row.label} at nu={nu}: printed "
                f"{format_rational(row.printed)}, computed {format_rational(row.computed)}."
            )
        rows.append(row)
    return rows
