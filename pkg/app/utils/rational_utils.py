"""
精确有理数的辅助函数 | Helpers for exact rational scalars.

Every scalar in the engine is a ``fractions.Fraction``; these helpers convert to
and from the string and sympy forms and supply the integer combinatorics shared
by the series, hierarchy and oracle modules.
"""

from fractions import Fraction
from math import comb, factorial
from typing import Union

import sympy
from sympy import factorint

RationalLike = Union[int, Fraction, str, sympy.Rational]


def to_fraction(value: RationalLike) -> Fraction:
    """
    将整数、字符串 "p/q" 或 sympy 有理数转换为 Fraction。

    Convert an int, a "p/q" string or a sympy Rational into a Fraction.

    :param value: 待转换的值 | Value to convert
    :return: Fraction
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational value")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    if isinstance(value, sympy.Expr) and value.is_Rational:
        return Fraction(int(value.p), int(value.q))
    raise TypeError(f"cannot convert {value!r} to an exact rational")


def to_sympy(value: RationalLike) -> sympy.Rational:
    q = to_fraction(value)
    return sympy.Rational(q.numerator, q.denominator)


def format_rational(value: RationalLike) -> str:
    """Serialise as "p/q", or "p" when the denominator is 1."""
    q = to_fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def binomial(n: int, k: int) -> int:
    """Ordinary binomial coefficient, zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def falling_factorial(e: int, j: int) -> int:
    """e(e-1)...(e-j+1); e may be negative."""
    result = 1
    for i in range(j):
        result *= e - i
    return result


def generalized_binomial(e: int, m: int) -> int:
    """binom(e, m) for any integer e and m >= 0, as e(e-1)...(e-m+1)/m!."""
    if m < 0:
        return 0
    return falling_factorial(e, m) // factorial(m)


def c_nu(nu: int) -> int:
    """The leading coupling c_ν = 2ν·binom(2ν-1, ν-1) = (ν+1)·binom(2ν, ν+1)."""
    return 2 * nu * comb(2 * nu - 1, nu - 1)


def prime_log_basis(value: RationalLike) -> dict[int, int]:
    """
    将正有理数的对数分解到素数对数基上。

    Decompose log(value) over the basis {log p : p prime}: returns {p: exponent}
    with log(value) = Σ exponent·log p.

    :param value: 正有理数 | Positive rational
    :return: 素数到指数的映射 | Mapping prime -> exponent
    """
    q = to_fraction(value)
    if q <= 0:
        raise ValueError(f"log of non-positive rational {q}")
    basis: dict[int, int] = {}
    for prime, power in factorint(q.numerator).items():
        basis[int(prime)] = basis.get(int(prime), 0) + int(power)
    for prime, power in factorint(q.denominator).items():
        basis[int(prime)] = basis.get(int(prime), 0) - int(power)
    return {p: k for p, k in basis.items() if k != 0}
