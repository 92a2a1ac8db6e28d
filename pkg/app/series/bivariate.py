from collections import defaultdict
from fractions import Fraction
from typing import Mapping, Union

from app.core.exceptions import PreconditionViolation
from app.series.series import Series
from app.utils.rational_utils import RationalLike, to_fraction

Key = tuple[int, int]


class BivariateSeries:
    """
    双变量截断幂级数 Σ a_{ij} s_1^i s_2^j | Truncated bivariate series Σ a_{ij} s_1^i s_2^j.

    Truncated by total degree i + j <= N. Only the two-time z_0 constraint uses it.
    """

    __slots__ = ("_terms", "_order")

    def __init__(self, terms: Mapping[Key, RationalLike], order: int) -> None:
        if order < 0:
            raise PreconditionViolation(f"Series order must be >= 0, got {order}.")
        clean: dict[Key, Fraction] = {}
        for (i, j), c in terms.items():
            if i < 0 or j < 0:
                raise PreconditionViolation(f"Negative exponent in key ({i}, {j}).")
            if i + j > order:
                continue
            value = to_fraction(c)
            if value:
                clean[(i, j)] = value
        self._terms = clean
        self._order = order

    @classmethod
    def constant(cls, value: RationalLike, order: int) -> "BivariateSeries":
        return cls({(0, 0): value}, order)

    @classmethod
    def monomial(
        cls, coefficient: RationalLike, i: int, j: int, order: int
    ) -> "BivariateSeries":
        return cls({(i, j): coefficient}, order)

    @property
    def order(self) -> int:
        return self._order

    @property
    def terms(self) -> dict[Key, Fraction]:
        return dict(self._terms)

    def coefficient(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def __add__(self, other: Union["BivariateSeries", RationalLike]) -> "BivariateSeries":
        if not isinstance(other, BivariateSeries):
            other = BivariateSeries.constant(other, self._order)
        terms: dict[Key, Fraction] = defaultdict(Fraction)
        for key, c in self._terms.items():
            terms[key] += c
        for key, c in other._terms.items():
            terms[key] += c
        return BivariateSeries(terms, min(self._order, other._order))

    __radd__ = __add__

    def __mul__(self, other: Union["BivariateSeries", RationalLike]) -> "BivariateSeries":
        if not isinstance(other, BivariateSeries):
            k = to_fraction(other)
            return BivariateSeries(
                {key: c * k for key, c in self._terms.items()}, self._order
            )
        order = min(self._order, other._order)
        terms: dict[Key, Fraction] = defaultdict(Fraction)
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                if i1 + i2 + j1 + j2 <= order:
                    terms[(i1 + i2, j1 + j2)] += c1 * c2
        return BivariateSeries(terms, order)

    __rmul__ = __mul__

    def power(self, p: int) -> "BivariateSeries":
        if p < 0:
            raise PreconditionViolation("Bivariate powers must be non-negative.")
        result = BivariateSeries.constant(1, self._order)
        base = self
        while p:
            if p & 1:
                result = result * base
            p >>= 1
            if p:
                base = base * base
        return result

    def slice_s2_zero(self) -> Series:
        """The s_2 = 0 slice as a univariate series in s_1."""
        values = [self.coefficient(i, 0) for i in range(self._order + 1)]
        return Series(values, self._order)

    def swapped(self) -> "BivariateSeries":
        """Exchange the roles of s_1 and s_2."""
        return BivariateSeries(
            {(j, i): c for (i, j), c in self._terms.items()}, self._order
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        return self._order == other._order and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._order, tuple(sorted(self._terms.items()))))

    def __repr__(self) -> str:
        return f"BivariateSeries(order={self._order}, terms={len(self._terms)})"
