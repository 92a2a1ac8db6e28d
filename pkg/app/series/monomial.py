"""
双变量单项式级数 f(s, w) | Monomial series f(s, w).

Terms are keyed by (s_power n, w_exponent e, genus_weight g). The canonical
object of the continuum Toda scheme is f = Σ_g k^{-2g} w^{1-2g} z_g(w^{ν-1}s),
whose s^n term in genus g carries e = (ν-1)n + 1 - 2g. Exponents may be negative.
"""

from collections import defaultdict
from fractions import Fraction
from typing import Mapping, Sequence, Union

from app.core.exceptions import PreconditionViolation
from app.series.graded import GradedExpansion
from app.series.series import Series
from app.utils.rational_utils import RationalLike, falling_factorial, to_fraction

Key = tuple[int, int, int]


class MonomialSeries:
    __slots__ = ("_terms", "_order", "_genus")

    def __init__(
        self, terms: Mapping[Key, RationalLike], order: int, genus: int
    ) -> None:
        """
        :param terms: {(n, e, g): 系数} | {(n, e, g): coefficient}
        :param order: s 的截断阶数 N | Truncation order N in s
        :param genus: 亏格截断 G | Genus truncation G
        """
        clean: dict[Key, Fraction] = {}
        for (n, e, g), c in terms.items():
            if n < 0 or g < 0:
                raise PreconditionViolation(
                    f"Invalid monomial key (n={n}, e={e}, g={g})."
                )
            if n > order or g > genus:
                continue
            value = to_fraction(c)
            if value:
                clean[(n, e, g)] = value
        self._terms = clean
        self._order = order
        self._genus = genus

    @classmethod
    def from_graded(
        cls, expansion: GradedExpansion, nu: int, offsets: Sequence[int]
    ) -> "MonomialSeries":
        """
        把分级展开的第 g 槽作为 w^{offsets[g]}·series(w^{ν-1}s) 提升为单项式级数。

        Lift slot g of ``expansion`` to w^{offsets[g]}·slot(w^{ν-1}s), i.e. the s^n term
        carries w-exponent (ν-1)n + offsets[g].
        """
        terms: dict[Key, Fraction] = {}
        for g in range(expansion.genus_truncation + 1):
            for n, c in enumerate(expansion[g].coefficients):
                if c:
                    terms[(n, (nu - 1) * n + offsets[g], g)] = c
        return cls(terms, expansion.order, expansion.genus_truncation)

    @classmethod
    def scheme(cls, z: GradedExpansion, nu: int) -> "MonomialSeries":
        """f(s, w) = Σ_g k^{-2g} w^{1-2g} z_g(w^{ν-1}s)."""
        offsets = [1 - 2 * g for g in range(z.genus_truncation + 1)]
        return cls.from_graded(z, nu, offsets)

    @property
    def terms(self) -> dict[Key, Fraction]:
        return dict(self._terms)

    @property
    def order(self) -> int:
        return self._order

    @property
    def genus_truncation(self) -> int:
        return self._genus

    def __add__(self, other: "MonomialSeries") -> "MonomialSeries":
        terms: dict[Key, Fraction] = defaultdict(Fraction)
        for key, c in self._terms.items():
            terms[key] += c
        for key, c in other._terms.items():
            terms[key] += c
        return MonomialSeries(
            terms, min(self._order, other._order), min(self._genus, other._genus)
        )

    def __mul__(
        self, other: Union["MonomialSeries", RationalLike]
    ) -> "MonomialSeries":
        if not isinstance(other, MonomialSeries):
            k = to_fraction(other)
            return MonomialSeries(
                {key: c * k for key, c in self._terms.items()}, self._order, self._genus
            )
        order = min(self._order, other._order)
        genus = min(self._genus, other._genus)
        terms: dict[Key, Fraction] = defaultdict(Fraction)
        for (n1, e1, g1), c1 in self._terms.items():
            for (n2, e2, g2), c2 in other._terms.items():
                n, g = n1 + n2, g1 + g2
                if n <= order and g <= genus:
                    terms[(n, e1 + e2, g)] += c1 * c2
        return MonomialSeries(terms, order, genus)

    __rmul__ = __mul__

    def w_derivative(self, j: int) -> "MonomialSeries":
        """∂_w^j term by term: coefficient times e(e-1)...(e-j+1), exponent lowered by j."""
        if j < 0:
            raise PreconditionViolation("Derivative order must be non-negative.")
        return MonomialSeries(
            {
                (n, e - j, g): c * falling_factorial(e, j)
                for (n, e, g), c in self._terms.items()
            },
            self._order,
            self._genus,
        )

    def at_w_one(self) -> GradedExpansion:
        """Set w = 1 and collect by genus."""
        slots = [[Fraction(0)] * (self._order + 1) for _ in range(self._genus + 1)]
        for (n, _e, g), c in self._terms.items():
            slots[g][n] += c
        return GradedExpansion([Series(values, self._order) for values in slots])


def w_derivative_at_one(f: MonomialSeries, j: int) -> GradedExpansion:
    """∂_w^j f at w = 1, as a graded expansion."""
    if j < 0:
        raise PreconditionViolation("Derivative order must be non-negative.")
    return f.w_derivative(j).at_w_one()
