from fractions import Fraction
from typing import Sequence, Union

from app.core.exceptions import PreconditionViolation, TruncationError
from app.series.series import Series
from app.utils.rational_utils import RationalLike, to_fraction


class GradedExpansion:
    """
    亏格分级展开 Σ_g k^{-2g}·(s 的级数) | Genus-graded expansion Σ_g k^{-2g}·(series in s).

    Slots 0..G all share one truncation order N. Products are convolutions in the
    genus index truncated at G.
    """

    __slots__ = ("_per_genus",)

    def __init__(self, per_genus: Sequence[Series]) -> None:
        if not per_genus:
            raise PreconditionViolation("A graded expansion needs at least genus 0.")
        orders = {s.order for s in per_genus}
        if len(orders) != 1:
            raise PreconditionViolation(
                f"All genus slots must share one truncation order, got {sorted(orders)}."
            )
        self._per_genus: tuple[Series, ...] = tuple(per_genus)

    @classmethod
    def zero(cls, order: int, genus: int) -> "GradedExpansion":
        return cls([Series.zero(order)] * (genus + 1))

    @classmethod
    def leading(cls, series: Series, genus: int) -> "GradedExpansion":
        """Expansion whose only nonzero slot is genus 0."""
        return cls([series] + [Series.zero(series.order)] * genus)

    @property
    def genus_truncation(self) -> int:
        return len(self._per_genus) - 1

    @property
    def order(self) -> int:
        return self._per_genus[0].order

    @property
    def per_genus(self) -> tuple[Series, ...]:
        return self._per_genus

    def __getitem__(self, g: int) -> Series:
        if g < 0 or g > self.genus_truncation:
            raise TruncationError(
                f"Genus {g} requested from an expansion truncated at genus {self.genus_truncation}."
            )
        return self._per_genus[g]

    def with_slot(self, g: int, series: Series) -> "GradedExpansion":
        slots = list(self._per_genus)
        slots[g] = series
        return GradedExpansion(slots)

    def truncate_genus(self, genus: int) -> "GradedExpansion":
        if genus > self.genus_truncation:
            raise TruncationError(
                f"Cannot raise genus truncation from {self.genus_truncation} to {genus}."
            )
        return GradedExpansion(self._per_genus[: genus + 1])

    def truncate(self, order: int) -> "GradedExpansion":
        return GradedExpansion([s.truncate(order) for s in self._per_genus])

    # ------------------------------------------------------------------ algebra

    def __add__(self, other: "GradedExpansion") -> "GradedExpansion":
        top = min(self.genus_truncation, other.genus_truncation)
        return GradedExpansion([self[g] + other[g] for g in range(top + 1)])

    def __sub__(self, other: "GradedExpansion") -> "GradedExpansion":
        top = min(self.genus_truncation, other.genus_truncation)
        return GradedExpansion([self[g] - other[g] for g in range(top + 1)])

    def __neg__(self) -> "GradedExpansion":
        return GradedExpansion([-s for s in self._per_genus])

    def __mul__(
        self, other: Union["GradedExpansion", RationalLike]
    ) -> "GradedExpansion":
        if not isinstance(other, GradedExpansion):
            k = to_fraction(other)
            return GradedExpansion([s * k for s in self._per_genus])
        top = min(self.genus_truncation, other.genus_truncation)
        order = min(self.order, other.order)
        slots = []
        for g in range(top + 1):
            acc = Series.zero(order)
            for a in range(g + 1):
                left, right = self[a], other[g - a]
                if left.is_zero() or right.is_zero():
                    continue
                acc = acc + left * right
            slots.append(acc)
        return GradedExpansion(slots)

    __rmul__ = __mul__

    def power(self, p: int) -> "GradedExpansion":
        if p < 0:
            raise PreconditionViolation("Graded powers must be non-negative.")
        result = GradedExpansion.leading(Series.one(self.order), self.genus_truncation)
        base = self
        while p:
            if p & 1:
                result = result * base
            p >>= 1
            if p:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedExpansion):
            return NotImplemented
        return self._per_genus == other._per_genus

    def __hash__(self) -> int:
        return hash(self._per_genus)

    def __repr__(self) -> str:
        return f"GradedExpansion(order={self.order}, genus={self.genus_truncation})"

    # ------------------------------------------------------------------ log / exp

    def log(self) -> "GradedExpansion":
        """
        log(Σ_g z_g k^{-2g}) regrouped by k^{-2g}.

        Genus 0 is log z_0; the higher slots are the ε-logarithm of
        1 + Σ_{g>=1} ε^g z_g/z_0 with ε = k^{-2}.
        """
        z0 = self[0]
        if z0[0] != 1:
            raise PreconditionViolation(
                "Graded log requires the genus-0 series to have constant term 1."
            )
        inv = z0.inverse()
        ratios = [self[g] * inv for g in range(self.genus_truncation + 1)]
        slots = [z0.log()]
        for n in range(1, self.genus_truncation + 1):
            acc = ratios[n] * n
            for k in range(1, n):
                acc = acc - slots[k] * ratios[n - k] * k
            slots.append(acc * Fraction(1, n))
        return GradedExpansion(slots)

    def exp(self) -> "GradedExpansion":
        """Inverse of :meth:`log`."""
        leading = self[0].exp()
        factors = [Series.one(self.order)]
        for n in range(1, self.genus_truncation + 1):
            acc = Series.zero(self.order)
            for k in range(1, n + 1):
                acc = acc + self[k] * factors[n - k] * k
            factors.append(acc * Fraction(1, n))
        return GradedExpansion([leading * f for f in factors])


def graded_log(b: GradedExpansion) -> GradedExpansion:
    return b.log()


def graded_exp(b: GradedExpansion) -> GradedExpansion:
    return b.exp()
