"""
截断形式幂级数 | Truncated formal power series over the rationals.

A ``Series`` holds the coefficients a_0..a_N of Σ a_n s^n. Binary operations
truncate to the smaller order; every value is immutable once built.
"""

from fractions import Fraction
from typing import Iterable, Literal, Sequence, Union

from app.core.exceptions import PreconditionViolation, TruncationError
from app.utils.rational_utils import RationalLike, format_rational, to_fraction

Scalar = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class Series:
    __slots__ = ("_coefficients",)

    def __init__(self, coefficients: Iterable[RationalLike], order: int) -> None:
        """
        :param coefficients: 系数 a_0, a_1, ... (不足部分补零，多余部分截断) | Coefficients a_0, a_1, ... (padded with zeros, extra ones dropped)
        :param order: 截断阶数 N | Truncation order N
        """
        if order < 0:
            raise PreconditionViolation(f"Series order must be >= 0, got {order}.")
        values = [to_fraction(c) for c in coefficients][: order + 1]
        values.extend([_ZERO] * (order + 1 - len(values)))
        self._coefficients: tuple[Fraction, ...] = tuple(values)

    @classmethod
    def _make(cls, values: Sequence[Scalar]) -> "Series":
        obj = object.__new__(cls)
        obj._coefficients = tuple(
            v if type(v) is Fraction else Fraction(v) for v in values
        )
        return obj

    # ------------------------------------------------------------------ builders

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls._make([_ZERO] * (order + 1))

    @classmethod
    def constant(cls, value: RationalLike, order: int) -> "Series":
        return cls._make([to_fraction(value)] + [_ZERO] * order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls.constant(1, order)

    @classmethod
    def monomial(cls, coefficient: RationalLike, power: int, order: int) -> "Series":
        values = [_ZERO] * (order + 1)
        if power <= order:
            values[power] = to_fraction(coefficient)
        return cls._make(values)

    @classmethod
    def variable(cls, order: int) -> "Series":
        """The series s itself."""
        return cls.monomial(1, 1, order)

    # ------------------------------------------------------------------ access

    @property
    def order(self) -> int:
        return len(self._coefficients) - 1

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coefficients

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            return _ZERO
        if n > self.order:
            raise TruncationError(
                f"Coefficient s^{n} requested from a series truncated at order {self.order}."
            )
        return self._coefficients[n]

    def __len__(self) -> int:
        return len(self._coefficients)

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise TruncationError(
                f"Cannot raise truncation order from {self.order} to {order}."
            )
        return Series._make(self._coefficients[: order + 1])

    def is_zero(self) -> bool:
        return not any(self._coefficients)

    def first_difference(self, other: "Series") -> int | None:
        """Index of the first differing coefficient up to the common order, or None."""
        n = min(self.order, other.order)
        for i in range(n + 1):
            if self._coefficients[i] != other._coefficients[i]:
                return i
        return None

    # ------------------------------------------------------------------ ring

    def _coerce(self, other: Union["Series", RationalLike]) -> "Series":
        if isinstance(other, Series):
            return other
        return Series.constant(other, self.order)

    def __add__(self, other: Union["Series", RationalLike]) -> "Series":
        other = self._coerce(other)
        n = min(self.order, other.order)
        a, b = self._coefficients, other._coefficients
        return Series._make([a[i] + b[i] for i in range(n + 1)])

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series._make([-c for c in self._coefficients])

    def __sub__(self, other: Union["Series", RationalLike]) -> "Series":
        return self + (-self._coerce(other))

    def __rsub__(self, other: RationalLike) -> "Series":
        return self._coerce(other) - self

    def __mul__(self, other: Union["Series", RationalLike]) -> "Series":
        if not isinstance(other, Series):
            k = to_fraction(other)
            return Series._make([c * k for c in self._coefficients])
        n = min(self.order, other.order)
        a, b = self._coefficients, other._coefficients
        out: list[Fraction] = [_ZERO] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if not ai:
                continue
            for j in range(n + 1 - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return Series._make(out)

    __rmul__ = __mul__

    def __truediv__(self, other: Union["Series", RationalLike]) -> "Series":
        if not isinstance(other, Series):
            k = to_fraction(other)
            if k == 0:
                raise PreconditionViolation("Division of a series by the scalar 0.")
            return Series._make([c / k for c in self._coefficients])
        return self * other.inverse()

    def __rtruediv__(self, other: RationalLike) -> "Series":
        return self.inverse() * to_fraction(other)

    def __pow__(self, p: int) -> "Series":
        return self.power(p)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self._coefficients == other._coefficients

    def __hash__(self) -> int:
        return hash(self._coefficients)

    def __repr__(self) -> str:
        terms = ", ".join(format_rational(c) for c in self._coefficients)
        return f"Series([{terms}], order={self.order})"

    # ------------------------------------------------------------------ calculus

    def derivative(self) -> "Series":
        """d/ds; the top coefficient is lost, so the result has order N-1."""
        c = self._coefficients
        if self.order == 0:
            return Series.zero(0)
        return Series._make([n * c[n] for n in range(1, self.order + 1)])

    def integral(self) -> "Series":
        """Antiderivative with zero constant term; order N+1."""
        c = self._coefficients
        return Series._make([_ZERO] + [c[n] / (n + 1) for n in range(self.order + 1)])

    def euler(self) -> "Series":
        """The Euler operator s·d/ds, which keeps the order."""
        return Series._make([n * c for n, c in enumerate(self._coefficients)])

    def inverse(self) -> "Series":
        c = self._coefficients
        b0 = c[0]
        if b0 == 0:
            raise PreconditionViolation(
                "Series inverse requires a nonzero constant term."
            )
        inv: list[Fraction] = [1 / b0]
        for n in range(1, self.order + 1):
            acc = _ZERO
            for i in range(1, n + 1):
                if c[i]:
                    acc += c[i] * inv[n - i]
            inv.append(-acc / b0)
        return Series._make(inv)

    def log(self) -> "Series":
        if self._coefficients[0] != 1:
            raise PreconditionViolation(
                f"Series log requires constant term 1, got {format_rational(self._coefficients[0])}."
            )
        if self.order == 0:
            return Series.zero(0)
        return (self.derivative() * self.truncate(self.order - 1).inverse()).integral()

    def exp(self) -> "Series":
        a = self._coefficients
        if a[0] != 0:
            raise PreconditionViolation("Series exp requires constant term 0.")
        b: list[Fraction] = [_ONE]
        for n in range(1, self.order + 1):
            acc = _ZERO
            for k in range(1, n + 1):
                if a[k]:
                    acc += k * a[k] * b[n - k]
            b.append(acc / n)
        return Series._make(b)

    def power(self, p: Union[int, Fraction]) -> "Series":
        """
        整数次幂（常数项非零时可为负），常数项为 1 时可为有理数次幂。

        Integer power (negative allowed when the constant term is nonzero); rational
        powers are allowed when the constant term is 1.
        """
        c = self._coefficients
        if isinstance(p, Fraction) and p.denominator != 1:
            if c[0] != 1:
                raise PreconditionViolation(
                    "Rational powers require constant term 1."
                )
        else:
            p = int(p)
            if p == 0:
                return Series.one(self.order)
            if c[0] == 0:
                if p < 0:
                    raise PreconditionViolation(
                        "Negative power of a series with zero constant term."
                    )
                result = Series.one(self.order)
                base = self
                while p:
                    if p & 1:
                        result = result * base
                    p >>= 1
                    if p:
                        base = base * base
                return result
        # J.C.P. Miller recurrence
        a0 = c[0]
        b: list[Fraction] = [a0**p if isinstance(p, int) else _ONE]
        for n in range(1, self.order + 1):
            acc = _ZERO
            for k in range(1, n + 1):
                if c[k]:
                    acc += ((p + 1) * k - n) * c[k] * b[n - k]
            b.append(acc / (n * a0))
        return Series._make(b)

    def compose(self, inner: "Series") -> "Series":
        """self(inner(s)); inner must have zero constant term."""
        if inner[0] != 0:
            raise PreconditionViolation(
                "Series composition requires an inner series with zero constant term."
            )
        n = min(self.order, inner.order)
        inner = inner.truncate(n)
        result = Series.constant(self._coefficients[n], n)
        for k in range(n - 1, -1, -1):
            result = result * inner + self._coefficients[k]
        return result


def series_arith(
    a: Series, b: Series, op: Literal["add", "sub", "mul", "div"]
) -> Series:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise PreconditionViolation(f"Unknown series operation {op!r}.")


def series_log(a: Series) -> Series:
    return a.log()


def series_exp(a: Series) -> Series:
    return a.exp()


def series_derivative(a: Series) -> Series:
    return a.derivative()


def series_compose(outer: Series, inner: Series) -> Series:
    return outer.compose(inner)


def series_power(a: Series, p: int) -> Series:
    return a.power(p)


def evaluate_polynomial(coefficients: Sequence[RationalLike], x: Series) -> Series:
    """Σ c_k x^k by Horner's rule, with coefficients in ascending order."""
    values = [to_fraction(c) for c in coefficients] or [_ZERO]
    result = Series.constant(values[-1], x.order)
    for c in reversed(values[:-1]):
        result = result * x + c
    return result
