"""
平衡测度的精确量 | Exact equilibrium-measure quantities.

Everything here is a rational function of (ν, x, z) with β² = 4xz; logarithms are
carried symbolically as ``LogLinear`` values so that identities between them can be
checked exactly.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Mapping, Optional, Union

from app.core.exceptions import InvalidParameters, PreconditionViolation
from app.utils.rational_utils import (
    RationalLike,
    binomial,
    c_nu,
    format_rational,
    prime_log_basis,
    to_fraction,
)


class LogLinear:
    """
    有理数加上素数对数的有理线性组合 | A rational plus a rational combination of prime logarithms.

    log of a positive rational is expanded over {log p}, so two values compare equal
    exactly when their rational parts and every log coefficient agree.
    """

    __slots__ = ("_rational", "_logs")

    def __init__(
        self,
        rational: RationalLike = 0,
        logs: Optional[Mapping[int, RationalLike]] = None,
    ) -> None:
        self._rational = to_fraction(rational)
        cleaned = {}
        for prime, coefficient in (logs or {}).items():
            value = to_fraction(coefficient)
            if value:
                cleaned[int(prime)] = value
        self._logs: dict[int, Fraction] = cleaned

    @classmethod
    def log_of(cls, value: RationalLike, coefficient: RationalLike = 1) -> "LogLinear":
        """coefficient·log(value) for a positive rational value."""
        k = to_fraction(coefficient)
        return cls(0, {p: k * e for p, e in prime_log_basis(value).items()})

    @property
    def rational(self) -> Fraction:
        return self._rational

    @property
    def logs(self) -> dict[int, Fraction]:
        return dict(self._logs)

    def log_coefficient(self, prime: int) -> Fraction:
        return self._logs.get(prime, Fraction(0))

    def __add__(self, other: Union["LogLinear", RationalLike]) -> "LogLinear":
        if not isinstance(other, LogLinear):
            return LogLinear(self._rational + to_fraction(other), self._logs)
        logs = dict(self._logs)
        for prime, value in other._logs.items():
            logs[prime] = logs.get(prime, Fraction(0)) + value
        return LogLinear(self._rational + other._rational, logs)

    __radd__ = __add__

    def __neg__(self) -> "LogLinear":
        return LogLinear(-self._rational, {p: -v for p, v in self._logs.items()})

    def __sub__(self, other: Union["LogLinear", RationalLike]) -> "LogLinear":
        if not isinstance(other, LogLinear):
            other = LogLinear(other)
        return self + (-other)

    def __mul__(self, k: RationalLike) -> "LogLinear":
        q = to_fraction(k)
        return LogLinear(self._rational * q, {p: v * q for p, v in self._logs.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LogLinear):
            return NotImplemented
        return self._rational == other._rational and self._logs == other._logs

    def __hash__(self) -> int:
        return hash((self._rational, tuple(sorted(self._logs.items()))))

    def __repr__(self) -> str:
        logs = " + ".join(
            f"{format_rational(v)}·log({p})" for p, v in sorted(self._logs.items())
        )
        return f"LogLinear({format_rational(self._rational)}{' + ' + logs if logs else ''})"

    def to_payload(self) -> dict:
        return {
            "rational": format_rational(self._rational),
            "log": {str(p): format_rational(v) for p, v in sorted(self._logs.items())},
        }


@dataclass(frozen=True)
class EquilibriumParams:
    """
    平衡测度参数 | Equilibrium-measure parameters.

    :param nu: 顶点价数的一半 ν | Half the vertex valence, ν
    :param z: 端点平方变量 z = β²/(4x) | Squared-endpoint variable z = β²/(4x)
    :param x: 尺度参数 | Scaling parameter
    """

    nu: int
    z: Fraction
    x: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        if self.nu < 2:
            raise InvalidParameters(f"nu must be >= 2, got {self.nu}.")
        if self.z <= 0:
            raise InvalidParameters(f"z must be positive, got {self.z}.")
        if self.x <= 0:
            raise InvalidParameters(f"x must be positive, got {self.x}.")

    @property
    def beta_sq(self) -> Fraction:
        return 4 * self.x * self.z

    @property
    def t(self) -> Fraction:
        return mass_constraint(self.nu, self.x, self.z)

    @property
    def is_physical(self) -> bool:
        """0 < z < ν/(ν-1), the branch through the Gaussian point z=1."""
        return 0 < self.z < Fraction(self.nu, self.nu - 1)


def v_coeff(nu_unused: int, i: int, beta_sq: RationalLike) -> Fraction:
    """
    √(λ²-β²)/λ 展开的泰勒系数 v_i | Taylor coefficient v_i of the endpoint expansion.

    v_0 = β²/2 and v_i = 4^{-i}·binom(2i-1, i-1)·β^{2i+2}/(i+1).
    """
    if i < 0:
        raise PreconditionViolation(f"v_i needs i >= 0, got {i}.")
    b = to_fraction(beta_sq)
    if i == 0:
        return b / 2
    return Fraction(binomial(2 * i - 1, i - 1), 4**i * (i + 1)) * b ** (i + 1)


def h_coeff(nu: int, j: int, t: RationalLike, beta_sq: RationalLike) -> Fraction:
    """h_j = 4ν(ν-j)·t·v_{ν-1-j}/β² for 0 <= j <= ν-1."""
    if not 0 <= j <= nu - 1:
        raise PreconditionViolation(f"h_j is defined for 0 <= j <= {nu - 1}, got {j}.")
    b = to_fraction(beta_sq)
    return 4 * nu * (nu - j) * to_fraction(t) * v_coeff(nu, nu - 1 - j, b) / b


def mass_constraint(nu: int, x: RationalLike, z: RationalLike) -> Fraction:
    """
    由质量约束 1 = z + c_ν x^{ν-1} t z^ν 解出 t。

    Solve the mass constraint 1 = z + c_ν x^{ν-1} t z^ν for t.
    """
    x, z = to_fraction(x), to_fraction(z)
    if z == 0:
        raise PreconditionViolation("The mass constraint is singular at z = 0.")
    return (1 - z) / (c_nu(nu) * x ** (nu - 1) * z**nu)


def lagrange_multiplier(
    nu: int, x: RationalLike, z: RationalLike
) -> tuple[Fraction, Fraction]:
    """
    -l = -((ν-1)/ν)(z-1) - 1 + log(β²/4)

    :return: (有理部分, 对数的自变量 xz) | (rational part, log argument xz)
    """
    x, z = to_fraction(x), to_fraction(z)
    if z <= 0:
        raise PreconditionViolation(f"-l needs z > 0, got {z}.")
    return -Fraction(nu - 1, nu) * (z - 1) - 1, x * z


def lagrange_multiplier_from_moments(
    nu: int, x: RationalLike, z: RationalLike
) -> tuple[Fraction, Fraction]:
    """
    通过端点矩计算 -l 的独立路线 | Independent route for -l through the endpoint moment.

    -l = 4(2ν-1)(2ν-3)!·t/(x·ν·(ν-2)!²)·β^{2ν}/4^ν - 1 + log(β²/4)
    """
    x, z = to_fraction(x), to_fraction(z)
    if z <= 0:
        raise PreconditionViolation(f"-l needs z > 0, got {z}.")
    t = mass_constraint(nu, x, z)
    beta_sq = 4 * x * z
    prefactor = Fraction(
        4 * (2 * nu - 1) * factorial(2 * nu - 3), nu * factorial(nu - 2) ** 2
    )
    moment = prefactor * t / x * beta_sq**nu / 4**nu
    return moment - 1, beta_sq / 4


def potential_moment(nu: int, x: RationalLike, z: RationalLike) -> Fraction:
    """(V,ψ) = -x[(ν-1)²z² - 2ν(ν-1)z - (ν+1)]/(2ν(ν+1))."""
    x, z = to_fraction(x), to_fraction(z)
    if z <= 0:
        raise PreconditionViolation(f"(V,psi) needs z > 0, got {z}.")
    bracket = (nu - 1) ** 2 * z**2 - 2 * nu * (nu - 1) * z - (nu + 1)
    return -x * bracket / (2 * nu * (nu + 1))


def potential_moment_from_coefficients(
    nu: int, x: RationalLike, z: RationalLike
) -> Fraction:
    """
    由 h_j 与 v_i 组装 (V,ψ) | (V,ψ) assembled from the h_j and v_i coefficients.

    (1/4x)Σ_j h_j v_{j+1} + v_1/(4x) + (t/2x)Σ_j h_j v_{j+ν} + t·v_ν/(2x)
    """
    x, z = to_fraction(x), to_fraction(z)
    t = mass_constraint(nu, x, z)
    beta_sq = 4 * x * z
    h = [h_coeff(nu, j, t, beta_sq) for j in range(nu)]
    v = [v_coeff(nu, i, beta_sq) for i in range(2 * nu)]
    quadratic = sum((h[j] * v[j + 1] for j in range(nu)), Fraction(0)) + v[1]
    higher = sum((h[j] * v[j + nu] for j in range(nu)), Fraction(0)) + v[nu]
    return quadratic / (4 * x) + t * higher / (2 * x)


def gaussian_energy(x: RationalLike, nu: int = 2) -> LogLinear:
    """
    高斯点 t=0 的能量 E_0 = -(V,ψ_0)/(2x) + (-l_0)/2 = -3/4 + ½log x。

    Energy at the Gaussian point t = 0; independent of ν since z = 1 there.
    """
    x = to_fraction(x)
    moment = potential_moment(nu, x, 1)
    rational, argument = lagrange_multiplier(nu, x, 1)
    return LogLinear(-moment / (2 * x) + rational / 2) + LogLinear.log_of(
        argument, Fraction(1, 2)
    )
