from fractions import Fraction

from app.core.exceptions import PreconditionViolation
from app.equilibrium.measure import v_coeff
from app.utils.logging_utils import configure_logging
from app.utils.rational_utils import RationalLike, to_fraction

logger = configure_logging(name=__name__)

# 基函数: (λ²-β²)√(λ²-β²)/λ, √(λ²-β²)/λ, log(λ/β + √(λ²-β²)/β) | Basis functions of d_j
Basis = tuple[Fraction, Fraction, Fraction]


def d_j_by_recursion(j_max: int, lambda_sq: Fraction, beta_sq: Fraction) -> list[Basis]:
    """
    d_j = ∫_β^λ s^{2j}√(s²-β²)ds 在三个基函数上的系数，由分部积分递推得到。

    Coefficients of d_j over the three basis functions, from the integration-by-parts
    recursion started at d_0 = ½λ√(λ²-β²) - ½β²·log(...).
    """
    rows: list[Basis] = [(Fraction(0), lambda_sq / 2, -beta_sq / 2)]
    for j in range(1, j_max + 1):
        s1, s2, s3 = rows[-1]
        step = Fraction(2 * j - 1, 2 * (j + 1)) * beta_sq
        rows.append(
            (
                lambda_sq**j / (2 * (j + 1)) + step * s1,
                step * s2,
                step * s3,
            )
        )
    return rows


def d_j_closed_form(j: int, lambda_sq: Fraction, beta_sq: Fraction) -> Basis:
    """S_j^{(1)} = (v_j/2)Σ_i λ^{2i}/(v_i(i+1)), S_j^{(2)} = v_j λ²/β², S_j^{(3)} = -v_j."""
    if j == 0:
        return Fraction(0), lambda_sq / 2, -beta_sq / 2
    v = [v_coeff(0, i, beta_sq) for i in range(j + 1)]
    s1 = v[j] / 2 * sum(
        (lambda_sq**i / (v[i] * (i + 1)) for i in range(1, j + 1)), Fraction(0)
    )
    return s1, v[j] * lambda_sq / beta_sq, -v[j]


def appendix_S_check(
    nu_unused: int,
    j_max: int,
    lambda_sample: RationalLike,
    beta_sq_sample: RationalLike,
) -> bool:
    """
    检查 S_j^{(1,2,3)} 的闭式满足 d_j 的递推关系。

    Check that the closed forms of S_j^{(1,2,3)} satisfy the d_j recursion, matching
    each basis coefficient separately at the rational sample point.

    :param lambda_sample: λ 的取样值 | Sample value of λ
    :param beta_sq_sample: β² 的取样值 | Sample value of β²
    """
    if j_max < 1:
        raise PreconditionViolation(f"j_max must be >= 1, got {j_max}.")
    lambda_sq = to_fraction(lambda_sample) ** 2
    beta_sq = to_fraction(beta_sq_sample)
    if not lambda_sq > beta_sq > 0:
        raise PreconditionViolation(
            f"Sample needs lambda^2 > beta^2 > 0, got {lambda_sq} and {beta_sq}."
        )
    recursion = d_j_by_recursion(j_max, lambda_sq, beta_sq)
    for j in range(j_max + 1):
        closed = d_j_closed_form(j, lambda_sq, beta_sq)
        if closed != recursion[j]:
            logger.warning(
                f"d_{j} basis mismatch at lambda^2={lambda_sq}, beta^2={beta_sq}: "
                f"closed form {closed} != recursion {recursion[j]}"
            )
            return False
    return True
