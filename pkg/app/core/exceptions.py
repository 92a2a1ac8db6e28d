from typing import Any, Optional


class EngineError(Exception):
    """
    基本引擎异常类，其他异常类都继承自此类 (Base engine exception class for all computation errors)

    The exit code is what the command line reports when the error reaches it.
    """

    def __init__(
        self, message: str = "An engine error occurred.", exit_code: int = 1
    ):
        super().__init__(message)
        self.message = message
        self.exit_code = exit_code

    def __str__(self) -> str:
        """
        返回格式化的错误信息 (Return formatted error message)

        :return: 错误信息字符串 | Error message string
        """
        return f"{self.message}" + (
            f" Exit Code: {self.exit_code}." if self.exit_code else ""
        )


class PreconditionViolation(EngineError):
    """当运算的前置条件不成立时抛出 (Raised when an operation's precondition does not hold)"""

    def __init__(
        self,
        message: str = "Operation precondition violated.",
        exit_code: int = 2,
    ):
        super().__init__(message, exit_code)


class TruncationError(EngineError):
    """当请求的系数超出截断阶数时抛出 (Raised when a coefficient beyond the truncation order is requested)"""

    def __init__(
        self,
        message: str = "Requested order exceeds the available truncation.",
        exit_code: int = 2,
    ):
        super().__init__(message, exit_code)


class ConsistencyFailure(EngineError):
    """
    当两条独立的精确计算路线结果不一致时抛出 (Raised when two independent exact routes disagree)

    Carries the first differing index together with both values and where they came from.
    """

    def __init__(
        self,
        message: str = "Exact consistency check failed.",
        exit_code: int = 2,
        index: Optional[Any] = None,
        expected: Optional[Any] = None,
        actual: Optional[Any] = None,
        provenance: Optional[tuple[str, str]] = None,
    ):
        super().__init__(message, exit_code)
        self.index = index
        self.expected = expected
        self.actual = actual
        self.provenance = provenance

    def __str__(self) -> str:
        detail = ""
        if self.index is not None:
            left, right = self.provenance or ("expected", "actual")
            detail = (
                f" First difference at {self.index}: "
                f"{left}={self.expected}, {right}={self.actual}."
            )
        return super().__str__() + detail


class UnresolvedConstantError(EngineError):
    """当共振常数既没有表值也无法由枚举得到时抛出 (Raised when a resonant constant has no source)"""

    def __init__(
        self,
        message: str = "Resonant integration constant could not be resolved.",
        exit_code: int = 2,
        genus: Optional[int] = None,
        nu: Optional[int] = None,
        order: Optional[int] = None,
    ):
        super().__init__(message, exit_code)
        self.genus = genus
        self.nu = nu
        self.order = order


class ReconstructionFailure(EngineError):
    """当闭式拟合失败时抛出，调用方回退到级数结果 (Raised when a closed-form fit fails; callers fall back to the series)"""

    def __init__(
        self,
        message: str = "No closed form found within the ansatz bounds.",
        exit_code: int = 2,
    ):
        super().__init__(message, exit_code)


class GenusRejection(EngineError):
    """当欧拉公式给出负数或半整数亏格时抛出 (Raised when Euler's relation yields a negative or half-integer genus)"""

    def __init__(
        self,
        message: str = "Euler relation produced an invalid genus.",
        exit_code: int = 2,
    ):
        super().__init__(message, exit_code)


class InvalidParameters(EngineError):
    """当运行参数无效时抛出 (Raised when the run configuration is invalid)"""

    def __init__(
        self,
        message: str = "Invalid run parameters.",
        exit_code: int = 3,
    ):
        super().__init__(message, exit_code)


class OracleBudgetExceeded(EngineError):
    """当枚举规模超过预算且未强制执行时抛出 (Raised when the matching count exceeds the budget without force)"""

    def __init__(
        self,
        message: str = "Oracle run refused: matching count above budget.",
        exit_code: int = 4,
        estimate: Optional[int] = None,
        budget: Optional[int] = None,
    ):
        super().__init__(message, exit_code)
        self.estimate = estimate
        self.budget = budget
