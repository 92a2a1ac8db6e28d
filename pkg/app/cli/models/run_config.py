from enum import Enum
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from app.core.config import settings
from app.core.exceptions import InvalidParameters


class OutputFormat(str, Enum):
    table = "table"
    json = "json"
    csv = "csv"


class ClosedFormTarget(str, Enum):
    z = "z"
    e = "e"


class CommandName(str, Enum):
    kappa = "kappa"
    zg = "zg"
    eg = "eg"
    closed_form = "closed-form"
    oracle = "oracle"
    crosscheck = "crosscheck"
    two_time = "two-time"


class RunConfig(BaseModel):
    """
    一次命令行运行的参数，在任何计算之前校验。

    Parameters of one command-line run, validated before any computation.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    command: CommandName = Field(description="要运行的命令 | Command to run")
    nu: int = Field(ge=2, description="顶点价数的一半 ν | Half the vertex valence ν")
    nu2: Optional[int] = Field(
        default=None, ge=2, description="第二个时间的 ν | ν of the second time (two-time only)"
    )
    genus: int = Field(default=0, ge=0, description="亏格 g | Genus g")
    max_order: int = Field(
        default=settings.hierarchy.default_order,
        ge=1,
        description="s 的最高阶数 | Highest order in s",
    )
    vertices: Optional[int] = Field(
        default=None, ge=1, description="枚举的顶点数 n | Vertex count n (oracle only)"
    )
    legs: int = Field(default=0, description="0 或 2 条腿 | 0 or 2 legs")
    target: Optional[ClosedFormTarget] = Field(
        default=None, description="闭式重建的对象 | Closed-form target (closed-form only)"
    )
    format: OutputFormat = Field(
        default=OutputFormat(settings.output.default_format),
        description="输出格式 | Output format",
    )
    threads: Optional[int] = Field(
        default=None, ge=0, description="枚举线程数，0 为全部 CPU | Oracle threads, 0 uses every CPU"
    )
    force: bool = Field(default=False, description="允许超出预算的枚举 | Allow oracle runs above the budget")
    output_path: Optional[Path] = Field(
        default=None, description="结果写入的文件 | File the result is written to"
    )

    @model_validator(mode="after")
    def check_command(self) -> "RunConfig":
        if self.legs not in (0, 2):
            raise ValueError(f"legs must be 0 or 2, got {self.legs}")
        if self.command == CommandName.two_time and self.nu2 is None:
            raise ValueError("two-time needs --nu2")
        if self.command == CommandName.oracle and self.vertices is None:
            raise ValueError("oracle needs --vertices")
        if self.command == CommandName.closed_form:
            if self.target is None:
                raise ValueError("closed-form needs --target")
            if self.target == ClosedFormTarget.z and self.genus < 1:
                raise ValueError("closed-form --target z needs --genus >= 1")
        return self

    @classmethod
    def build(cls, **values) -> "RunConfig":
        """
        :raises InvalidParameters: 参数组合无效 | Invalid parameter combination
        """
        try:
            return cls(**values)
        except ValidationError as exc:
            problems = "; ".join(
                f"{'.'.join(str(p) for p in error['loc']) or 'config'}: {error['msg']}"
                for error in exc.errors()
            )
            raise InvalidParameters(f"Invalid run configuration: {problems}.") from exc
