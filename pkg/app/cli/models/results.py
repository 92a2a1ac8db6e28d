from typing import Optional

from pydantic import BaseModel, Field

from app.core.config import settings

Rows = tuple[list[str], list[list[str]]]


class ResultModel(BaseModel):
    """所有命令结果的公共字段 | Fields shared by every command result."""

    schema_version: int = Field(
        default=settings.output.schema_version,
        serialization_alias="schema",
        description="JSON 结构版本 | JSON schema version",
    )
    command: str = Field(description="产生结果的命令 | Command that produced the result")

    def rows(self) -> Rows:
        raise NotImplementedError


class ResonanceModel(BaseModel):
    n: int = Field(description="共振阶 | Resonant order")
    value: str = Field(description="κ_g(n)")
    source: str = Field(description="table, oracle, user 或 normalization | table, oracle, user or normalization")


class KappaRow(BaseModel):
    n: int
    kappa: str = Field(description="κ_g(n) = n!·[s^n]ê_g")
    source: str = Field(description="recursion 或共振常数来源 | recursion, or the resonance source")


class KappaResult(ResultModel):
    nu: int
    genus: int
    values: list[KappaRow] = Field(default_factory=list)
    resonances: list[ResonanceModel] = Field(default_factory=list)

    def rows(self) -> Rows:
        return ["n", "kappa", "source"], [[str(r.n), r.kappa, r.source] for r in self.values]


class ZgRow(BaseModel):
    n: int
    coefficient: str = Field(description="[s^n]z_g")
    two_leg_count: str = Field(description="n!·[s^n]z_g")


class ZgResult(ResultModel):
    nu: int
    genus: int
    order: int
    values: list[ZgRow] = Field(default_factory=list)

    def rows(self) -> Rows:
        return ["n", "coefficient", "two_leg_count"], [
            [str(r.n), r.coefficient, r.two_leg_count] for r in self.values
        ]


class EgRow(BaseModel):
    n: int
    e_hat: str = Field(description="[s^n]ê_g, ê_g(s) = e_g(-s)")
    e_of_t: str = Field(description="[t^n]e_g")
    kappa: str = Field(description="n!·[s^n]ê_g")


class EgResult(ResultModel):
    nu: int
    genus: int
    order: int
    values: list[EgRow] = Field(default_factory=list)
    resonances: list[ResonanceModel] = Field(default_factory=list)

    def rows(self) -> Rows:
        return ["n", "e_hat", "e_of_t", "kappa"], [
            [str(r.n), r.e_hat, r.e_of_t, r.kappa] for r in self.values
        ]


class ClosedFormResult(ResultModel):
    target: str
    nu: int
    genus: int
    numerator: list[str] = Field(default_factory=list, description="z_0 的升幂系数 | Ascending coefficients in z_0")
    denominator: list[str] = Field(default_factory=list)
    c_log_nu_term: str = Field(default="0", description="log(ν-(ν-1)z_0) 的系数 | Coefficient of log(ν-(ν-1)z_0)")
    d_log_z0_term: str = Field(default="0", description="log z_0 的系数 | Coefficient of log z_0")
    fallback: bool = Field(default=False, description="拟合失败，只给出级数 | Fit failed, series only")
    series: Optional[list[str]] = Field(default=None)

    def rows(self) -> Rows:
        body = [
            ["numerator", " ".join(self.numerator)],
            ["denominator", " ".join(self.denominator)],
            ["c_log_nu_term", self.c_log_nu_term],
            ["d_log_z0_term", self.d_log_z0_term],
        ]
        if self.fallback:
            body = [["fallback", "series"], ["series", " ".join(self.series or [])]]
        return ["field", "value"], body


class CensusResult(ResultModel):
    nu: int
    vertices: int
    legs: int
    total: str
    disconnected: str
    by_genus: dict[str, str] = Field(default_factory=dict)

    def rows(self) -> Rows:
        body = [[g, c] for g, c in self.by_genus.items()]
        body += [["disconnected", self.disconnected], ["total", self.total]]
        return ["genus", "count"], body


class CheckRow(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class CrosscheckResult(ResultModel):
    nu: int
    genus: int
    order: int
    passed: bool
    checks: list[CheckRow] = Field(default_factory=list)

    def rows(self) -> Rows:
        return ["check", "status", "detail"], [
            [c.name, "ok" if c.passed else "FAIL", c.detail] for c in self.checks
        ]


class TwoTimeRow(BaseModel):
    i: int
    j: int
    coefficient: str = Field(description="[s_1^i s_2^j]z_0")


class TwoTimeResult(ResultModel):
    nu1: int
    nu2: int
    order: int
    values: list[TwoTimeRow] = Field(default_factory=list)

    def rows(self) -> Rows:
        return ["i", "j", "coefficient"], [
            [str(r.i), str(r.j), r.coefficient] for r in self.values
        ]
