from pydantic import BaseModel
from pydantic_settings import BaseSettings, SettingsConfigDict


# 日志设置 | Log settings
class LogSettings(BaseModel):
    # 日志级别 | Log level
    """
    CRITICAL = 50
    FATAL = CRITICAL
    ERROR = 40
    WARNING = 30
    WARN = WARNING
    INFO = 20
    DEBUG = 10
    NOTSET = 0
    """
    level: int = 20


# 地图枚举器设置 | Map oracle settings
class OracleSettings(BaseModel):
    # 未加 --force 时允许枚举的最大配对数 (d-1)!! | Largest matching count (d-1)!! enumerated without --force
    matching_budget: int = 10**8
    # 线程数，设置为 0 时使用所有可用的CPU线程 | Worker threads, 0 uses every available CPU thread
    threads: int = 0
    # 拆分为独立子任务的配对层数 | Pairing levels split into independent sub-tasks
    split_depth: int = 2
    # 交叉校验自动启动的最大枚举规模 | Largest oracle run the crosscheck battery starts on its own
    crosscheck_budget: int = 10**6


# 层级求解设置 | Hierarchy solver settings
class HierarchySettings(BaseModel):
    # 默认截断阶数 N | Default truncation order N in s
    default_order: int = 8


# 闭式重建设置 | Closed-form reconstruction settings
class ReconstructionSettings(BaseModel):
    # 拟合后必须为零的额外系数个数 | Extra coefficients past the ansatz that must vanish for a fit to be accepted
    margin: int = 4


# 输出设置 | Output settings
class OutputSettings(BaseModel):
    # 默认输出格式: table, json 或 csv | Default output format: table, json or csv
    default_format: str = "table"
    # JSON 结构版本 | JSON schema version
    schema_version: int = 1


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_file=".env", env_ignore_empty=True, env_nested_delimiter="__"
    )

    log: LogSettings = LogSettings()

    oracle: OracleSettings = OracleSettings()

    hierarchy: HierarchySettings = HierarchySettings()

    reconstruction: ReconstructionSettings = ReconstructionSettings()

    output: OutputSettings = OutputSettings()


settings = Settings()
