import logging
import sys
import time
from contextlib import contextmanager
from typing import Iterator, Optional, TextIO

from app.core.config import settings

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def configure_logging(
    name: Optional[str] = None,
    log_level: int = settings.log.level,
    stream: TextIO = sys.stderr,
) -> logging.Logger:
    """
    日志写到标准错误，标准输出只留给命令结果 (表格、JSON、CSV)。

    Loggers write to stderr; stdout only carries command output (tables, JSON, CSV).

    :param name: 日志记录器的名称，None 为根记录器 | Logger name, None for the root logger
    :param log_level: 日志级别，默认取自 settings.log.level | Log level, settings.log.level by default
    :param stream: 处理器的输出流 | Stream the handler writes to
    :return: 配置好的日志记录器 | The configured logger
    """
    logger = logging.getLogger(name)
    logger.setLevel(log_level)

    # 防止重复添加处理器 | Prevent duplicate handlers
    if not logger.handlers:
        handler = logging.StreamHandler(stream)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(handler)

    return logger


@contextmanager
def log_elapsed(
    logger: logging.Logger, label: str, level: int = logging.DEBUG
) -> Iterator[None]:
    """记录一段计算的耗时 | Log how long a block of work took."""
    start = time.perf_counter()
    try:
        yield
    finally:
        logger.log(level, f"{label} took {time.perf_counter() - start:.3f}s.")
