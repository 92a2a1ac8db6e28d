import sys

import typer

from app.cli.router import app
from app.utils.logging_utils import configure_logging

# 配置日志记录器 | Configure the logger
logger = configure_logging(name=__name__)

# 用法错误的退出码 | Exit code for usage errors
USAGE_EXIT_CODE = 3

# typer 所用 click 的用法错误基类，typer 可能自带一份 click | Usage-error base of the click typer runs on, which may be typer's bundled copy
UsageError: type[Exception] = next(
    cls for cls in typer.BadParameter.__mro__ if cls.__name__ == "UsageError"
)


def main() -> None:
    """
    命令行入口，退出码：0 成功，2 一致性失败，3 参数无效，4 超出枚举预算。

    Console entry point. Exit codes: 0 ok, 2 consistency failure, 3 invalid
    parameters or usage, 4 oracle budget refused.
    """
    try:
        code = app(standalone_mode=False)
    except UsageError as exc:
        exc.show()
        sys.exit(USAGE_EXIT_CODE)
    except typer.Abort:
        logger.warning("Aborted.")
        sys.exit(1)
    sys.exit(code if isinstance(code, int) else 0)


if __name__ == "__main__":
    main()
