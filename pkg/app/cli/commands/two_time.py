from typing import Annotated

import typer

from app.cli.models.results import TwoTimeResult, TwoTimeRow
from app.cli.models.run_config import CommandName, RunConfig
from app.cli.options import DEFAULT_FORMAT, DEFAULT_ORDER, Format, MaxOrder, Nu, Out
from app.cli.output import emit, engine_errors
from app.services.engine_service import EngineService
from app.utils.rational_utils import format_rational

Nu2 = Annotated[int, typer.Option("--nu2", help="第二个时间的 ν | ν of the second time")]


def cmd_two_time(
    nu: Nu,
    nu2: Nu2,
    max_order: MaxOrder = DEFAULT_ORDER,
    format: Format = DEFAULT_FORMAT,
    out: Out = None,
) -> None:
    """双时间 z_0(s_1, s_2) 按总次数截断的系数 | Coefficients of the two-time z_0(s_1, s_2) up to total degree."""
    with engine_errors():
        config = RunConfig.build(
            command=CommandName.two_time,
            nu=nu,
            nu2=nu2,
            max_order=max_order,
            format=format,
            output_path=out,
        )
        series = EngineService().two_time(config.nu, config.nu2, config.max_order)
        result = TwoTimeResult(
            command=config.command.value,
            nu1=config.nu,
            nu2=config.nu2,
            order=config.max_order,
            values=[
                TwoTimeRow(i=i, j=j, coefficient=format_rational(c))
                for (i, j), c in sorted(series.terms.items())
            ],
        )
        emit(result, config)
