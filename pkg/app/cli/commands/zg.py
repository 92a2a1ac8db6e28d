from app.cli.models.results import ZgResult, ZgRow
from app.cli.models.run_config import CommandName, RunConfig
from app.cli.options import DEFAULT_FORMAT, DEFAULT_ORDER, Format, Genus, MaxOrder, Nu, Out
from app.cli.output import emit, engine_errors
from app.services.engine_service import EngineService
from app.utils.rational_utils import format_rational


def cmd_zg(
    nu: Nu,
    genus: Genus = 1,
    max_order: MaxOrder = DEFAULT_ORDER,
    format: Format = DEFAULT_FORMAT,
    out: Out = None,
) -> None:
    """z_g 的泰勒系数与两腿地图计数 | Taylor coefficients of z_g and the two-legged map counts."""
    with engine_errors():
        config = RunConfig.build(
            command=CommandName.zg,
            nu=nu,
            genus=genus,
            max_order=max_order,
            format=format,
            output_path=out,
        )
        engine = EngineService()
        z_g = engine.hierarchy(config.nu, config.max_order, config.genus).z[config.genus]
        counts = engine.two_leg_counts(config.nu, config.genus, config.max_order)
        result = ZgResult(
            command=config.command.value,
            nu=config.nu,
            genus=config.genus,
            order=config.max_order,
            values=[
                ZgRow(n=n, coefficient=format_rational(z_g[n]), two_leg_count=str(count))
                for n, count in enumerate(counts, start=1)
            ],
        )
        emit(result, config)
