from typing import Annotated

import typer

from app.cli.models.results import ClosedFormResult
from app.cli.models.run_config import ClosedFormTarget, CommandName, RunConfig
from app.cli.options import DEFAULT_FORMAT, Force, Format, Genus, Nu, Out, Threads
from app.cli.output import emit, engine_errors
from app.eg.reconstruct import eg_required_order
from app.services.engine_service import EngineService
from app.toda.reconstruct import required_order
from app.utils.rational_utils import format_rational

Target = Annotated[
    ClosedFormTarget, typer.Option("--target", help="z 为 z_g，e 为 ê_g | z for z_g, e for ê_g")
]


def cmd_closed_form(
    nu: Nu,
    target: Target,
    genus: Genus = 1,
    format: Format = DEFAULT_FORMAT,
    threads: Threads = None,
    force: Force = False,
    out: Out = None,
) -> None:
    """
    z_g 或 ê_g 作为 z_0 的闭式 | z_g or ê_g in closed form as a function of z_0.

    When the fit fails the series is printed instead and ``fallback`` is set.
    """
    with engine_errors():
        config = RunConfig.build(
            command=CommandName.closed_form,
            nu=nu,
            genus=genus,
            target=target,
            format=format,
            threads=threads,
            force=force,
            output_path=out,
        )
        engine = EngineService(threads=config.threads, force=config.force)
        result = ClosedFormResult(
            command=config.command.value,
            target=config.target.value,
            nu=config.nu,
            genus=config.genus,
        )
        if config.target == ClosedFormTarget.z:
            closed = engine.zg_closed_form(config.nu, config.genus)
            rational = closed
            if closed is None:
                order = required_order(config.nu, config.genus)
                series = engine.hierarchy(config.nu, order, config.genus).z[config.genus]
        else:
            closed = engine.eg_closed_form(config.nu, config.genus)
            rational = closed.rational if closed is not None else None
            if closed is not None:
                result.c_log_nu_term = format_rational(closed.c_log_nu_term)
                result.d_log_z0_term = format_rational(closed.d_log_z0_term)
            else:
                order = eg_required_order(config.nu, config.genus)
                series = engine.eg_state(config.nu, order, config.genus)[config.genus]
        if rational is None:
            result.fallback = True
            result.series = [format_rational(c) for c in series.coefficients]
        else:
            payload = rational.to_payload()
            result.numerator = payload["numerator"]
            result.denominator = payload["denominator"]
        emit(result, config)
