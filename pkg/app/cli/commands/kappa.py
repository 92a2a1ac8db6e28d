from app.cli.models.results import KappaResult, KappaRow, ResonanceModel
from app.cli.models.run_config import CommandName, RunConfig
from app.cli.options import (
    DEFAULT_FORMAT,
    DEFAULT_ORDER,
    Force,
    Format,
    Genus,
    MaxOrder,
    Nu,
    Out,
    Threads,
)
from app.cli.output import emit, engine_errors
from app.services.engine_service import EngineService


def cmd_kappa(
    nu: Nu,
    genus: Genus = 0,
    max_order: MaxOrder = DEFAULT_ORDER,
    format: Format = DEFAULT_FORMAT,
    threads: Threads = None,
    force: Force = False,
    out: Out = None,
) -> None:
    """
    打印 κ_g(n)，n = 1..max_order，并标注共振常数的来源。

    Print κ_g(n) for n = 1..max_order with the provenance of resonant values.
    """
    with engine_errors():
        config = RunConfig.build(
            command=CommandName.kappa,
            nu=nu,
            genus=genus,
            max_order=max_order,
            format=format,
            threads=threads,
            force=force,
            output_path=out,
        )
        engine = EngineService(threads=config.threads, force=config.force)
        entries = engine.kappa_table(config.nu, config.genus, config.max_order)
        resonance = engine.eg_state(config.nu, config.max_order, config.genus).resonances[
            config.genus
        ]
        result = KappaResult(
            command=config.command.value,
            nu=config.nu,
            genus=config.genus,
            values=[KappaRow(n=e.n, kappa=str(e.value), source=e.source) for e in entries],
            resonances=[ResonanceModel(**v.to_payload()) for v in resonance.sources],
        )
        emit(result, config)
