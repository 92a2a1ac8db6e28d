import typer

from app.cli.models.results import CheckRow, CrosscheckResult
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
from app.processors.crosscheck_processor import CrosscheckProcessor
from app.services.engine_service import EngineService


def cmd_crosscheck(
    nu: Nu,
    genus: Genus = 2,
    max_order: MaxOrder = DEFAULT_ORDER,
    format: Format = DEFAULT_FORMAT,
    threads: Threads = None,
    force: Force = False,
    out: Out = None,
) -> None:
    """
    运行全部精确交叉校验；任何一项失败时退出码为 2。

    Run the full invariant battery; exits 2 when any exact comparison fails, after
    printing the first failure with both values and their provenance.
    """
    with engine_errors():
        config = RunConfig.build(
            command=CommandName.crosscheck,
            nu=nu,
            genus=genus,
            max_order=max_order,
            format=format,
            threads=threads,
            force=force,
            output_path=out,
        )
        processor = CrosscheckProcessor(
            EngineService(threads=config.threads, force=config.force)
        )
        report = processor.run(config.nu, config.genus, config.max_order)
        result = CrosscheckResult(
            command=config.command.value,
            nu=config.nu,
            genus=config.genus,
            order=config.max_order,
            passed=report.passed,
            checks=[
                CheckRow(name=o.name, passed=o.passed, detail=o.detail) for o in report.outcomes
            ],
        )
        emit(result, config)
    failure = report.first_failure
    if failure is not None:
        typer.echo(f"first failure: {failure.name}: {failure.detail}", err=True)
        raise typer.Exit(code=failure.error.exit_code if failure.error else 2)
