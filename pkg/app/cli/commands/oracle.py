from typing import Annotated

import typer

from app.cli.models.results import CensusResult
from app.cli.models.run_config import CommandName, RunConfig
from app.cli.options import DEFAULT_FORMAT, Force, Format, Legs, Nu, Out, Threads
from app.cli.output import emit, engine_errors
from app.services.engine_service import EngineService

Vertices = Annotated[int, typer.Option("--vertices", help="顶点数 n | Vertex count n")]


def cmd_oracle(
    nu: Nu,
    vertices: Vertices,
    legs: Legs = 0,
    format: Format = DEFAULT_FORMAT,
    threads: Threads = None,
    force: Force = False,
    out: Out = None,
) -> None:
    """
    穷举 (σ, τ) 对并按亏格计数 | Enumerate every (σ, τ) pair and count by genus.

    Refused with exit code 4 when (d-1)!! exceeds the matching budget and --force is absent.
    """
    with engine_errors():
        config = RunConfig.build(
            command=CommandName.oracle,
            nu=nu,
            vertices=vertices,
            legs=legs,
            format=format,
            threads=threads,
            force=force,
            output_path=out,
        )
        engine = EngineService(threads=config.threads, force=config.force)
        census = engine.census(config.nu, config.vertices, config.legs)
        result = CensusResult(command=config.command.value, **census.to_payload())
        emit(result, config)
