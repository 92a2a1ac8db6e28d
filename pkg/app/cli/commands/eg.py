from app.cli.models.results import EgResult, EgRow, ResonanceModel
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
from app.eg.hierarchy import kappa
from app.services.engine_service import EngineService
from app.utils.rational_utils import format_rational


def cmd_eg(
    nu: Nu,
    genus: Genus = 0,
    max_order: MaxOrder = DEFAULT_ORDER,
    format: Format = DEFAULT_FORMAT,
    threads: Threads = None,
    force: Force = False,
    out: Out = None,
) -> None:
    """
    ê_g(s) 与 e_g(t) 的系数 | Coefficients of ê_g(s) and of e_g(t).

    The e_g(t) column is the sign flip (-1)^n of ê_g.
    """
    with engine_errors():
        config = RunConfig.build(
            command=CommandName.eg,
            nu=nu,
            genus=genus,
            max_order=max_order,
            format=format,
            threads=threads,
            force=force,
            output_path=out,
        )
        engine = EngineService(threads=config.threads, force=config.force)
        state = engine.eg_state(config.nu, config.max_order, config.genus)
        e_hat, e_of_t = state[config.genus], state.e_of_t(config.genus)
        result = EgResult(
            command=config.command.value,
            nu=config.nu,
            genus=config.genus,
            order=config.max_order,
            values=[
                EgRow(
                    n=n,
                    e_hat=format_rational(e_hat[n]),
                    e_of_t=format_rational(e_of_t[n]),
                    kappa=str(kappa(state, config.genus, n)),
                )
                for n in range(config.max_order + 1)
            ],
            resonances=[
                ResonanceModel(**v.to_payload())
                for v in state.resonances[config.genus].sources
            ],
        )
        emit(result, config)
