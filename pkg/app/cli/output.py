import csv
import io
import json
from contextlib import contextmanager
from typing import Iterator

import typer

from app.cli.models.results import ResultModel
from app.cli.models.run_config import OutputFormat, RunConfig
from app.core.exceptions import EngineError
from app.utils.logging_utils import configure_logging

logger = configure_logging(name=__name__)


def render_table(headers: list[str], rows: list[list[str]]) -> str:
    """固定宽度的文本表格 | Fixed-width text table."""
    widths = [len(h) for h in headers]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def render_csv(headers: list[str], rows: list[list[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows(rows)
    return buffer.getvalue()


def render(result: ResultModel, fmt: OutputFormat) -> str:
    if fmt == OutputFormat.json:
        payload = result.model_dump(mode="json", by_alias=True)
        return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"
    headers, rows = result.rows()
    if fmt == OutputFormat.csv:
        return render_csv(headers, rows)
    return render_table(headers, rows)


def emit(result: ResultModel, config: RunConfig) -> None:
    """写到 --out 指定的文件，否则写到标准输出 | Write to the --out file, or to stdout."""
    text = render(result, config.format)
    if config.output_path is None:
        typer.echo(text, nl=False)
        return
    config.output_path.parent.mkdir(parents=True, exist_ok=True)
    config.output_path.write_text(text, encoding="utf-8")
    logger.info(f"Wrote {config.command.value} result to {config.output_path}.")


@contextmanager
def engine_errors() -> Iterator[None]:
    """把 EngineError 转换为对应的退出码 | Turn an EngineError into its exit code."""
    try:
        yield
    except EngineError as err:
        logger.error(str(err))
        typer.echo(f"error: {err}", err=True)
        raise typer.Exit(code=err.exit_code)
