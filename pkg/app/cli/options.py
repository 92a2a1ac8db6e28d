from pathlib import Path
from typing import Annotated, Optional

import typer

from app.cli.models.run_config import OutputFormat
from app.core.config import settings

Nu = Annotated[int, typer.Option("--nu", help="顶点价数的一半 ν | Half the vertex valence ν")]
Genus = Annotated[int, typer.Option("--genus", help="亏格 g | Genus g")]
MaxOrder = Annotated[
    int,
    typer.Option("--max-order", "--order", help="s 的最高阶数 | Highest order in s"),
]
Legs = Annotated[int, typer.Option("--legs", help="0 或 2 条腿 | 0 or 2 legs")]
Format = Annotated[
    OutputFormat, typer.Option("--format", help="table, json 或 csv | table, json or csv")
]
Threads = Annotated[
    Optional[int],
    typer.Option("--threads", help="枚举线程数，0 为全部 CPU | Oracle threads, 0 uses every CPU"),
]
Force = Annotated[
    bool, typer.Option("--force", help="允许超出预算的枚举 | Allow oracle runs above the budget")
]
Out = Annotated[
    Optional[Path], typer.Option("--out", help="结果写入的文件 | File the result is written to")
]

DEFAULT_ORDER = settings.hierarchy.default_order
DEFAULT_FORMAT = OutputFormat(settings.output.default_format)
