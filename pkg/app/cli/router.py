import typer

from app.cli.commands import closed_form, crosscheck, eg, kappa, oracle, two_time, zg

app = typer.Typer(
    name="toda-maps",
    help="亏格展开系数、地图计数与交叉校验 | Genus-expansion coefficients, map counts and their cross-checks.",
    add_completion=False,
    no_args_is_help=True,
)

# 系数表 | Coefficient tables
app.command("kappa")(kappa.cmd_kappa)
app.command("zg")(zg.cmd_zg)
app.command("eg")(eg.cmd_eg)
app.command("two-time")(two_time.cmd_two_time)

# 闭式 | Closed forms
app.command("closed-form")(closed_form.cmd_closed_form)

# 地图枚举与校验 | Map census and checks
app.command("oracle")(oracle.cmd_oracle)
app.command("crosscheck")(crosscheck.cmd_crosscheck)
