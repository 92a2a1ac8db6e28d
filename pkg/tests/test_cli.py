import json
import sys

import pytest
from typer.testing import CliRunner

from app.cli.router import app
from app.main import main

runner = CliRunner()


def invoke(*args: str):
    return runner.invoke(app, list(args))


def test_kappa_table_output():
    result = invoke("kappa", "--nu", "2", "--genus", "0", "--max-order", "3")
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0].split() == ["n", "kappa", "source"]
    assert [line.split()[1] for line in lines[2:]] == ["2", "36", "1728"]


def test_kappa_json():
    result = invoke("kappa", "--nu", "4", "--genus", "2", "--order", "1", "--format", "json")
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["schema"] == 1
    assert payload["command"] == "kappa"
    assert payload["values"] == [{"n": 1, "kappa": "21", "source": "table"}]
    assert payload["resonances"] == [{"n": 1, "value": "21", "source": "table"}]


def test_kappa_csv():
    result = invoke("kappa", "--nu", "2", "--genus", "1", "--max-order", "2", "--format", "csv")
    assert result.exit_code == 0
    assert result.stdout.splitlines() == ["n,kappa,source", "1,1,table", "2,60,recursion"]


def test_invalid_nu_exits_3():
    result = invoke("kappa", "--nu", "1")
    assert result.exit_code == 3


def test_invalid_legs_exits_3():
    result = invoke("oracle", "--nu", "2", "--vertices", "1", "--legs", "1")
    assert result.exit_code == 3


def test_oracle_budget_exits_4():
    result = invoke("oracle", "--nu", "2", "--vertices", "5")
    assert result.exit_code == 4


def test_oracle_json():
    result = invoke("oracle", "--nu", "2", "--vertices", "1", "--format", "json")
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["by_genus"] == {"0": "2", "1": "1"}
    assert payload["total"] == "3"


def test_zg_two_leg_counts():
    result = invoke("zg", "--nu", "2", "--genus", "1", "--max-order", "3", "--format", "json")
    assert result.exit_code == 0
    values = json.loads(result.stdout)["values"]
    assert [v["coefficient"] for v in values] == ["0", "96", "10368"]
    assert [v["two_leg_count"] for v in values] == ["0", "192", "62208"]


def test_eg_sign_flip():
    result = invoke("eg", "--nu", "2", "--genus", "1", "--max-order", "2", "--format", "json")
    assert result.exit_code == 0
    values = json.loads(result.stdout)["values"]
    pairs = [(v["e_hat"], v["e_of_t"]) for v in values]
    assert pairs == [("0", "0"), ("1", "-1"), ("30", "30")]


def test_closed_form_e1():
    result = invoke(
        "closed-form", "--target", "e", "--genus", "1", "--nu", "3", "--format", "json"
    )
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["c_log_nu_term"] == "-1/12"
    assert payload["d_log_z0_term"] == "0"
    assert payload["fallback"] is False


def test_closed_form_z_needs_positive_genus():
    result = invoke("closed-form", "--target", "z", "--genus", "0", "--nu", "2")
    assert result.exit_code == 3


def test_two_time_to_file(tmp_path):
    out = tmp_path / "nested" / "two_time.json"
    result = invoke(
        "two-time", "--nu", "2", "--nu2", "3", "--max-order", "2", "--format", "json",
        "--out", str(out),
    )
    assert result.exit_code == 0
    assert result.stdout == ""
    values = json.loads(out.read_text(encoding="utf-8"))["values"]
    assert {"i": 1, "j": 1, "coefficient": "3600"} in values


def test_crosscheck_command():
    result = invoke("crosscheck", "--nu", "2", "--genus", "1", "--max-order", "6")
    assert result.exit_code == 0
    assert "FAIL" not in result.stdout


@pytest.mark.parametrize(
    "argv",
    [
        ["toda-maps", "kappa", "--bogus"],
        ["toda-maps", "kappa"],
        ["toda-maps", "kappa", "--nu", "two"],
        ["toda-maps", "closed-form", "--nu", "2", "--target", "x"],
    ],
)
def test_main_maps_usage_errors_to_3(monkeypatch, argv):
    monkeypatch.setattr(sys, "argv", argv)
    with pytest.raises(SystemExit) as info:
        main()
    assert info.value.code == 3


def test_main_exit_code_from_engine_error(monkeypatch):
    monkeypatch.setattr(sys, "argv", ["toda-maps", "oracle", "--nu", "2", "--vertices", "5"])
    with pytest.raises(SystemExit) as info:
        main()
    assert info.value.code == 4
