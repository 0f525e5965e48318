"""
Tests for the command-line interface and its exit codes
"""

import json

import pytest

from fusion_nilpotency.config import COHOMOLOGY_CONFIG
from fusion_nilpotency.harness.cli import build_parser, main


@pytest.mark.unit
def test_parser_defaults():
    args = build_parser().parse_args(["theorem", "symmetric:3", "-p", "3"])
    assert args.battery == ["default"]
    assert args.n_max == COHOMOLOGY_CONFIG["n_max"]
    assert args.json is None


@pytest.mark.unit
@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["theorem", "symmetric:3"],
        ["theorem", "symmetric:3", "-p", "three"],
        ["frobnicate"],
        ["theorem", "symmetric:3", "-p", "3", "--battery", "default", "extra.module"],
        ["cohomology", "symmetric:3", "-p", "3", "--direct", "-m", "x.module"],
        ["info", "no-such-group", "-p", "2"],
        ["info", "symmetric:3", "-p", "4"],
    ],
)
def test_usage_errors_exit_64(argv, capsys):
    assert main(argv) == 64
    assert capsys.readouterr().err


@pytest.mark.unit
def test_seed_catalog(capsys):
    assert main(["--seed-catalog"]) == 0
    out = capsys.readouterr().out
    assert "symmetric:n" in out
    assert "special_linear_2_3" in out


@pytest.mark.unit
def test_info(capsys):
    assert main(["info", "alternating:4", "-p", "2"]) == 0
    out = capsys.readouterr().out
    assert "foc(F)       order 4" in out


@pytest.mark.unit
def test_info_json_to_stdout(capsys):
    assert main(["info", "dihedral:8", "-p", "2", "--json", "-"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["sylow_order"] == 8
    assert data["subgroup_count"] == 10
    assert data["hyp_order"] == 1
    # two Klein four subgroups, C_4 and D_8
    assert sum(row["centric"] for row in data["classes"]) == 4


@pytest.mark.unit
def test_nilpotency_command(capsys):
    assert main(["nilpotency", "special_linear_2_3", "-p", "3", "--json", "-"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["fusion_comparison"] is True
    assert data["frobenius"] is True


@pytest.mark.unit
def test_cohomology_and_stable(capsys):
    assert main(["cohomology", "cyclic:3", "-p", "3", "-n", "3", "--json", "-"]) == 0
    assert json.loads(capsys.readouterr().out)["dims"] == [1, 1, 1, 1]

    assert main(["stable", "symmetric:3", "-p", "3", "-n", "4", "--json", "-"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["kind"] == "stable"
    assert data["dims"] == [1, 0, 0, 1, 1]

    assert main(["cohomology", "symmetric:3", "-p", "3", "-n", "3", "--direct"]) == 0
    assert "H^n(G;F_3)" in capsys.readouterr().out


@pytest.mark.unit
def test_incompatible_module_exits_64(tmp_path, capsys):
    # regular representation of V_4; the A_4 automizer permutes its involutions
    path = tmp_path / "regular.module"
    path.write_text(
        "module p=2 dim=4 generators=2\n"
        "0 1 0 0\n1 0 0 0\n0 0 0 1\n0 0 1 0\n"
        "0 0 1 0\n0 0 0 1\n1 0 0 0\n0 1 0 0\n",
        encoding="utf-8",
    )
    assert main(["stable", "alternating:4", "-p", "2", "-n", "1", "-m", str(path)]) == 64
    err = capsys.readouterr().err
    assert "not fusion compatible" in err
    assert "witness" in err


@pytest.mark.unit
def test_budget_exhaustion_exits_2(capsys):
    argv = ["cohomology", "symmetric:3", "-p", "3", "-n", "3", "--budget-mb", "0"]
    assert main(argv) == 2
    assert "budget" in capsys.readouterr().err


@pytest.mark.unit
def test_theorem_exit_codes(capsys):
    assert main(["theorem", "symmetric:3", "-p", "3", "-n", "4"]) == 0
    out = capsys.readouterr().out
    assert "violated (m=1, n=3)" in out
    assert "status: ok" in out

    assert main(["theorem", "symmetric:3", "-p", "3", "-n", "2"]) == 2


@pytest.mark.unit
def test_theorem_json_is_byte_identical(tmp_path):
    first = tmp_path / "first.json"
    second = tmp_path / "second.json"
    for path in (first, second):
        argv = ["theorem", "alternating:4", "-p", "2", "-n", "2", "--json", str(path)]
        assert main(argv) == 0
    assert first.read_bytes() == second.read_bytes()


@pytest.mark.unit
def test_survey_command(capsys):
    assert main(["survey", "--instance", "S3-p2", "V4-p2"]) == 0
    out = capsys.readouterr().out
    assert "passed: True" in out
    assert main(["survey", "--instance", "missing"]) == 64
