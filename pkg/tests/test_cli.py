import json

import pytest

from yhklr import cli, yokonuma
from yhklr.scalars import Weight, make_field_cfg


def run_json(capsys, *argv):
    code = cli.run(list(argv) + ["--json"])
    out = capsys.readouterr().out
    return code, out


@pytest.mark.parametrize("command", ["build", "verify", "iso", "decompose"])
def test_commands_pass(capsys, command):
    code, out = run_json(capsys, command, "--p", "5", "--d", "2", "--q", "2", "--n", "2")
    assert code == 0
    data = json.loads(out)
    assert set(data) >= {"field_cfg", "context", "dims", "suites"}
    assert all(s["status"] == "pass" for s in data["suites"])


def test_json_is_deterministic(capsys):
    argv = ["verify", "--p", "5", "--n", "2", "--seed", "3", "--samples", "20"]
    _, a = run_json(capsys, *argv)
    _, b = run_json(capsys, *argv)
    assert a == b


@pytest.mark.parametrize("argv", [
    ["build", "--p", "4"],
    ["build", "--p", "5", "--q", "5"],
    ["build", "--p", "5", "--d", "3"],
    ["build", "--weight", "0:-1"],
    ["verify", "--degenerate", "--q", "2"],
    ["diagram", "--p", "5", "--q", "2"],
    ["straighten", "--e", "2", "--n", "2", "--expr", "(* psi1 psi3)"],
    ["straighten", "--e", "2", "--n", "2", "--expr", "(* psi1"],
])
def test_config_errors_exit_2(capsys, argv):
    assert cli.run(argv) == 2
    assert "configuration error" in capsys.readouterr().err


def test_diagram(capsys):
    code, out = run_json(capsys, "diagram", "--p", "13", "--q", "3", "--n", "2")
    assert code == 0
    assert {s["status"] for s in json.loads(out)["suites"]} == {"pass"}
    code, out = run_json(capsys, "diagram", "--p", "13", "--q", "3", "--n", "2", "--plain-f")
    assert code == 0
    assert {s["status"] for s in json.loads(out)["suites"]} == {"not comparable"}
    cli.run(["diagram", "--p", "13", "--q", "3", "--n", "2", "--plain-f"])
    assert capsys.readouterr().out.rstrip().endswith("NOT COMPARABLE")


def test_straighten(capsys):
    code, out = run_json(capsys, "straighten", "--e", "2", "--d", "2", "--n", "3",
                         "--expr", "(* psi2 psi1 psi2 e:0.1,1.1,0.1)")
    assert code == 0
    data = json.loads(out)
    assert data["degrees"] == [2]
    assert len(data["terms"]) == 4


def test_failing_check_exits_1(capsys, monkeypatch):
    def broken(Y, **kw):
        from yhklr.report import Report
        rep = Report()
        rep.suite("deliberately broken").check(False, "x")
        return rep
    monkeypatch.setattr(yokonuma, "check_presentation", broken)
    assert cli.run(["verify", "--n", "2", "--samples", "5"]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_export_round_trip(tmp_path, capsys):
    path = tmp_path / "alg.json"
    assert cli.run(["export", "--p", "7", "--d", "2", "--q", "2", "--n", "2",
                    "--output", str(path), "--check"]) == 0
    capsys.readouterr()
    data = json.loads(path.read_text())
    cfg = make_field_cfg(7, 2, 2)
    Y = yokonuma.build_context(cfg, 2, Weight.parse("0:1", cfg.e), False)
    mats, gens = yokonuma.regular_rep_from_export(data)
    assert all((mats[i] == Y.basis_matrix(i)).all() for i in range(Y.dim))
    assert all((gens[k] == M).all() for k, M in Y.gens.items())
    assert len(data["basis"]) == Y.dim


@pytest.mark.parametrize("argv", [
    "verify --p 5 --d 2 --q 2 --n 3 --weight 0:1",
    "iso --p 5 --d 2 --q 2 --n 2 --weight 0:1",
    "diagram --p 13 --d 2 --q 3 --n 2 --weight 0:1 --symmetric-f",
])
def test_documented_invocations(capsys, argv):
    assert cli.run(argv.split()) == 0
    assert capsys.readouterr().out.rstrip().endswith("PASS")
