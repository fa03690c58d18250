"""Command-line interface: expression grammar, subcommands, cache, exit codes."""

import json
import os

import pytest

from ehall import cli
from ehall.coeffs import QT_ONE, QT_Q, QT_T, QTScalar
from ehall.symfun import SymFun, e_, h_, mul, p_, q_d, s_


# -- expression grammar ------------------------------------------------


def test_parse_generators():
    assert cli.parse_expr("e[2]") == e_(2)
    assert cli.parse_expr("h[3]") == h_(3)
    assert cli.parse_expr("p[2]") == p_(2)
    assert cli.parse_expr("s[21]") == s_((2, 1))
    assert cli.parse_expr("s[2,1]") == s_((2, 1))
    assert cli.parse_expr("q[2]") == q_d(2)
    assert cli.parse_expr("s[2,1,1]") == s_((2, 1, 1))


def test_parse_arithmetic():
    assert cli.parse_expr("e[1]*e[1]") == mul(e_(1), e_(1))
    assert cli.parse_expr("e[2]+h[2]") == e_(2) + h_(2)
    assert cli.parse_expr("2*p[1]") == p_(1).scale(QTScalar(2))
    assert cli.parse_expr("(q+t)*s[1]") == s_((1,)).scale(QT_Q + QT_T)
    assert cli.parse_expr("e[1]^3") == mul(mul(e_(1), e_(1)), e_(1))
    assert cli.parse_expr("-e[2]") == -e_(2)
    assert cli.parse_expr("e[2] - e[2]") == SymFun.zero("e")


def test_parse_scalar_powers():
    assert cli.parse_expr("(-qt)^-2") == (-(QT_Q * QT_T)) ** -2
    v = cli.parse_expr("(-qt)^-1*s[21]")
    assert v == s_((2, 1)).scale((-(QT_Q * QT_T)).inverse())
    assert cli.parse_expr("q^2t") == QT_Q**2 * QT_T
    assert cli.parse_expr("p[1]/2") == p_(1).scale(QTScalar(1) * QTScalar(2).inverse())


def test_parse_errors():
    for bad in ["e[", "x[2]", "e[2]^-1", "2 +", "s[102]", "s[0]", "e[2] e["]:
        with pytest.raises((cli.ParseError, ValueError)):
            cli.parse_expr(bad)


# -- subcommands --------------------------------------------------------


def _run(capsys, *argv):
    rc = cli.main(list(argv))
    out = capsys.readouterr().out
    return rc, out


def test_expand_json(capsys):
    rc, out = _run(capsys, "expand", "e[2]", "--basis", "s")
    assert rc == 0
    data = json.loads(out)
    assert data["basis"] == "s"
    assert data["terms"] == [{"mu": [1, 1], "c": {"num": [["1", 0, 0]], "den": [["1", 0, 0]]}}]


def test_expand_latex(capsys):
    rc, out = _run(capsys, "expand", "e[2]+e[11]", "--basis", "e", "--latex")
    assert rc == 0 and "e_{2}" in out and "e_{11}" in out


def test_expand_scalar(capsys):
    rc, out = _run(capsys, "expand", "q*t+1")
    assert rc == 0 and "scalar" in json.loads(out)


def test_theta_subcommand(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("EHALL_CACHE_DIR", str(tmp_path / "cache"))
    rc, out = _run(capsys, "theta", "--seed", "e[1]", "--ab", "1,1", "--basis", "e")
    assert rc == 0
    assert SymFun.from_json(json.loads(out)) == e_(1)


def test_nabla_subcommand(capsys):
    rc, out = _run(capsys, "nabla", "e[2]", "--no-cache", "--basis", "s")
    assert rc == 0
    f = SymFun.from_json(json.loads(out))
    assert f == SymFun("s", {(2,): QT_ONE, (1, 1): QT_Q + QT_T})


def test_dyck_subcommand(capsys):
    rc, out = _run(capsys, "dyck", "5", "4")
    data = json.loads(out)
    assert rc == 0 and data["count"] == 14 and "0123" in data["words"]
    rc, out = _run(capsys, "dyck", "2", "2", "--returns", "2", "--enumerator", "--parking")
    data = json.loads(out)
    assert rc == 0 and data["words"] == ["00"]
    assert data["parking"]


def test_ct_subcommand(capsys):
    rc, out = _run(capsys, "ct", "3", "2", "--basis", "e")
    assert rc == 0
    f = SymFun.from_json(json.loads(out))
    assert f == SymFun("e", {(2,): QT_Q, (1, 1): QT_ONE})


def test_check_subcommand(capsys, tmp_path):
    report = tmp_path / "report.json"
    rc, _ = _run(capsys, "check", "dim-eps", "--grid", "2", "--report", str(report))
    assert rc == 0
    data = json.loads(report.read_text())
    assert data and all(v["status"] == "holds" for v in data)


def test_usage_errors(capsys):
    assert cli.main(["expand", "e[("]) == 1
    assert cli.main(["bogus"]) == 1
    assert cli.main(["check", "no-such-check"]) == 1


# -- cache ---------------------------------------------------------------


def test_cache_round_trip(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("EHALL_CACHE_DIR", str(tmp_path))
    args = ["theta", "--seed", "e[2]", "--ab", "1,1", "--basis", "s"]
    rc, out1 = _run(capsys, *args)
    assert rc == 0
    files = [f for f in os.listdir(tmp_path) if f.endswith(".json")]
    assert len(files) == 1
    rc, out2 = _run(capsys, *args)
    assert out1 == out2
    rc, out = _run(capsys, "cache", "stats")
    assert json.loads(out)["entries"] == 1
    rc, out = _run(capsys, "cache", "clear")
    assert json.loads(out)["cleared"] == 1


def test_cache_corrupt_entry_recomputed(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("EHALL_CACHE_DIR", str(tmp_path))
    args = ["theta", "--seed", "e[1]", "--ab", "1,2", "--basis", "s"]
    rc, out1 = _run(capsys, *args)
    (path,) = [tmp_path / f for f in os.listdir(tmp_path) if f.endswith(".json")]
    path.write_text("{ not json")
    rc, out2 = _run(capsys, *args)
    assert rc == 0 and out1 == out2


def test_cache_key_includes_calibration():
    k1 = cli.cache_key("theta", {"x": 1})
    k2 = cli.cache_key("theta", {"x": 2})
    assert k1 != k2 and len(k1) == 64
