"""Unit tests for the command-line interface."""

import json

import pytest
from click.testing import CliRunner

from cfenum.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def _run(runner, args, **kw):
    return runner.invoke(main, args, catch_exceptions=False, **kw)


def test_version(runner):
    res = _run(runner, ["--version"])
    assert res.exit_code == 0 and "0.1.0" in res.output


def test_verify_json_report(runner):
    res = _run(runner, ["verify", "perm.euler.factorial", "--n", "5"])
    assert res.exit_code == 0
    report = json.loads(res.output)
    assert report["ok"] is True
    assert report["theorem_id"] == "perm.euler.factorial"
    assert report["n_max"] == 5
    assert report["seed"] == 0
    assert "artifact_version" in report and "order" in report


def test_verify_byte_stable(runner):
    a = _run(runner, ["verify", "perm.catalan.classic", "--n", "5"]).output
    b = _run(runner, ["verify", "perm.catalan.classic", "--n", "5"]).output
    # wall_time varies between runs; everything else must be identical
    da, db = json.loads(a), json.loads(b)
    da["wall_time"] = db["wall_time"] = None
    assert json.dumps(da, sort_keys=True) == json.dumps(db, sort_keys=True)


def test_verify_unknown_id(runner):
    res = _run(runner, ["verify", "no.such.id"])
    assert res.exit_code == 2
    assert "error:" in res.output


def test_verify_text_format(runner):
    res = _run(runner, ["verify", "perm.euler.factorial", "--n", "4",
                        "--format", "text"])
    assert res.exit_code == 0
    assert any(line.startswith("ok\t") for line in res.output.splitlines())


def test_verify_witness_seeded(runner):
    res = _run(runner, ["verify", "perm.invcyc.nonpoly", "--seed", "3"])
    assert res.exit_code == 0
    assert json.loads(res.output)["seed"] == 3


def test_conjecture(runner):
    res = _run(runner, ["conjecture", "--n", "6"])
    assert res.exit_code == 0
    report = json.loads(res.output)
    assert report["ok"] is True and report["kind"] == "ConjectureForward"


def test_expand(runner):
    res = _run(runner, ["expand", "--theorem", "perm.euler.factorial",
                        "--order", "5"])
    assert res.exit_code == 0
    report = json.loads(res.output)
    assert report["coefficients"] == ["1", "1", "2", "6", "24", "120"]
    assert report["order"] == 5

    res = _run(runner, ["expand", "--theorem", "perm.euler.factorial",
                        "--order", "-1"])
    assert res.exit_code == 2


def test_enumerate(runner):
    res = _run(runner, ["enumerate", "--object", "perm", "--n", "3",
                        "--weight", "four-var-arec"])
    assert res.exit_code == 0
    report = json.loads(res.output)
    assert report["polynomial"] == "1*u*x*y + 1*x*y^2 + 3*x^2*y + 1*x^3"

    res = _run(runner, ["enumerate", "--object", "match", "--n", "2",
                        "--zeta"])
    assert json.loads(res.output)["polynomial"] == "2*zeta + 1*zeta^2"

    res = _run(runner, ["enumerate", "--object", "perm", "--n", "2",
                        "--weight", "bogus"])
    assert res.exit_code == 2


def test_enumerate_with_substitution(runner, tmp_path):
    sub = tmp_path / "sub.json"
    sub.write_text(json.dumps({"x": "1", "y": "1*q", "u": "1", "v": "1"}))
    res = _run(runner, ["enumerate", "--object", "perm", "--n", "3",
                        "--weight", "four-var-arec",
                        "--subst", str(sub)])
    assert res.exit_code == 0
    # Eulerian distribution at n=3: 1 + 4q + q^2
    assert json.loads(res.output)["polynomial"] == "1 + 4*q + 1*q^2"


def test_substitution_errors(runner, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("[1,2]")
    res = _run(runner, ["enumerate", "--object", "perm", "--n", "2",
                        "--subst", str(bad)])
    assert res.exit_code == 2
    bad.write_text(json.dumps({"x": "1 +* 2"}))
    res = _run(runner, ["enumerate", "--object", "perm", "--n", "2",
                        "--subst", str(bad)])
    assert res.exit_code == 2


def test_stats_perm(runner):
    res = _run(runner, ["stats", "--object", "perm", "--oneline", "2,1"])
    assert res.exit_code == 0
    report = json.loads(res.output)
    assert report["stats"]["inv"] == 1 and report["stats"]["cyc"] == 1

    res = _run(runner, ["stats", "--object", "perm", "--oneline", "1,1"])
    assert res.exit_code == 2


def test_stats_setpart_and_match(runner):
    res = _run(runner, ["stats", "--object", "setpart",
                        "--blocks", "1,3,6;2,4,5"])
    assert res.exit_code == 0
    assert json.loads(res.output)["stats"]["iota"] == 4

    res = _run(runner, ["stats", "--object", "match", "--pairs", "1-3,2-4"])
    assert res.exit_code == 0
    assert json.loads(res.output)["stats"]["cr"] == 1

    res = _run(runner, ["stats", "--object", "match"])
    assert res.exit_code == 2


def test_encode_decode_round_trip(runner, tmp_path):
    res = _run(runner, ["encode", "--bijection", "fz",
                        "--oneline", "5,6,1,4,2,7,3"])
    assert res.exit_code == 0
    report = json.loads(res.output)
    assert report["bijection"] == "FZ"
    path_file = tmp_path / "path.json"
    path_file.write_text(json.dumps(report["path"]))

    res = _run(runner, ["decode", "--bijection", "FZ",
                        "--path", str(path_file)])
    assert res.exit_code == 0
    assert json.loads(res.output)["oneline"] == [5, 6, 1, 4, 2, 7, 3]


def test_decode_from_stdin(runner):
    res = _run(runner, ["encode", "--bijection", "kz", "--blocks", "1,2"])
    path_json = json.dumps(json.loads(res.output)["path"])
    res = _run(runner, ["decode", "--bijection", "KZ", "--path", "-"],
               input=path_json)
    assert res.exit_code == 0
    assert json.loads(res.output)["blocks"] == [[1, 2]]


def test_encode_errors(runner):
    res = _run(runner, ["encode", "--bijection", "nope", "--oneline", "1"])
    assert res.exit_code == 2
    res = _run(runner, ["encode", "--bijection", "fz", "--blocks", "1,2"])
    assert res.exit_code == 2


def test_workers_option_is_deterministic(runner):
    base = _run(runner, ["verify", "sp.bell.classic", "--n", "5"]).output
    alt = _run(runner, ["verify", "sp.bell.classic", "--n", "5",
                        "--workers", "4"]).output
    da, db = json.loads(base), json.loads(alt)
    da["wall_time"] = db["wall_time"] = None
    assert da == db
