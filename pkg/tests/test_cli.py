"""Command-line surface: formats, exit codes, determinism."""

import json
import subprocess
import sys

import pytest

from qpoly import parse_param_poly, poly_bernoulli, poly_cauchy1
from qpoly.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_table_classical_row(capsys):
    code, out = run_cli(capsys, "table", "polyCauchy1", "--nmax", "2",
                        "--k", "1", "--at-q1", "--rho", "1", "--z", "0")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "family,n,k,value"
    assert lines[1:] == ["polyCauchy1,0,1,1",
                         "polyCauchy1,1,1,1/2",
                         "polyCauchy1,2,1,-1/6"]


def test_table_json_symbolic(capsys):
    code, out = run_cli(capsys, "table", "polyBernoulli", "--nmax", "1",
                        "--k", "1", "--format", "json")
    assert code == 0
    recs = [json.loads(line) for line in out.strip().splitlines()]
    assert [r["n"] for r in recs] == [0, 1]
    assert recs[0]["provenance_path"] == "closed_form"
    assert parse_param_poly(recs[1]["value"]) == poly_bernoulli(1, 1)


def test_value_round_trip(capsys):
    code, out = run_cli(capsys, "value", "--family", "polyCauchy1",
                        "--n", "3", "--k", "2")
    assert code == 0
    rec = json.loads(out)
    assert rec["vars"] == {"q": "symbolic", "rho": "symbolic",
                           "z": "symbolic"}
    assert parse_param_poly(rec["value"]) == poly_cauchy1(3, 2)


def test_value_latex_contains_fraction(capsys):
    code, out = run_cli(capsys, "value", "--family", "polyBernoulli",
                        "--n", "2", "--k", "1", "--format", "latex")
    assert code == 0
    assert "\\frac" in out


def test_value_numeric_point(capsys):
    code, out = run_cli(capsys, "value", "--family", "polyCauchy2",
                        "--n", "2", "--k", "1", "--q", "0.5",
                        "--rho", "2", "--z", "0.25")
    assert code == 0
    rec = json.loads(out)
    assert rec["vars"]["q"] == 0.5
    assert isinstance(rec["value"], float)


def test_verify_identities_scope(capsys):
    code, out = run_cli(capsys, "verify", "--scope", "identities",
                        "--nmax", "3", "--k", "0,1")
    assert code == 0
    recs = [json.loads(line) for line in out.strip().splitlines()]
    assert recs and all(r["status"] == "verified" for r in recs)


def test_verify_gf_scope_deterministic(capsys):
    args = ("verify", "--scope", "gf", "--nmax", "4", "--k=-1,1")
    code1, out1 = run_cli(capsys, *args)
    code2, out2 = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    assert all(json.loads(l)["status"] == "verified"
               for l in out1.strip().splitlines())


def test_verify_oracle_scope(capsys):
    code, out = run_cli(capsys, "verify", "--scope", "oracle",
                        "--nmax", "2", "--q", "0.5")
    assert code == 0
    recs = [json.loads(line) for line in out.strip().splitlines()]
    assert recs and all(r["status"] == "verified" for r in recs)
    assert all(r["abs_err"] < 1e-9 for r in recs)


def test_oracle_subcommand(capsys):
    code, out = run_cli(capsys, "oracle", "--family", "polyCauchy2",
                        "--n", "3", "--k", "2", "--q", "0.7",
                        "--rho", "-0.5", "--z", "0.33")
    assert code == 0
    lines = out.strip().splitlines()
    closed = json.loads(lines[0])
    oracle = json.loads(lines[1])
    verdict = json.loads(lines[2])
    assert closed["provenance_path"] == "closed_form"
    assert oracle["provenance_path"] == "jackson_oracle"
    assert verdict["status"] == "verified"
    assert verdict["abs_err"] < 1e-9


def test_config_file_round_trip(tmp_path, capsys):
    cfg = tmp_path / "qpoly.cfg"
    cfg.write_text("# sweep size\nseries_order = 5\nk_range = 0,1\n")
    code, out = run_cli(capsys, "verify", "--scope", "gf",
                        "--config", str(cfg))
    assert code == 0
    recs = [json.loads(line) for line in out.strip().splitlines()]
    assert {r["k"] for r in recs} == {0, 1}
    assert max(r["n"] for r in recs) == 5


def test_config_rejects_unknown_keys(tmp_path, capsys):
    cfg = tmp_path / "qpoly.cfg"
    cfg.write_text("series_order = 5\nnope = 1\n")
    code = main(["verify", "--scope", "gf", "--config", str(cfg)])
    assert code == 2


def test_bad_k_range_is_usage_error(capsys):
    code = main(["verify", "--scope", "gf", "--nmax", "2", "--k", "x,y"])
    assert code == 2


def test_oracle_nonconvergence_is_clean_failure(tmp_path, capsys):
    # q near 1 with a short truncation cannot meet the tolerance; the
    # CLI must report that as a failure line, not a traceback.
    cfg = tmp_path / "qpoly.cfg"
    cfg.write_text("oracle_truncation = 30\ntolerance = 1e-12\n")
    code = main(["oracle", "--family", "polyCauchy1", "--n", "4",
                 "--k", "2", "--q", "0.97", "--config", str(cfg)])
    err = capsys.readouterr().err
    assert code == 1
    assert err.startswith("error:")
    assert "tail bound" in err


def test_unknown_family_exits_via_argparse():
    with pytest.raises(SystemExit) as exc:
        main(["table", "nosuch", "--nmax", "1", "--k", "1"])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qpoly", "value", "--family",
         "polyBernoulli", "--n", "1", "--k", "1"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    rec = json.loads(proc.stdout)
    assert rec["family"] == "polyBernoulli"
