import csv
import io
import json
import subprocess
import sys

import pytest

from maxcurve import cli
from maxcurve.audit import AuditRecord, Config, audit_genus, spectrum_audit, verify_family
from maxcurve.counting import BUDGET_ENV
from maxcurve.curves import CurveFamily


def run(capsys, *argv):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_examples(capsys):
    code, out, _ = run(capsys, "verify", "--family", "hermitian:q=3", "--family", "as:q=7,m=4",
                       "--family", "fermat-half:q=5", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["result"] == "PASS"
    assert [(r["observed"], r["expected"]) for r in doc["rows"]] == [(28, 28), (176, 176), (36, 36)]


def test_verify_sweep_text(capsys):
    code, out, _ = run(capsys, "verify", "--sweep", "2..5", "--k", "2")
    assert code == 0
    assert "PASS" in out and "r32iii:q=3" in out


def test_verify_reports_mismatch(capsys, monkeypatch):
    real = cli.audit.verify_family

    def broken(f, k_max, cfg):
        rows = real(f, k_max, cfg)
        return [type(r)(r.family, r.k, r.affine, r.at_infinity, r.observed + 1, r.expected) for r in rows]

    monkeypatch.setattr(cli.audit, "verify_family", broken)
    code, out, err = run(capsys, "verify", "--family", "hermitian:q=2")
    assert code == 1
    assert "MISMATCH" in err and "FAIL" in out


def test_count_as_k2(capsys):
    code, out, _ = run(capsys, "count", "--family", "as:q=3,m=2", "--k", "2", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [(r["k"], r["observed"], r["expected"]) for r in rows] == [("1", "16", "16"), ("2", "64", "64")]


def test_count_plane_model_residual(capsys):
    code, out, _ = run(capsys, "count", "--family", "r32i:q=5", "--format", "json")
    row = json.loads(out)["rows"][0]
    assert code == 0 and row["plane_model"] + row["residual"] == row["observed"] == 66


def test_budget_exit_code(capsys, monkeypatch):
    monkeypatch.setenv(BUDGET_ENV, "1e6")
    code, _, err = run(capsys, "count", "--family", "fermat-half:q=13", "--k", "2")
    assert code == 2 and "budget" in err
    code, _, _ = run(capsys, "count", "--family", "hermitian:q=3", "--budget", "10")
    assert code == 2


def test_usage_errors(capsys):
    assert run(capsys, "count", "--family", "as:q=6,m=7")[0] == 2
    assert run(capsys, "verify")[0] == 2
    assert run(capsys, "bounds")[0] == 2
    assert run(capsys, "semigroup", "--gens", "4,6")[0] == 2
    assert run(capsys, "semigroup", "--family", "r32i:q=5")[0] == 2
    with pytest.raises(SystemExit) as err:
        cli.main(["bounds", "--sweep", "x..y"])
    assert err.value.code == 2
    capsys.readouterr()


def test_bounds_table(capsys):
    code, out, _ = run(capsys, "bounds", "--q", "7", "--r", "3", "--format", "csv")
    assert code == 0
    (row,) = csv.DictReader(io.StringIO(out))
    assert row == {"q": "7", "r": "3", "c0": "9", "eps": "1", "c1": "7", "eps1": "1",
                   "ihara": "21", "ft1": "9", "third": "7"}
    code, out, _ = run(capsys, "bounds", "--sweep", "2..64", "--format", "json")
    rows = json.loads(out)["rows"]
    assert {r["q"] for r in rows} == {q for q in range(2, 65) if q in
                                      (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32,
                                       37, 41, 43, 47, 49, 53, 59, 61, 64)}
    code, out, _ = run(capsys, "bounds", "--q", "8", "--r", "3", "--g", "11")
    assert "excluded" in out


def test_semigroup(capsys):
    code, out, _ = run(capsys, "semigroup", "--gens", "4,7", "--format", "json")
    assert code == 0 and json.loads(out)["rows"][0]["genus"] == 9
    code, out, _ = run(capsys, "semigroup", "--family", "as:q=11,m=3", "--q", "11", "--N", "5", "--format", "json")
    row = json.loads(out)["rows"][0]
    assert row["orders"] == [0, 1, 3, 6, 9, 12] and row["round_trip"]


def test_spectrum(capsys):
    code, out, _ = run(capsys, "spectrum", "--q", "4", "--format", "json")
    assert code == 0 and json.loads(out)["possible"] == [0, 1, 2, 6]
    code, out, _ = run(capsys, "spectrum", "--q", "8", "--all", "--format", "json")
    doc = json.loads(out)
    recs = [AuditRecord.from_dict(r) for r in doc["rows"]]
    assert len(recs) == 29
    assert next(r for r in recs if r.g == 11).status == "excluded"
    assert doc["summary"]["excluded"] == 16


def test_output_is_deterministic(capsys):
    outs = {run(capsys, "verify", "--sweep", "7..9", "--workers", str(w), "--format", "json")[1] for w in (1, 4)}
    assert len(outs) == 1


def test_audit_record_round_trip():
    for q in (2, 8, 13):
        for rec in spectrum_audit(q).records:
            assert AuditRecord.from_dict(json.loads(json.dumps(rec.to_dict()))) == rec
    with pytest.raises(ValueError):
        AuditRecord.from_dict({**audit_genus(8, 3).to_dict(), "schema_version": 99})


def test_spectrum_notables():
    recs = {r.g: r for r in spectrum_audit(8).records}
    assert recs[11].status == "excluded" and recs[11].conjecture[3]
    assert all(recs[g].notable for g in (10, 12, 28))
    assert recs[28].families == ("hermitian:q=8", "as:q=8,m=9")
    with pytest.raises(ValueError):
        spectrum_audit(10)


def test_config(monkeypatch):
    monkeypatch.setenv(BUDGET_ENV, "5e7")
    assert Config.from_env().budget == 5 * 10**7
    assert Config.from_env(budget=10**8, format="csv").format == "csv"
    for bad in [dict(budget=10), dict(format="xml"), dict(workers=0)]:
        with pytest.raises(ValueError):
            Config(**bad)
    with pytest.raises(ValueError):
        verify_family(CurveFamily("hermitian", 3), 0)


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "maxcurve", "bounds", "--q", "11", "--r", "4"],
                         capture_output=True, text=True, check=True)
    assert "13" in res.stdout and "15" in res.stdout
