import csv
import io
import json

import pytest

from eigencount import SuiteResult
from eigencount.cli import main


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_bound_json_report(capsys, spec_path):
    code, out, err = _run(capsys, "bound", str(spec_path), "--p", "1", "--s", "1.5")
    assert code == 0
    report = json.loads(out)
    assert report["command"] == "bound"
    assert report["input_digest"].startswith("sha256:")
    results = report["results"]
    kinds = [row["kind"] for row in results["bounds"]]
    assert kinds == ["disk_phi", "disk_simple", "region"]
    for row in results["bounds"]:
        assert results["oracle_count"] <= row["bound"]
        assert row["certified"] is True
    assert results["oracle_count"] == 1
    assert "wall_time_s=" in err


def test_bound_report_is_byte_identical_on_rerun(capsys, spec_path):
    _, first, _ = _run(capsys, "bound", str(spec_path), "--p", "1", "--s", "1.5")
    _, second, _ = _run(capsys, "bound", str(spec_path), "--p", "1", "--s", "1.5")
    assert first == second
    assert json.dumps(json.loads(first), sort_keys=True, indent=2) + "\n" == first


def test_bound_csv_format(capsys, spec_path):
    code, out, _ = _run(capsys, "bound", str(spec_path), "--p", "1",
                        "--s", "1.5", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][:4] == ["kind", "p", "target_re", "target_im"]
    assert len(rows) == 4  # header + three bound kinds
    assert {row[0] for row in rows[1:]} == {"disk_phi", "disk_simple", "region"}


def test_bound_out_file(tmp_path, capsys, spec_path):
    target = tmp_path / "report.json"
    code, out, _ = _run(capsys, "bound", str(spec_path), "--p", "1",
                        "--s", "1.5", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["command"] == "bound"


def test_bound_point_target(capsys, spec_path):
    code, out, _ = _run(capsys, "bound", str(spec_path), "--p", "1",
                        "--point", "2,0")
    assert code == 0
    results = json.loads(out)["results"]
    assert results["oracle_count"] == 1  # simple eigenvalue at 2
    assert [row["kind"] for row in results["bounds"]] == ["region"]

    code, out, _ = _run(capsys, "bound", str(spec_path), "--p", "1",
                        "--point", "5,0")
    assert json.loads(out)["results"]["oracle_count"] == 0


def test_bound_empirical_mode_adds_uncertified_row(capsys, spec_path):
    code, out, _ = _run(capsys, "bound", str(spec_path), "--p", "1",
                        "--s", "1.5", "--mode", "empirical")
    assert code == 0
    rows = json.loads(out)["results"]["bounds"]
    assert len(rows) == 4
    extra = rows[-1]
    certified_region = rows[2]
    assert extra["certified"] is False
    assert extra["bound"] <= certified_region["bound"] * (1 + 1e-9)


def test_bound_fixed_rank(capsys, spec_path):
    code, out, _ = _run(capsys, "bound", str(spec_path), "--p", "1",
                        "--s", "1.5", "--n", "1")
    assert code == 0
    assert all(row["n_rank"] == 1
               for row in json.loads(out)["results"]["bounds"])


def test_oracle_count_curve_and_moment(capsys, spec_path):
    code, out, _ = _run(capsys, "oracle", str(spec_path), "--s", "1.2", "--q", "2")
    assert code == 0
    results = json.loads(out)["results"]
    assert results["count"] == {"s": 1.2, "value": 1}
    assert results["moment"]["value"] == pytest.approx(1.0)

    code, out, _ = _run(capsys, "oracle", str(spec_path), "--curve",
                        "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["kind", "x", "value"]
    assert all(row[0] == "curve" for row in rows[1:])
    # last breakpoint is the top eigenvalue modulus, count drops to zero
    assert float(rows[-1][1]) == pytest.approx(2.0)
    assert rows[-1][2] == "0"


def test_oracle_inadmissible_moment_exponent_still_computes(capsys, spec_path):
    # q below the bound threshold is fine for the oracle sum
    code, out, _ = _run(capsys, "oracle", str(spec_path), "--q", "1.1")
    assert code == 0
    assert json.loads(out)["results"]["moment"]["q"] == 1.1


def test_gamma_output(capsys):
    code, out, _ = _run(capsys, "gamma", "--p", "1")
    assert code == 0
    lines = dict(line.split(" = ") for line in out.strip().splitlines())
    assert float(lines["gamma_p"]) == 1.0
    assert lines["provenance"] == "envelope_certified"


def test_verify_table_and_exit(capsys):
    code, out, _ = _run(capsys, "verify", "--suite", "lambert")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split() == ["suite", "checks", "failures", "status"]
    assert lines[1].split()[0] == "lambert"
    assert lines[-1].split()[0] == "total"
    assert lines[-1].split()[-1] == "pass"


def test_verify_failure_exits_four(capsys, monkeypatch):
    fake = SuiteResult("fake", checks=2, failure_count=1,
                       failures=[{"index": 7, "reason": "made up"}])
    monkeypatch.setattr("eigencount.cli.run_suites", lambda *a, **k: [fake])
    code, out, _ = _run(capsys, "verify", "--suite", "all")
    assert code == 4
    assert "FAIL" in out
    assert "counterexample" in out
    assert '"index": 7' in out


def test_example_shift_fixed_coefficients(tmp_path, capsys):
    coeffs = tmp_path / "b.json"
    coeffs.write_text("[[2.0, 0.0]]")
    code, out, _ = _run(capsys, "example-shift", "--coeffs", str(coeffs),
                        "--dims", "8,16")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][:2] == ["dim", "excess_sum"]
    assert [row[0] for row in rows[1:]] == ["8", "16"]
    for row in rows[1:]:
        assert float(row[1]) == pytest.approx(1.0, abs=1e-9)
        assert row[2] == "1"   # one eigenvalue above radius 1
        assert row[-1] == "0"  # none above radius 2


def test_example_shift_lacunary_family(capsys):
    code, out, _ = _run(capsys, "example-shift", "--family", "lacunary",
                        "--dims", "8,16,32")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    sums = [float(row[1]) for row in rows[1:]]
    assert sums == sorted(sums)


def test_exit_code_usage_errors(capsys, spec_path, tmp_path):
    assert _run(capsys, "bound", str(spec_path), "--p", "1")[0] == 1
    assert _run(capsys, "bound", str(spec_path), "--p", "1", "--s", "1",
                "--point", "2,0")[0] == 1
    assert _run(capsys, "bound", str(spec_path), "--p", "1",
                "--point", "nope")[0] == 1
    assert _run(capsys, "verify", "--suite", "bogus")[0] == 1
    assert _run(capsys, "oracle", str(spec_path))[0] == 1
    assert _run(capsys, "example-shift", "--family", "lacunary",
                "--dims", "8,8")[0] == 1
    assert _run(capsys)[0] == 1


def test_exit_code_missing_file(capsys, tmp_path):
    missing = tmp_path / "absent.json"
    code, _, err = _run(capsys, "bound", str(missing), "--p", "1", "--s", "2")
    assert code == 1
    assert "error:" in err


def test_exit_code_inadmissible(capsys, spec_path):
    code, _, err = _run(capsys, "bound", str(spec_path), "--p", "1", "--s", "0.5")
    assert code == 2
    assert "error:" in err
    assert _run(capsys, "gamma", "--p", "-2")[0] == 2


def test_exit_code_malformed_spec(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"dim": 3}')
    assert _run(capsys, "bound", str(bad), "--p", "1", "--s", "2")[0] == 3
    notjson = tmp_path / "notjson.json"
    notjson.write_text("{{{{")
    assert _run(capsys, "bound", str(notjson), "--p", "1", "--s", "2")[0] == 3


def test_exit_code_malformed_coefficients(capsys, tmp_path):
    bad = tmp_path / "coeffs.json"
    bad.write_text('{"not": "a list"}')
    assert _run(capsys, "example-shift", "--coeffs", str(bad))[0] == 3
    bad.write_text('[true]')
    assert _run(capsys, "example-shift", "--coeffs", str(bad))[0] == 3
