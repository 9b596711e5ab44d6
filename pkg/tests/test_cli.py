import json
import subprocess
import sys

import pytest

from turanjacobi.cli import CSV_HEADER, dump_report, main


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv, expected", [
    (["eval", "--n", "2", "--a", "0", "--b", "0", "--x", "2"], "11/2"),
    (["eval", "--n", "0", "--a", "1", "--b", "1", "--x", "7/3"], "1"),
    (["eval", "--n", "2", "--a", "0", "--b", "0", "--x", "2.0", "--float"], "5.5"),
    (["poly", "--n", "2", "--a", "0", "--b", "0"], "-1/2, 0, 3/2"),
    (["poly", "--n", "0", "--a", "2", "--b", "2"], "1"),
    (["poly", "--n", "1", "--a", "1", "--b", "0"], "1/2, 3/2"),
])
def test_scalar_commands(argv, expected, capsys):
    code, out, _ = run(argv, capsys)
    assert code == 0
    assert out.strip() == expected


@pytest.mark.parametrize("argv", [
    ["verify-identities", "--a", "x"],
    ["certify", "--n-max", "0"],
    ["eval", "--n", "2", "--a", "0", "--b", "0", "--x", "2.0"],
    ["eval", "--n", "2", "--a", "-1", "--b", "0", "--x", "2"],
    ["sweep", "--x-grid", "1:2"],
    ["sweep", "--x-grid", "1:1:1", "--output", "/nonexistent/dir/out.csv"],
    ["bogus"],
    [],
])
def test_usage_errors_exit_2(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 2
    assert err


def test_verify_identities_single_point(capsys):
    code, out, _ = run(["verify-identities", "--n-max", "1", "--a", "0", "--b", "0"], capsys)
    report = json.loads(out)
    assert code == 0
    assert report["summary"] == {"pass": 5, "fail": 0, "not_certified": 0}
    assert len(report["results"]) == 5
    assert {r["status"] for r in report["results"]} == {"pass"}


def test_verify_identities_text(capsys):
    code, out, _ = run(["verify-identities", "--n-max", "2", "--a", "1/2,2", "--b", "0", "--format", "text"],
                       capsys)
    assert code == 0
    assert out.strip().splitlines()[-1] == "pass=20 fail=0 not_certified=0"


def test_certify_record_n1(capsys):
    code, out, _ = run(["certify", "--n-max", "1", "--a", "0", "--b", "0"], capsys)
    assert code == 0
    report = json.loads(out)
    (res,) = report["results"]
    cert = res["details"]["certificate"]
    assert res["status"] == "pass"
    assert cert["multiplicity_at_base"] == 1
    assert cert["root_count_inside"] == 0
    assert cert["verdict"] == "certified-negative"
    assert cert["target"] == ["1/2", "0", "-1/2"]
    assert cert["base_point"] == "1"


def test_report_round_trip_and_summary(capsys):
    code, out, _ = run(["certify", "--n-max", "2", "--a", "0,5/2", "--b", "1/2"], capsys)
    assert code == 0
    report = json.loads(out)
    assert dump_report(report) == out
    assert report["version"]
    assert report["config"]["a"] == ["0", "5/2"]
    tally = {"pass": 0, "fail": 0, "not_certified": 0}
    for r in report["results"]:
        tally[r["status"].replace("-", "_")] += 1
    assert tally == report["summary"]


def test_exit_1_on_failed_certificate(monkeypatch, capsys):
    import turanjacobi.cli as cli
    from turanjacobi.exact import Poly
    from turanjacobi.turan import certify_negative_right_of

    monkeypatch.setattr(cli, "certify_theorem",
                        lambda n, fam: certify_negative_right_of(Poly([-3, 4, -1]), 1))
    code, out, _ = run(["certify", "--n-max", "1", "--a", "0", "--b", "0"], capsys)
    assert code == 1
    assert json.loads(out)["summary"]["not_certified"] == 1


def test_exit_1_on_failed_identity(monkeypatch, capsys):
    import turanjacobi.cli as cli
    from turanjacobi.exact import Poly
    from turanjacobi.identities import IdentityReport

    broken = dict(cli.IDENTITY_CHECKS)
    broken["lemma1"] = lambda n, fam: IdentityReport("lemma1", n, fam, Poly([1]))
    monkeypatch.setattr(cli, "IDENTITY_CHECKS", broken)
    code, out, _ = run(["verify-identities", "--n-max", "1", "--a", "0", "--b", "0"], capsys)
    assert code == 1
    report = json.loads(out)
    failed = [r for r in report["results"] if r["status"] == "fail"]
    assert failed[0]["details"]["residual"] == ["1"]


def test_sweep_csv(tmp_path):
    out = tmp_path / "sweep.csv"
    code = main(["sweep", "--n-max", "30", "--a", "1", "--b", "1", "--x-grid", "1:10:0.5",
                 "--output", str(out)])
    assert code == 0
    raw = out.read_bytes()
    assert b"\r\n" not in raw
    lines = raw.decode("utf-8").splitlines()
    assert lines[0] == ",".join(CSV_HEADER) == "n,a,b,x,delta,sign,est_rel_err"
    rows = [line.split(",") for line in lines[1:]]
    assert len(rows) == 30 * 19
    assert {r[5] for r in rows} <= {"0", "-1"}
    assert all(r[5] == "0" for r in rows if float(r[3]) == 1.0)
    # 17 significant digits
    assert rows[1][4] == format(float(rows[1][4]), ".17g")


def test_sweep_single_x(capsys):
    code, out, _ = run(["sweep", "--n-max", "4", "--a", "1/2", "--b", "2", "--x-grid", "1:1:1"], capsys)
    assert code == 0
    rows = [line.split(",") for line in out.splitlines()[1:]]
    assert len(rows) == 4
    assert all(r[5] == "0" for r in rows)


def test_sweep_below_one_exit_0(capsys):
    code, out, _ = run(["sweep", "--n-max", "3", "--a", "0", "--b", "0", "--x-grid=-2:0:0.5"], capsys)
    assert code == 0
    assert len(out.splitlines()) == 1 + 3 * 5


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "turanjacobi", "poly", "--n", "2", "--a", "0", "--b", "0"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "-1/2, 0, 3/2"
