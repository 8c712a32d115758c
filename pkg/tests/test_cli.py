import json
import subprocess
import sys

import pytest

from anzahl.cli import main, parse_q_list
from anzahl.report import RunReport


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["count", "--geometry", "symplectic", "--stat", "alpha", "--q", "2", "--dim", "4", "--i", "2", "--j", "2"], "15"),
        (["count", "--geometry", "hermitian", "--stat", "rho", "--q", "3", "--n", "2", "--j", "1", "--k", "1"], "5/6"),
        (["count", "--stat", "gamma", "--symbolic", "--n", "2", "--i", "0", "--j", "1", "--k", "1"], "q^2 - q - 1"),
        (["count", "--stat", "segre", "--q", "3", "--n", "3", "--j", "1", "--k", "1"], "12"),
        (["count", "--geometry", "symplectic", "--stat", "gamma-span", "--q", "2", "--dim", "4", "--j", "2"], "10"),
    ],
)
def test_count(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out == expected


def test_count_usage_error_names_precondition(capsys):
    code, out, err = run(capsys, "count", "--stat", "alpha", "--q", "2", "--n", "2", "--i", "2", "--j", "1")
    assert code == 2 and out == ""
    assert "0 <= i <= min{j, n-j}" in err


def test_unknown_bound_id_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bounds", "--which", "no-such-bound"])
    assert exc.value.code == 2


def test_q_list():
    assert parse_q_list("2..16") == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]
    assert parse_q_list("3,4") == [3, 4]


def test_bounds_psi_min(capsys):
    code, out, _ = run(capsys, "bounds", "--which", "psi-min", "--a", "1", "--q", "2", "--format", "json")
    report = json.loads(out)
    assert code == 0
    assert report["summary"] == {"checked": 2, "passed": 2, "failed": 0, "skipped": 0}
    assert all(item["is_equality"] == "true" for item in report["items"])


def test_bounds_rho_symplectic(capsys):
    code, out, _ = run(capsys, "bounds", "--which", "rho-symplectic", "--q", "2..16", "--max-jk", "5")
    assert code == 0 and " 0 failed" in out


def test_identity_hermitian(capsys):
    code, out, _ = run(capsys, "identity", "--geometry", "hermitian", "--max-j", "6", "--max-n", "12")
    assert code == 0 and " 0 failed" in out


def test_verify_budget_zero_skips(capsys):
    code, out, _ = run(capsys, "verify", "--geometry", "hermitian", "--q", "2", "--max-n", "3", "--budget", "0", "--format", "json")
    report = json.loads(out)
    assert code == 0
    assert report["summary"]["checked"] == 0 and report["summary"]["skipped"] > 0


def test_verify_small_budget_is_not_a_failure(capsys):
    code, out, _ = run(capsys, "verify", "--geometry", "hermitian", "--q", "2", "--max-n", "3", "--budget", "10", "--format", "json")
    report = json.loads(out)
    assert code == 0 and report["summary"]["failed"] == 0 and report["summary"]["skipped"] > 0


def test_verify_hermitian(capsys):
    code, out, _ = run(capsys, "verify", "--geometry", "hermitian", "--q", "2", "--max-n", "3")
    assert code == 0 and " 0 failed, 0 skipped" in out


def test_json_round_trip(capsys):
    code, out, _ = run(capsys, "verify", "--geometry", "symplectic", "--q", "2", "--max-dim", "4", "--format", "json")
    report = RunReport.from_json(out)
    assert report.to_json() == out
    for item in report.items:
        for key in ("oracle_value", "formula_value", "enumerated_objects"):
            assert isinstance(item[key], str)
    assert set(json.loads(out)) == {"command", "grid", "items", "summary", "elapsed_ms"}


def test_identity_json_round_trip(capsys):
    code, out, _ = run(capsys, "identity", "--geometry", "symplectic", "--max-j", "2", "--max-n", "4", "--format", "json")
    assert RunReport.from_json(out).to_json() == out


def test_csv_deterministic(capsys):
    argv = ["table", "--geometry", "hermitian", "--stat", "beta", "--q", "2", "--max-n", "4"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    header, *rows = first.splitlines()
    cols = header.split(",")
    assert cols[-4:] == ["i", "j", "k", "n"]
    keys = [tuple(int(x) for x in r.split(",")[-4:]) for r in rows]
    assert keys == sorted(keys, key=lambda t: (t[0], t[1], t[2], t[3]))


def test_failure_gives_nonzero_exit():
    report = RunReport("demo")
    report.items.append({"kind": "value", "params": {}, "status": "fail"})
    assert report.exit_code == 1


def test_help_documents_field_convention():
    out = subprocess.run([sys.executable, "-m", "anzahl", "--help"], capture_output=True, text=True).stdout
    assert "q^2 elements" in out
