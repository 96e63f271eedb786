import json
import os
import subprocess
import sys

import pytest

from tabcorners.cli import EXIT_OK, EXIT_USAGE, SUITES, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_proc(*argv, env=None):
    full_env = dict(os.environ)
    full_env.pop("TABLEAUX_MAX_N", None)
    full_env.update(env or {})
    return subprocess.run(
        [sys.executable, "-m", "tabcorners", *argv], capture_output=True, text=True, env=full_env, check=False
    )


def test_generate_ascii(capsys):
    code, out, _ = run(capsys, "generate", "--family", "tlt", "--n", "2")
    assert code == EXIT_OK
    assert out.count("# tlt") == 2


def test_generate_json_round_trip(capsys):
    from tabcorners.tableaux import generate_all, tableau_from_json

    code, out, _ = run(capsys, "generate", "--family", "ptb", "--n", "2", "--format", "json")
    assert code == EXIT_OK
    records = json.loads(out)
    items = records["tableaux"] if isinstance(records, dict) else records
    assert [tableau_from_json(r) for r in items] == list(generate_all("ptb", 2))


def test_count_json(capsys):
    code, out, _ = run(capsys, "count", "--family", "tlt", "--n", "4", "--report", "json")
    assert code == EXIT_OK
    record = json.loads(out)
    assert record["schema"] == 1
    assert record["closed"] == record["enumerated"] == 32


def test_bound_refusal(capsys):
    code, _, err = run(capsys, "generate", "--family", "tlt", "--n", "40")
    assert code == EXIT_USAGE
    assert "limit" in err


def test_env_override_raises_the_bound():
    proc = run_proc("count", "--family", "pt", "--n", "10", env={"TABLEAUX_MAX_N": "3"})
    assert proc.returncode == EXIT_USAGE
    proc = run_proc("count", "--family", "pt", "--n", "2", env={"TABLEAUX_MAX_N": "3"})
    assert proc.returncode == EXIT_OK


def test_bad_arguments(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count", "--family", "nope", "--n", "3"])
    assert exc.value.code == 2
    capsys.readouterr()
    with pytest.raises(SystemExit):
        main(["generate", "--family", "tlt", "--n", "2", "--parallel", "0"])
    capsys.readouterr()


def test_verify_json_report(capsys):
    code, out, _ = run(capsys, "verify", "corners-a", "--max-n", "4", "--report", "json")
    assert code == EXIT_OK
    record = json.loads(out)
    assert record["schema"] == 1 and record["status"] == "pass"
    assert all(c["status"] == "pass" for c in record["checks"])
    assert "seconds" not in record or record["seconds"] is None


def test_verify_clamps_with_warning(capsys):
    code, out, _ = run(capsys, "verify", "run-counts", "--max-n", "30")
    assert code == EXIT_OK
    assert "clamped" in out


@pytest.mark.parametrize("suite", ["alpha", "gamma", "zeta", "nat-word", "corners-runs"])
def test_bijection_check(capsys, suite):
    code, out, _ = run(capsys, "bijection-check", "--name", suite, "--n", "3")
    assert code == EXIT_OK, out
    assert "result: PASS" in out


def test_poly(capsys):
    code, out, _ = run(capsys, "poly", "--name", "table_x", "--n", "2")
    assert code == EXIT_OK and out.strip() == "table_x(2) = 4*x + 2"
    code, out, _ = run(capsys, "poly", "--name", "T_ab", "--n", "3", "--format", "json")
    assert json.loads(out)["poly"]["var"] == ["a", "b"]


def test_trivariate_poly_reports_failure(capsys):
    code, out, _ = run(capsys, "verify", "noc-x", "--max-n", "3")
    assert code == EXIT_OK
    assert "result: PASS" in out
    assert "trivariate product form n=2: fail" in out


def test_export_to_file(tmp_path, capsys):
    target = tmp_path / "pt3.csv"
    code, out, _ = run(capsys, "export", "--family", "pt", "--n", "3", "--format", "csv", "--out", str(target))
    assert code == EXIT_OK and out == ""
    lines = target.read_text().splitlines()
    assert len(lines) == 1 + 6


def test_every_suite_is_registered():
    for name in ["corners-a", "corners-b", "occupied", "noc", "corners-runs", "noc-ab", "noc-x", "displacement"]:
        assert name in SUITES


@pytest.mark.parametrize(
    "argv",
    [
        ("export", "--family", "tltsym", "--n", "3", "--format", "json"),
        ("export", "--family", "at", "--n", "4", "--format", "csv"),
        ("verify", "corners-a", "--max-n", "6", "--report", "json"),
        ("verify", "noc-ab", "--max-n", "6", "--report", "json"),
    ],
)
def test_byte_identical_across_runs_and_workers(argv):
    first = run_proc(*argv)
    again = run_proc(*argv)
    parallel = run_proc(*argv, "--parallel", "2")
    assert first.returncode == 0, first.stderr
    assert first.stdout == again.stdout == parallel.stdout
