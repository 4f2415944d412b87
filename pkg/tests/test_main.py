"""Tests for the fiblucas-matrix command line."""

# standard library
import csv
import io
import json
import shutil
import tempfile
from pathlib import Path
from unittest import mock

# third party
import pytest
from icecream import ic  # noqa F401

# current project
from fiblucas_matrix.catalog import FIXTURES_DIR
from fiblucas_matrix.catalog import OEIS_COUNTERPARTS
from fiblucas_matrix.main import main


@pytest.fixture
def tmp_dir():
    """Create and provide temporary directory."""
    with tempfile.TemporaryDirectory() as temp_dir:
        yield (Path(temp_dir))


@pytest.fixture(autouse=True)
def isolated_cache(tmp_dir, monkeypatch):
    """Point the OEIS cache at an empty directory and forbid real network access."""
    monkeypatch.setenv("OEIS_CACHE_DIR", str(tmp_dir / "cache"))
    monkeypatch.setenv("OEIS_BASE_URL", "http://127.0.0.1:9")
    monkeypatch.delenv("NO_NETWORK", raising=False)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_seq(capsys):
    code, out, _ = run(capsys, "seq", "--kind", "fib", "--k", "2", "--from", "0", "--to", "5")
    assert (code, out) == (0, "0 1 2 5 12 29\n")
    code, out, _ = run(capsys, "seq", "--kind", "lucas", "--k", "1", "--from", "0", "--to", "4")
    assert (code, out) == (0, "2 1 3 4 7\n")
    code, out, _ = run(capsys, "seq", "--kind", "det", "--k", "2", "--from", "1", "--to", "3")
    assert (code, out) == (0, "6 348 23656\n")


def test_seq_json_and_csv(capsys):
    code, out, _ = run(
        capsys, "seq", "--kind", "fib", "--k", "1", "--from", "98", "--to", "99", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["terms"] == [
        {"index": 98, "value": "135301852344706746049"},
        {"index": 99, "value": "218922995834555169026"},
    ]

    code, out, _ = run(
        capsys, "seq", "--kind", "fib", "--k", "1", "--from", "0", "--to", "3", "--format", "csv"
    )
    assert code == 0
    assert list(csv.reader(io.StringIO(out))) == [
        ["index", "value"],
        ["0", "0"],
        ["1", "1"],
        ["2", "1"],
        ["3", "2"],
    ]


@pytest.mark.parametrize(
    "argv",
    [
        ["seq", "--kind", "fib", "--k", "0", "--to", "5"],
        ["seq", "--kind", "fib", "--k", "1", "--from", "5", "--to", "1"],
        ["seq", "--kind", "det", "--k", "1", "--from", "0", "--to", "2"],
        ["seq", "--kind", "pell", "--k", "1", "--to", "2"],
        ["invariants", "--k", "1", "--n", "2", "--what", "det,volume"],
        ["invariants", "--k", "1", "--n", "0"],
        ["verify", "--k-range", "6..1", "--n-range", "1..2"],
        ["verify", "--k-range", "1-6"],
        ["verify", "--k-range", "0..1", "--n-range", "1..1"],
        ["verify", "--k-range", "1..1", "--n-range", "0..2"],
        ["tables", "--which", "det", "--k-range", "0..2"],
        ["tables", "--which", "kfib"],
        ["oeis", "--check", "B000045", "--offline"],
        ["bogus"],
        [],
    ],
)
def test_usage_errors(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 2
    assert out == ""


def test_invariants(capsys):
    code, out, _ = run(capsys, "invariants", "--k", "1", "--n", "2", "--what", "det,trace,eigs")
    assert code == 0
    assert out == "det=30\ntrace=17\neigs=(2×1, 15×1)\n"

    code, out, _ = run(capsys, "invariants", "--k", "2", "--n", "2", "--what", "det")
    assert (code, out) == (0, "det=348\n")

    code, out, _ = run(capsys, "invariants", "--k", "1", "--n", "1", "--what", "inverse,eigs")
    assert (code, out) == (0, "inverse=[[1/3]]\neigs=(3×1)\n")

    code, out, _ = run(
        capsys, "invariants", "--k", "1", "--n", "2", "--what", "charpoly,power:2,radius,energy"
    )
    assert code == 0
    assert out == "charpoly=[30, -17, 1]\npower:2=[[21, 204], [17, 208]]\nradius=15\nenergy=17\n"


def test_invariants_json(capsys):
    code, out, _ = run(
        capsys,
        "invariants",
        "--k",
        "1",
        "--n",
        "2",
        "--what",
        "det,eigs,inverse,matrix",
        "--format",
        "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload == {
        "k": 1,
        "n": 2,
        "det": "30",
        "eigs": [{"value": "2", "multiplicity": 1}, {"value": "15", "multiplicity": 1}],
        "inverse": [["7/15", "-2/5"], ["-1/30", "1/10"]],
        "matrix": [["3", "12"], ["1", "14"]],
    }
    # parsing then re-emitting is stable
    assert json.loads(json.dumps(payload)) == payload


def test_invariants_markdown(capsys):
    code, out, _ = run(
        capsys, "invariants", "--k", "1", "--n", "2", "--what", "det,trace", "--format", "markdown"
    )
    assert code == 0
    lines = out.splitlines()
    assert "invariant" in lines[0] and "value" in lines[0]
    assert "det" in lines[2] and "30" in lines[2]
    assert "trace" in lines[3] and "17" in lines[3]


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--k-range", "1..1", "--n-range", "1..1")
    assert code == 0
    assert out.startswith("PASS: 13 checks, 0 failures")


def test_verify_full_grid(capsys):
    code, out, _ = run(
        capsys, "verify", "--k-range", "1..6", "--n-range", "1..8", "--power-max", "6"
    )
    assert code == 0
    assert out.startswith("PASS")


def test_verify_json_and_config(capsys, tmp_dir):
    config_file = tmp_dir / "config.ini"
    config_file.write_text("[verify]\nk_range = 2..3\nn_range = 1..2\npower_max = 2\n")
    code, out, _ = run(capsys, "-cf", str(config_file), "verify", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    assert payload["failures"] == 0
    assert {(record["k"], record["n"]) for record in payload["records"]} == {
        (2, 1),
        (2, 2),
        (3, 1),
        (3, 2),
    }


def test_verify_config_range_below_one(capsys, tmp_dir):
    config_file = tmp_dir / "config.ini"
    config_file.write_text("[verify]\nk_range = 0..2\nn_range = 1..2\n")
    code, out, err = run(capsys, "-cf", str(config_file), "verify")
    assert (code, out) == (2, "")
    assert "start at 1" in err


def test_verify_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setattr("fiblucas_matrix.verification.closed_trace", lambda p: -1)
    code, out, _ = run(capsys, "verify", "--k-range", "2..2", "--n-range", "1..1")
    assert code == 1
    assert out.startswith("FAIL")
    assert "first counterexample: k=2 n=1 energy" in out


def test_tables(capsys):
    code, out, _ = run(
        capsys, "tables", "--which", "det", "--k-range", "2..6", "--n-range", "1..3"
    )
    assert code == 0
    assert out.splitlines()[0] == "k=2: 6, 348, 23656"
    assert out.splitlines()[4] == "k=6: 38, 106780, 307953512"

    code, out, _ = run(
        capsys, "tables", "--which", "lambda2", "--k-range", "4..4", "--n-range", "1..2"
    )
    assert (code, out) == (0, "k=4: 18, 5490\n")


def test_tables_csv_and_markdown(capsys):
    code, out, _ = run(
        capsys,
        "tables",
        "--which",
        "trace",
        "--k-range",
        "4..5",
        "--n-range",
        "1..2",
        "--format",
        "csv",
    )
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["k", "n=1", "n=2"]
    assert rows[1] == ["4", "18", "5492"]

    argv = ["tables", "--which", "det", "--k-range", "2..3", "--n-range", "1..2"]
    code, out, _ = run(capsys, *argv, "--format", "markdown")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 4
    assert "n=2" in lines[0]
    assert "348" in lines[2]


@pytest.mark.parametrize(
    "accession, terms", [("A000129", "20"), ("A006497", "8"), ("A000045", "30")]
)
def test_oeis_offline_bundled(capsys, accession, terms):
    code, out, _ = run(capsys, "oeis", "--check", accession, "--terms", terms, "--offline")
    assert code == 0
    assert out == f"{accession}: match ({terms} terms)\n"


def test_oeis_offline_cold_cache(capsys):
    code, out, _ = run(capsys, "oeis", "--check", "A999999", "--offline")
    assert code == 3
    assert out == ""


def test_oeis_no_network_env(capsys, monkeypatch):
    monkeypatch.setenv("NO_NETWORK", "1")
    assert run(capsys, "oeis", "--check", "A999999")[0] == 3
    # bundled fixtures still work
    assert run(capsys, "oeis", "--check", "A000032", "--terms", "8")[0] == 0


def test_oeis_cached_sequence_without_counterpart(capsys, tmp_dir):
    cache_dir = tmp_dir / "cache"
    cache_dir.mkdir()
    (cache_dir / "A000142.bfile").write_text("0 1\n1 1\n2 2\n3 6\n")
    code, _, err = run(capsys, "oeis", "--check", "A000142", "--offline")
    assert code == 2
    assert "no local counterpart" in err


def test_oeis_without_counterpart_is_not_fetched(capsys):
    mock_fetch = mock.MagicMock()
    with mock.patch("fiblucas_matrix.main.fetch_oeis", mock_fetch):
        code, out, err = run(capsys, "oeis", "--check", "A000142")
    assert (code, out) == (2, "")
    assert "no local counterpart" in err
    mock_fetch.assert_not_called()


@pytest.mark.parametrize("accession", sorted(OEIS_COUNTERPARTS))
def test_oeis_corrupted_fixture(capsys, tmp_dir, accession):
    fixtures_dir = tmp_dir / "fixtures"
    shutil.copytree(FIXTURES_DIR, fixtures_dir)
    bfile = fixtures_dir / f"{accession}.bfile"
    lines = bfile.read_text().splitlines()
    # lines 0-1 are comments, so line 7 holds index 5
    index, value = lines[7].split()
    lines[7] = f"{index} {int(value) + 1}"
    bfile.write_text("\n".join(lines) + "\n")

    argv = ["oeis", "--check", accession, "--terms", "20", "--offline"]
    code, out, _ = run(capsys, *argv, "--fixtures_dir", str(fixtures_dir))
    assert code == 1
    assert out.startswith(f"{accession}: mismatch at index 5:")

    code, out, _ = run(capsys, *argv, "--format", "json", "--fixtures_dir", str(fixtures_dir))
    payload = json.loads(out)
    assert code == 1
    assert payload["matched"] is False
    assert payload["index"] == 5
    assert int(payload["expected"]) == int(payload["actual"]) + 1


def test_log_file(capsys, tmp_dir):
    log_file = tmp_dir / "logs" / "fiblucas.log"
    code, _, _ = run(
        capsys, "-lf", str(log_file), "verify", "--k-range", "1..1", "--n-range", "1..2"
    )
    assert code == 0
    assert "Verified 2 cells" in log_file.read_text()
