import csv
import io
import json
import math

import pytest

from kskit.cli import main


def run_cli(argv, capsys, monkeypatch=None, env=None):
    if env and monkeypatch:
        for k, v in env.items():
            monkeypatch.setenv(k, v)
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    def test_ks_json(self, capsys):
        code, out, err = run_cli(
            ["eval", "ks", "--alpha", "1", "--m", "1", "--l", "0", "--x", "2"],
            capsys,
        )
        assert code == 0
        rec = json.loads(out)
        assert rec["value"] == pytest.approx(math.exp(2.0), rel=1e-12)
        assert err.startswith("# config:")
        assert "verb=eval" in err

    def test_ml(self, capsys):
        code, out, _ = run_cli(
            ["eval", "ml", "--alpha", "1", "--beta", "1", "--x", "-1"], capsys
        )
        assert code == 0
        assert json.loads(out)["value"] == pytest.approx(math.exp(-1.0), rel=1e-12)

    def test_leroy_csv(self, capsys):
        code, out, _ = run_cli(
            ["eval", "leroy", "--alpha", "1", "--x", "0.5", "--format", "csv"],
            capsys,
        )
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["target", "x", "value"]
        assert float(rows[1][2]) == pytest.approx(math.exp(0.5), rel=1e-12)

    def test_missing_flag_is_domain_error(self, capsys):
        code, _, err = run_cli(
            ["eval", "ks", "--alpha", "0.5", "--x", "1"], capsys
        )
        assert code == 1
        assert "domain error" in err

    def test_invalid_parameter_is_domain_error(self, capsys):
        code, _, err = run_cli(
            ["eval", "ks", "--alpha", "-1", "--m", "1", "--l", "0", "--x", "1"],
            capsys,
        )
        assert code == 1

    def test_accuracy_error_exit_code(self, capsys):
        # deep cancellation past the precision cap
        code, _, err = run_cli(
            ["eval", "ks", "--alpha", "0.2", "--m", "1", "--l", "0", "--x", "-50"],
            capsys,
        )
        assert code == 2
        assert "accuracy error" in err


class TestTable:
    def test_header_and_monotone_x(self, capsys):
        code, out, _ = run_cli(
            [
                "table", "ks", "--alpha", "1", "--m", "1", "--l", "0",
                "--x-from", "0", "--x-to", "1", "--points", "5",
                "--format", "csv",
            ],
            capsys,
        )
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["x", "value"]
        assert len(rows) == 6
        xs = [float(r[0]) for r in rows[1:]]
        assert xs == sorted(xs)

    def test_neg_flag(self, capsys):
        code, out, _ = run_cli(
            [
                "table", "ks", "--alpha", "1", "--m", "1", "--l", "0",
                "--x-from", "1", "--x-to", "1", "--points", "1",
                "--neg", "--format", "csv",
            ],
            capsys,
        )
        rows = list(csv.reader(io.StringIO(out)))
        assert float(rows[1][1]) == pytest.approx(math.exp(-1.0), rel=1e-12)

    def test_csv_floats_round_trip(self, capsys):
        code, out, _ = run_cli(
            [
                "table", "leroy", "--alpha", "0.5",
                "--x-from", "-2", "--x-to", "2", "--points", "9",
                "--format", "csv",
            ],
            capsys,
        )
        for row in list(csv.reader(io.StringIO(out)))[1:]:
            for cell in row:
                assert repr(float(cell)) == cell


class TestSample:
    ARGS = [
        "sample", "weibull", "--alpha", "0.6", "--lambda", "1.0",
        "--rho", "2.0", "--n", "50", "--seed", "9", "--format", "csv",
    ]

    def test_count_and_positivity(self, capsys):
        code, out, _ = run_cli(self.ARGS, capsys)
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert len(rows) == 51
        assert all(float(r[0]) > 0 for r in rows[1:])

    def test_seed_byte_identity(self, capsys):
        _, a, _ = run_cli(self.ARGS, capsys)
        _, b, _ = run_cli(self.ARGS, capsys)
        assert a == b
        _, c, _ = run_cli(self.ARGS[:-4] + ["10", "--format", "csv"], capsys)
        assert a != c

    def test_stable(self, capsys):
        code, out, _ = run_cli(
            ["sample", "stable", "--alpha", "0.5", "--n", "10", "--format", "csv"],
            capsys,
        )
        assert code == 0
        assert len(out.strip().split("\n")) == 11

    def test_bad_strategy_rejected(self, capsys):
        code, _, err = run_cli(
            [
                "sample", "frechet", "--alpha", "0.6", "--lambda", "1",
                "--rho", "2", "--n", "5", "--strategy", "probabilistic",
            ],
            capsys,
        )
        assert code == 1  # probabilistic Frechet needs rho = alpha


class TestVerifyCommand:
    def test_fast_suite_json(self, capsys, tmp_path):
        out_file = tmp_path / "reports.json"
        code, out, err = run_cli(
            [
                "verify", "--suite", "bernstein", "--n", "2000",
                "--seed", "1", "--out", str(out_file),
            ],
            capsys,
        )
        assert code == 0
        data = json.loads(out_file.read_text())
        assert [d["claim_id"] for d in data] == [
            "boundary-functional-mgf",
            "first-passage-mgf",
            "perpetuity-mgf",
            "survival-functional-mgf",
        ]
        assert all(d["status"] == "PASS" for d in data)

    def test_deterministic_output_file(self, capsys, tmp_path):
        f1, f2 = tmp_path / "a.json", tmp_path / "b.json"
        args = ["verify", "--suite", "bernstein", "--n", "2000", "--seed", "7"]
        run_cli(args + ["--out", str(f1)], capsys)
        run_cli(args + ["--out", str(f2)], capsys)
        assert f1.read_bytes() == f2.read_bytes()

    def test_explore_runs_conjectures(self, capsys):
        code, out, _ = run_cli(
            ["explore", "--n", "2000"], capsys
        )
        assert code == 0
        data = json.loads(out)
        assert {d["claim_id"] for d in data} == {
            "boundary-lower-bound-conjecture",
            "interior-sandwich-conjecture",
            "ml-alpha-monotonicity-conjecture",
        }
        assert all(d["status"] in ("EVIDENCE", "EXPLORED") for d in data)


class TestThreads:
    def test_env_fallback(self, capsys, monkeypatch):
        monkeypatch.setenv("KSKIT_THREADS", "3")
        _, _, err = run_cli(
            ["eval", "leroy", "--alpha", "1", "--x", "0"], capsys
        )
        assert "threads=3" in err

    def test_flag_overrides_env(self, capsys, monkeypatch):
        monkeypatch.setenv("KSKIT_THREADS", "3")
        _, _, err = run_cli(
            ["eval", "leroy", "--alpha", "1", "--x", "0", "--threads", "2"],
            capsys,
        )
        assert "threads=2" in err
