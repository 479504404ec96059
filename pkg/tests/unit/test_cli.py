"""
Unit tests for the cqc command line
"""
import csv
import json

import pytest

from src.cli import main
from src.cli.output import format_value
from src.cli.parser import build_parser
from src.errors import EX_CANTCREAT, EX_DATAERR, EX_USAGE
from src.quantum.states import maximally_mixed, werner


pytestmark = pytest.mark.unit


def _read_csv(path):
    with open(path, newline="", encoding="utf-8") as stream:
        return list(csv.DictReader(stream))


class TestParser:
    """Argument parsing"""

    def test_usage_errors_exit_64(self):
        with pytest.raises(SystemExit) as exc:
            build_parser().parse_args(["search", "--dims", "2", "--out", "x.csv"])
        assert exc.value.code == EX_USAGE

    def test_unknown_subcommand(self):
        with pytest.raises(SystemExit) as exc:
            main(["plot"])
        assert exc.value.code == EX_USAGE

    def test_dims_parsed(self):
        args = build_parser().parse_args(["search", "--dims", "2x3", "4X4", "--out", "x.csv"])
        assert args.dims == [(2, 3), (4, 4)]

    def test_format_value(self):
        assert format_value(1 / 3) == "0.333333333"
        assert format_value(True) == "true"
        assert format_value(None) == ""
        assert format_value(7) == "7"


class TestBounds:
    """cqc bounds"""

    def test_bell(self, state_file, bell2, capsys):
        assert main(["bounds", str(state_file(bell2))]) == 0
        out = capsys.readouterr().out
        assert "gap: 0.000000" in out
        assert "steering_witness: true" in out
        assert "witness_caveat: conditional on the CQC conjecture" in out

    def test_maximally_mixed(self, state_file, mixed2, capsys):
        assert main(["bounds", str(state_file(mixed2))]) == 0
        out = capsys.readouterr().out
        assert "mi_sum: 0.000000" in out
        assert "qmi: 0.000000" in out
        assert "entangled_witness: false" in out
        assert "steering_witness: false" in out

    def test_werner_with_pauli_bases(self, state_file, werner_point, capsys, tmp_path):
        out_csv = tmp_path / "report.csv"
        code = main(["bounds", str(state_file(werner_point)), "--bases", "pauli-xy", "--csv", str(out_csv)])
        assert code == 0
        assert "mi_sum: 0.912872" in capsys.readouterr().out
        (row,) = _read_csv(out_csv)
        assert float(row["mi_sum"]) == pytest.approx(0.912872, abs=1e-6)
        assert row["basis_label"] == "pauli-xy"

    def test_near_product_state(self, state_file, near_product, capsys):
        assert main(["bounds", str(state_file(near_product))]) == 0
        assert "qmi: 0.000000" in capsys.readouterr().out

    def test_malformed_file(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{", encoding="utf-8")
        assert main(["bounds", str(path)]) == EX_USAGE

    def test_not_a_state(self, tmp_path):
        path = tmp_path / "trace2.json"
        entries = [[1.0, 0.0] if i in (0, 5, 10, 15) else [0.0, 0.0] for i in range(16)]
        path.write_text(json.dumps({"dim_a": 2, "dim_b": 2, "entries": entries}), encoding="utf-8")
        assert main(["bounds", str(path)]) == EX_DATAERR

    def test_pauli_on_qutrits(self, state_file):
        assert main(["bounds", str(state_file(maximally_mixed(3, 3))), "--bases", "pauli-xy"]) == EX_USAGE


class TestWernerSweepCommand:
    """cqc werner-sweep"""

    def test_rows(self, tmp_path):
        out = tmp_path / "sweep.csv"
        assert main(["werner-sweep", "--p", "0.75", "--grid", "201", "--out", str(out)]) == 0
        rows = _read_csv(out)
        assert len(rows) == 201
        assert list(rows[0]) == ["eta", "qmi", "cqc_sum", "berta_bound", "residual_a"]
        mid = rows[100]
        assert float(mid["eta"]) == 0.5
        assert float(mid["qmi"]) == pytest.approx(1.006607, abs=1e-6)
        assert float(mid["cqc_sum"]) == pytest.approx(0.912872, abs=1e-6)
        assert all(float(r["cqc_sum"]) >= float(r["berta_bound"]) - 1e-9 for r in rows)

    def test_p_zero(self, tmp_path):
        out = tmp_path / "flat.csv"
        assert main(["werner-sweep", "--p", "0", "--grid", "5", "--out", str(out)]) == 0
        for row in _read_csv(out):
            assert abs(float(row["qmi"])) < 1e-9
            assert abs(float(row["cqc_sum"])) < 1e-9

    def test_bad_grid(self, tmp_path):
        assert main(["werner-sweep", "--grid", "1", "--out", str(tmp_path / "x.csv")]) == EX_USAGE

    def test_unwritable(self, tmp_path):
        out = tmp_path / "missing" / "sweep.csv"
        assert main(["werner-sweep", "--grid", "3", "--out", str(out)]) == EX_CANTCREAT


class TestSearchCommands:
    """cqc search / scatter / pure-check"""

    def test_search_is_byte_identical(self, tmp_path):
        first, second = tmp_path / "a.csv", tmp_path / "b.csv"
        argv = ["search", "--dims", "2x2", "--samples", "30", "--seed", "7", "--out"]
        assert main([*argv, str(first)]) == 0
        assert main([*argv, str(second)]) == 0
        content = first.read_bytes()
        assert content == second.read_bytes()
        assert content.startswith(b"dim_a,dim_b,index,cqc_sum,qmi,gap\n")
        assert b"\r" not in content
        assert content.count(b"\n") == 31

    def test_search_report(self, tmp_path):
        report = tmp_path / "report.txt"
        argv = ["search", "--dims", "2x2", "2x3", "--samples", "10", "--out", str(tmp_path / "s.csv"),
                "--report", str(report)]
        assert main(argv) == 0
        text = report.read_text(encoding="utf-8")
        assert "mode: uniform" in text
        assert "sampling_measure: simplex x Haar" in text
        assert "[2x3]" in text
        assert text.index("samples:") < text.index("min_gap:")

    def test_scatter(self, tmp_path):
        out = tmp_path / "scatter.csv"
        argv = ["scatter", "--dims", "2x2", "--samples", "40", "--lambda-grid", "5", "--out", str(out)]
        assert main(argv) == 0
        rows = _read_csv(out)
        assert list(rows[0]) == ["n", "family", "lambda", "epsilon", "cqc_sum", "qmi"]
        assert min(float(r["qmi"]) - float(r["cqc_sum"]) for r in rows) >= -1e-7
        assert all(float(r["qmi"]) <= 2 + 1e-9 for r in rows)
        for row in rows:
            if float(row["epsilon"]) <= 1e-3:
                assert abs(float(row["qmi"]) - float(row["cqc_sum"])) <= 1e-6

    def test_scatter_non_square(self, tmp_path):
        argv = ["scatter", "--dims", "2x3", "--samples", "4", "--out", str(tmp_path / "x.csv")]
        assert main(argv) == EX_USAGE

    def test_repeated_dims(self, tmp_path):
        out = tmp_path / "x.csv"
        assert main(["search", "--dims", "2x2", "2x2", "--samples", "4", "--out", str(out)]) == EX_USAGE

    def test_pure_check(self, capsys):
        assert main(["pure-check", "--dims", "2x2", "--samples", "50"]) == 0
        assert "mode: pure-states" in capsys.readouterr().out


class TestMakeState:
    """cqc make-state"""

    def test_werner_round_trip(self, tmp_path, capsys):
        path = tmp_path / "werner.json"
        assert main(["make-state", "werner", "--p", "0.75", "--eta", "0.5", "--out", str(path)]) == 0
        capsys.readouterr()
        assert main(["bounds", str(path), "--bases", "pauli-xy"]) == 0
        assert "qmi: 1.006607" in capsys.readouterr().out

    @pytest.mark.parametrize("family", ["bell", "mcm", "mixed", "boundary"])
    def test_families(self, tmp_path, family):
        path = tmp_path / f"{family}.json"
        assert main(["make-state", family, "--n", "3", "--out", str(path)]) == 0
        document = json.loads(path.read_text(encoding="utf-8"))
        assert (document["dim_a"], document["dim_b"]) == (3, 3)

    def test_werner_matches_library(self, tmp_path):
        path = tmp_path / "w.json"
        main(["make-state", "werner", "--p", "0.3", "--eta", "0.2", "--out", str(path)])
        entries = json.loads(path.read_text(encoding="utf-8"))["entries"]
        assert entries[5][0] == pytest.approx(werner(0.3, 0.2).matrix[1, 1].real)
