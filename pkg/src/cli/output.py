"""
CSV and report writers for the command-line front end.

CSV values carry 9 significant digits and rows end with a single linefeed,
so two runs of the same configuration produce byte-identical files.
"""
import csv
import logging
import math
from pathlib import Path
from typing import Any, Iterable, List, Sequence, TextIO, Union

from src.errors import OutputError
from src.models.report import CqcReport
from src.models.search import DimSummary, SampleRecord, SearchSummary, WernerSweepRecord

logger = logging.getLogger(__name__)

SEARCH_HEADER = ("dim_a", "dim_b", "index", "cqc_sum", "qmi", "gap")
SCATTER_HEADER = ("n", "family", "lambda", "epsilon", "cqc_sum", "qmi")
WERNER_HEADER = ("eta", "qmi", "cqc_sum", "berta_bound", "residual_a")

DIM_REPORT_FIELDS = (
    "samples",
    "min_gap",
    "counterexamples",
    "noise_negatives",
    "violations",
    "mean_residual_a",
    "min_residual_a",
    "min_residual_b",
    "max_qmi",
    "witness_positive",
    "witness_unsound",
)


def format_value(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return f"{value:.9g}"
    return str(value)


def search_row(record: SampleRecord) -> List[str]:
    return [
        format_value(v)
        for v in (record.dim_a, record.dim_b, record.index, record.mi_sum, record.qmi, record.gap)
    ]


def scatter_row(record: SampleRecord) -> List[str]:
    return [
        format_value(v)
        for v in (record.dim_a, record.family, record.lam, record.epsilon, record.mi_sum, record.qmi)
    ]


def werner_row(record: WernerSweepRecord) -> List[str]:
    return [
        format_value(v)
        for v in (record.eta, record.qmi, record.mi_sum, record.berta_bound, record.residual_a)
    ]


def write_rows(stream: TextIO, header: Sequence[str], rows: Iterable[Sequence[str]]) -> int:
    """Write header and rows; returns the number of data rows"""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    count = 0
    for row in rows:
        writer.writerow(row)
        count += 1
    return count


def write_csv(path: Union[str, Path], header: Sequence[str], rows: Iterable[Sequence[str]]) -> int:
    """
    Stream rows to a CSV file.

    Raises:
        OutputError: the file cannot be opened or written
    """
    path = Path(path)
    try:
        with path.open("w", encoding="utf-8", newline="") as stream:
            count = write_rows(stream, header, rows)
    except OSError as e:
        raise OutputError(f"cannot write {path}: {e}") from e
    logger.info(f"Wrote {count} rows to {path}")
    return count


def report_lines(report: CqcReport) -> List[str]:
    """Labeled key-value lines in model field order"""
    lines = []
    for key, value in report.as_row().items():
        if isinstance(value, float):
            # no "-0.000000" for round-off below display precision
            shown = 0.0 if abs(value) < 5e-7 else value
            lines.append(f"{key}: {shown:.6f}")
        else:
            lines.append(f"{key}: {format_value(value)}")
    return lines


def report_csv_header(report: CqcReport) -> List[str]:
    return list(report.as_row().keys())


def report_csv_row(report: CqcReport) -> List[str]:
    return [format_value(v) for v in report.as_row().values()]


def summary_lines(summary: SearchSummary, command: str) -> List[str]:
    lines = [
        f"command: {command}",
        f"mode: {summary.mode.value}",
        f"master_seed: {summary.master_seed}",
        f"basis_label: {summary.basis_label}",
        f"sampling_measure: {summary.sampling_measure}",
        f"wall_clock_seconds: {summary.wall_clock_seconds:.3f}",
        f"counterexamples: {summary.counterexamples}",
    ]
    for key, dim in summary.per_dim.items():
        lines.append(f"[{key}]")
        lines.extend(_dim_lines(dim))
    return lines


def _dim_lines(dim: DimSummary) -> List[str]:
    values = {
        "mean_residual_a": dim.mean_residual_a,
        **dim.model_dump(include=set(DIM_REPORT_FIELDS)),
    }
    return [f"{field}: {format_value(values[field])}" for field in DIM_REPORT_FIELDS]


def append_report(path: Union[str, Path], lines: Sequence[str]) -> Path:
    """
    Append a summary block to a UTF-8 report file.

    Raises:
        OutputError: the file cannot be written
    """
    path = Path(path)
    try:
        with path.open("a", encoding="utf-8", newline="") as stream:
            stream.write("\n".join(lines) + "\n\n")
    except OSError as e:
        raise OutputError(f"cannot write report {path}: {e}") from e
    return path


__all__ = [
    "SEARCH_HEADER",
    "SCATTER_HEADER",
    "WERNER_HEADER",
    "format_value",
    "search_row",
    "scatter_row",
    "werner_row",
    "write_rows",
    "write_csv",
    "report_lines",
    "report_csv_header",
    "report_csv_row",
    "summary_lines",
    "append_report",
]
