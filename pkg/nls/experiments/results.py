"""
CSV files for convergence and oracle results.

Convergence files have the header method,d,N,gamma,tau,error,wall_time_seconds,
floats in %.12e, LF line endings, and one trailing `# slope(method=...)=X.XXX`
comment per method.
"""

import csv
import io
from pathlib import Path

from .study import ConvergenceRow, StudyResult

CONVERGENCE_HEADER = ["method", "d", "N", "gamma", "tau", "error", "wall_time_seconds"]
ORACLE_HEADER = ["alpha", "beta", "tau", "abs_r2"]


def _fmt(value: float) -> str:
    return "%.12e" % value


def format_convergence_csv(result: StudyResult) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CONVERGENCE_HEADER)
    for row in result.rows:
        writer.writerow(
            [
                row.method.value,
                row.d,
                row.N,
                _fmt(row.gamma),
                _fmt(row.tau),
                _fmt(row.error),
                _fmt(row.wall_time_seconds),
            ]
        )
    for method, slope in result.slopes.items():
        shown = "nan" if slope is None else f"{slope:.3f}"
        buffer.write(f"# slope(method={method})={shown}\n")
    return buffer.getvalue()


def parse_convergence_csv(text: str) -> tuple[list[ConvergenceRow], dict[str, float | None]]:
    """Inverse of format_convergence_csv."""
    lines = text.splitlines()
    body = [line for line in lines if not line.startswith("#")]
    rows = [
        ConvergenceRow(
            method=record["method"],
            d=int(record["d"]),
            N=int(record["N"]),
            gamma=float(record["gamma"]),
            tau=float(record["tau"]),
            error=float(record["error"]),
            wall_time_seconds=float(record["wall_time_seconds"]),
        )
        for record in csv.DictReader(body)
    ]
    slopes: dict[str, float | None] = {}
    for line in lines:
        if line.startswith("# slope(method="):
            key, value = line[len("# slope(method=") :].split(")=", 1)
            slopes[key] = None if value == "nan" else float(value)
    return rows, slopes


def format_oracle_csv(rows: list[dict[str, float]]) -> str:
    header = list(ORACLE_HEADER)
    if rows and "abs_r1" in rows[0]:
        header.append("abs_r1")
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(row[key]) for key in header])
    return buffer.getvalue()


def write_text(path: Path | str, text: str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)
    return path
