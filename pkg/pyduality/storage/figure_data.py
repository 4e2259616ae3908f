"""
Figure data
-----------

Sweep records as the two figure tables:

* ``fig2``: relative entropy coherence against mutual information,
  ``theta, C_ideal, H_ideal, C_sim, C_err, H_sim, H_err, sum, bound``,
* ``fig3``: l1 coherence against path predictability,
  ``theta, X_ideal, P_ideal, X_sim, X_err, P_sim, P_err, quad_lhs,
  quad_bound``.

``sum`` and ``quad_lhs`` are the ideal left-hand sides. Simulated columns
are empty when no simulation was run. Numbers carry 9 significant digits.
CSV files have a header line; JSON files are
``{"schema_version": 1, "figure": ..., "columns": [...], "rows": [...]}``.
"""

import json
import logging
import os
from typing import List, Sequence, Tuple
import numpy as np
import pandas as pd

from ..duality import (SweepRecord, DualityVerdict, IDEAL_TOL,
                       entropic_verdict, gy_verdict, quadratic_verdict)

logger = logging.getLogger("Storage")

SCHEMA_VERSION = 1
FLOAT_FORMAT = "%.9g"
#: Relative error of a sum of squares of values rounded to FLOAT_FORMAT.
ROUNDING_REL_TOL = 1e-8

FIG2 = "fig2"
FIG3 = "fig3"
COLUMNS = {
    FIG2: ["theta", "C_ideal", "H_ideal", "C_sim", "C_err", "H_sim",
           "H_err", "sum", "bound"],
    FIG3: ["theta", "X_ideal", "P_ideal", "X_sim", "X_err", "P_sim",
           "P_err", "quad_lhs", "quad_bound"],
}
SIMULATED_COLUMNS = {
    FIG2: ["C_sim", "C_err", "H_sim", "H_err"],
    FIG3: ["X_sim", "X_err", "P_sim", "P_err"],
}
FORMATS = ("csv", "json")


class FigureDataError(ValueError):
    """
    A figure data file does not follow the schema.
    """

    def __init__(self, message: str, line: int = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


def _simulated(record: SweepRecord, key: str) -> Tuple[float, float]:
    if not record.has_simulation:
        return np.nan, np.nan
    estimate = record.simulated[key]
    return estimate.mean, estimate.std_dev


def fig2_frame(records: Sequence[SweepRecord]) -> pd.DataFrame:
    rows = []
    for r in records:
        c, h = r.ideal["C"], r.ideal["H"]
        rows.append([r.theta, c, h, *_simulated(r, "C"),
                     *_simulated(r, "H"), c + h, r.entropic_bound])
    return pd.DataFrame(rows, columns=COLUMNS[FIG2])


def fig3_frame(records: Sequence[SweepRecord]) -> pd.DataFrame:
    rows = []
    for r in records:
        x, p = r.ideal["X"], r.ideal["P"]
        rows.append([r.theta, x, p, *_simulated(r, "X"),
                     *_simulated(r, "P"), p ** 2 + x ** 2,
                     r.quadratic_bound])
    return pd.DataFrame(rows, columns=COLUMNS[FIG3])


def _round(value: float):
    if value is None or np.isnan(value):
        return None
    return float(FLOAT_FORMAT % value)


def write_frame(df: pd.DataFrame, figure: str, path: str,
                fmt: str = "csv") -> None:
    if fmt == "csv":
        df.to_csv(path, index=False, float_format=FLOAT_FORMAT, na_rep="")
    elif fmt == "json":
        rows = [json.dumps([_round(v) for v in row])
                for row in df.itertuples(index=False)]
        with open(path, "w") as f:
            f.write("{\n")
            f.write(f'  "schema_version": {SCHEMA_VERSION},\n')
            f.write(f'  "figure": {json.dumps(figure)},\n')
            f.write(f'  "columns": {json.dumps(list(df.columns))},\n')
            f.write('  "rows": [\n')
            f.write(",\n".join("    " + row for row in rows))
            f.write("\n  ]\n}\n")
    else:
        raise ValueError(f"Unknown format {fmt!r}, choose from {FORMATS}.")
    logger.info(f"Wrote {figure} data with {len(df)} rows to {path}.")


def write_figure_data(records: Sequence[SweepRecord], out_dir: str,
                      fmt: str = "csv") -> List[str]:
    """
    Write ``fig2.<fmt>`` and ``fig3.<fmt>`` to ``out_dir``.

    Returns
    -------
    paths: List[str]
        The written files.
    """
    os.makedirs(out_dir, exist_ok=True)
    paths = []
    for figure, frame in ((FIG2, fig2_frame), (FIG3, fig3_frame)):
        path = os.path.join(out_dir, f"{figure}.{fmt}")
        write_frame(frame(records), figure, path, fmt)
        paths.append(path)
    return paths


def _figure_of(columns: Sequence[str], line: int = 1) -> str:
    for figure, expected in COLUMNS.items():
        if list(columns) == expected:
            return figure
    raise FigureDataError(
        f"columns {list(columns)} match neither {FIG2} nor {FIG3}", line)


def _parse_value(value, column: str, line: int, optional: bool) -> float:
    if value is None or (isinstance(value, str) and value.strip() == ""):
        if optional:
            return np.nan
        raise FigureDataError(f"missing value for {column}", line)
    try:
        number = float(value)
    except (TypeError, ValueError):
        raise FigureDataError(f"{column} is not a number: {value!r}", line)
    if not np.isfinite(number):
        raise FigureDataError(f"{column} is not finite: {value!r}", line)
    return number


def _parse_rows(figure: str, rows: Sequence[Sequence], lines: Sequence[int]) \
        -> pd.DataFrame:
    columns = COLUMNS[figure]
    optional = set(SIMULATED_COLUMNS[figure])
    parsed = []
    for row, line in zip(rows, lines):
        if len(row) != len(columns):
            raise FigureDataError(
                f"expected {len(columns)} fields, got {len(row)}", line)
        values = [_parse_value(v, c, line, c in optional)
                  for v, c in zip(row, columns)]
        sim = [values[columns.index(c)] for c in SIMULATED_COLUMNS[figure]]
        if any(np.isnan(sim)) and not all(np.isnan(sim)):
            raise FigureDataError("simulated columns are partially filled",
                                  line)
        parsed.append(values)
    if not parsed:
        raise FigureDataError("no data rows", 2)
    return pd.DataFrame(parsed, columns=columns)


def _read_csv(path: str) -> Tuple[str, pd.DataFrame]:
    try:
        raw = pd.read_csv(path, dtype=str, keep_default_na=False,
                          skip_blank_lines=False)
    except pd.errors.EmptyDataError:
        raise FigureDataError("empty file", 1)
    except pd.errors.ParserError as e:
        raise FigureDataError(f"unparseable: {e}")
    figure = _figure_of(raw.columns)
    rows = [[None if isinstance(v, float) else v for v in row]
            for row in raw.itertuples(index=False)]
    return figure, _parse_rows(figure, rows, range(2, len(rows) + 2))


def _read_json(path: str) -> Tuple[str, pd.DataFrame]:
    with open(path) as f:
        text = f.read()
    if not text.strip():
        raise FigureDataError("empty file", 1)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise FigureDataError(f"invalid JSON: {e.msg}", e.lineno)
    if not isinstance(data, dict):
        raise FigureDataError("top level is not an object", 1)
    if data.get("schema_version") != SCHEMA_VERSION:
        raise FigureDataError(
            f"unsupported schema_version {data.get('schema_version')!r}")
    figure = data.get("figure")
    if figure not in COLUMNS:
        raise FigureDataError(f"unknown figure {figure!r}")
    if data.get("columns") != COLUMNS[figure]:
        raise FigureDataError(f"columns do not match {figure}")
    rows = data.get("rows")
    if not isinstance(rows, list) or \
            not all(isinstance(r, list) for r in rows):
        raise FigureDataError("rows must be a list of lists")
    lines = _json_row_lines(text, len(rows))
    return figure, _parse_rows(figure, rows, lines)


def _json_row_lines(text: str, n_rows: int) -> List[int]:
    """
    Line of each row in a file written by :func:`write_frame`, one row per
    line after the ``"rows"`` key.
    """
    lines = text.splitlines()
    start = next((k for k, line in enumerate(lines) if '"rows"' in line), 0)
    row_starts = [k + 1 for k, line in enumerate(lines)
                  if k > start and line.strip().startswith("[")]
    if len(row_starts) >= n_rows:
        return row_starts[:n_rows]
    return [None] * n_rows


def read_figure_data(path: str) -> Tuple[str, pd.DataFrame]:
    """
    Parse a figure data file, CSV or JSON by extension.

    Returns
    -------
    figure: str
        ``fig2`` or ``fig3``.
    data: pd.DataFrame
        The rows, missing simulated values as NaN.

    Raises
    ------
    FigureDataError
        With the offending line, where it can be located.
    """
    if not os.path.isfile(path):
        raise FigureDataError(f"no such file {path}")
    if path.endswith(".json"):
        return _read_json(path)
    return _read_csv(path)


def _floor(bound: float) -> float:
    return IDEAL_TOL + ROUNDING_REL_TOL * max(1.0, abs(bound))


def _two_paths(quad_bound: float) -> bool:
    return abs(quad_bound - 0.25) <= _floor(0.25)


def verify_figure_data(figure: str, data: pd.DataFrame) \
        -> List[DualityVerdict]:
    """
    Re-check the relations of ``figure`` on every row, from the quantifier
    columns: ideal values with the ideal tolerance and, where present,
    simulated values within three standard deviations. Both tolerances
    are raised to cover the rounding of the stored values.

    ``fig2`` rows give the entropic relation, ``fig3`` rows the quadratic
    one and, for two paths, the visibility relation with ``V = 2 X`` and
    ``D = 2 P``.
    """
    verdicts = []
    for row in data.itertuples(index=False):
        r = row._asdict()
        theta = r["theta"]
        if figure == FIG2:
            floor = _floor(r["bound"])
            verdicts.append(entropic_verdict(
                r["C_ideal"], r["H_ideal"], r["bound"], theta=theta,
                floor=floor))
            if not np.isnan(r["C_sim"]):
                verdicts.append(entropic_verdict(
                    r["C_sim"], r["H_sim"], r["bound"], r["C_err"],
                    r["H_err"], theta, "simulated", floor))
            continue
        floor = _floor(r["quad_bound"])
        verdicts.append(quadratic_verdict(
            r["P_ideal"], r["X_ideal"], r["quad_bound"], theta=theta,
            floor=floor))
        simulated = not np.isnan(r["X_sim"])
        if simulated:
            verdicts.append(quadratic_verdict(
                r["P_sim"], r["X_sim"], r["quad_bound"], r["P_err"],
                r["X_err"], theta, "simulated", floor))
        if _two_paths(r["quad_bound"]):
            floor = _floor(1.0)
            verdicts.append(gy_verdict(
                2 * r["X_ideal"], 2 * r["P_ideal"], theta=theta,
                floor=floor))
            if simulated:
                verdicts.append(gy_verdict(
                    2 * r["X_sim"], 2 * r["P_sim"], 2 * r["X_err"],
                    2 * r["P_err"], theta, "simulated", floor))
    return verdicts
