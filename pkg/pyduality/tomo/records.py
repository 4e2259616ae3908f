"""
Count records
-------------

A count record is the number of photons registered for one measurement
setting during one exposure. Records round-trip through CSV files with the
columns ``setting_label, branch, counts, exposure_s``; the projector of a
record is recovered from its label.
"""

from typing import Dict, List, Sequence
import logging
import numpy as np
import pandas as pd

from ..qmath import as_matrix
from .exceptions import InvalidProjectorError, RecordSchemaError

logger = logging.getLogger("Tomography")

PROJECTOR_TOL = 1e-10

COLUMNS = ["setting_label", "branch", "counts", "exposure_s"]

_S = 1 / np.sqrt(2)
KETS: Dict[str, np.ndarray] = {
    "H": np.array([1, 0], dtype=complex),
    "V": np.array([0, 1], dtype=complex),
    "D": np.array([_S, _S], dtype=complex),
    "A": np.array([_S, -_S], dtype=complex),
    "R": np.array([_S, 1j * _S], dtype=complex),
    "L": np.array([_S, -1j * _S], dtype=complex),
    "phi1": np.array([_S, _S], dtype=complex),
    "phi2": np.array([_S, -_S], dtype=complex),
}

#: The six Pauli eigenprojector settings, in measurement order.
PAULI_LABELS = ("H", "V", "D", "A", "R", "L")

#: The two outcomes of the path-discriminating measurement.
DISCRIMINATION_LABELS = ("phi1", "phi2")


def projector_for_label(label: str) -> np.ndarray:
    """
    The polarization projector measured by setting ``label``.
    """
    try:
        ket = KETS[label]
    except KeyError:
        raise ValueError(f"Unknown setting label {label!r}; known labels "
                         f"are {sorted(KETS)}.")
    return as_matrix(np.outer(ket, ket.conj()))


def pauli_projectors() -> List[np.ndarray]:
    return [projector_for_label(label) for label in PAULI_LABELS]


def check_projector(projector) -> np.ndarray:
    """
    Validate a measurement operator: Hermitian with spectrum in [0, 1].
    """
    try:
        m = as_matrix(projector)
    except ValueError as e:
        raise InvalidProjectorError(str(e))
    if np.max(np.abs(m - m.conj().T)) > PROJECTOR_TOL:
        raise InvalidProjectorError("Projector is not Hermitian.")
    vals = np.linalg.eigvalsh(m)
    if vals[0] < -PROJECTOR_TOL or vals[-1] > 1 + PROJECTOR_TOL:
        raise InvalidProjectorError(
            f"Projector spectrum [{vals[0]:.3g}, {vals[-1]:.3g}] "
            f"is not within [0, 1].")
    return m


class CountRecord:
    """
    Photon counts of one measurement setting.

    Parameters
    ----------
    setting_label: str
        Name of the setting.
    projector: array_like
        The measured operator, on the space that is reconstructed
        (the polarization of ``branch``).
    counts: float
        Registered photons, non-negative. Usually an integer; exact
        expected counts may be passed to study the infinite statistics
        limit.
    exposure: float
        Exposure time in seconds, positive.
    branch: int, optional (default = 1)
        The output path the counts were taken on.
    """

    def __init__(self, setting_label: str, projector, counts: float,
                 exposure: float, branch: int = 1):
        counts = float(counts)
        exposure = float(exposure)
        if not np.isfinite(counts) or counts < 0:
            raise ValueError(f"Counts must be non-negative, got {counts}.")
        if not np.isfinite(exposure) or exposure <= 0:
            raise ValueError(f"Exposure must be positive, got {exposure}.")
        self.setting_label = str(setting_label)
        self.projector = check_projector(projector)
        self.counts = int(counts) if counts.is_integer() else counts
        self.exposure = exposure
        self.branch = int(branch)

    def with_counts(self, counts: float) -> "CountRecord":
        return CountRecord(self.setting_label, self.projector, counts,
                           self.exposure, self.branch)

    def __repr__(self):
        return (f"<CountRecord {self.setting_label} branch={self.branch} "
                f"counts={self.counts} exposure={self.exposure}s>")


def total_counts(records: Sequence[CountRecord]) -> float:
    return float(sum(r.counts for r in records))


def split_branches(records: Sequence[CountRecord]) \
        -> Dict[int, List[CountRecord]]:
    """
    Group records by branch, branches in ascending order.
    """
    branches: Dict[int, List[CountRecord]] = {}
    for r in sorted(records, key=lambda r: r.branch):
        branches.setdefault(r.branch, []).append(r)
    return branches


def records_to_frame(records: Sequence[CountRecord]) -> pd.DataFrame:
    return pd.DataFrame(
        [(r.setting_label, r.branch, r.counts, r.exposure) for r in records],
        columns=COLUMNS)


def save_records_csv(records: Sequence[CountRecord], path) -> None:
    """
    Write records to ``path`` with 9 significant digits.
    """
    records_to_frame(records).to_csv(path, index=False, float_format="%.9g")
    logger.info(f"Wrote {len(records)} count records to {path}.")


def _cell(row: pd.Series, column: str, line: int) -> str:
    value = row[column]
    if value is None or (isinstance(value, float) and np.isnan(value)) \
            or str(value).strip() == "":
        raise RecordSchemaError(f"missing value for {column}", line)
    return str(value).strip()


def _number(text: str, column: str, line: int) -> float:
    try:
        value = float(text)
    except ValueError:
        raise RecordSchemaError(f"{column} is not a number: {text!r}", line)
    if not np.isfinite(value):
        raise RecordSchemaError(f"{column} is not finite: {text!r}", line)
    return value


def frame_to_records(df: pd.DataFrame) -> List[CountRecord]:
    """
    Parse a frame read from a count record file. Line numbers in errors
    refer to the file, header on line 1.
    """
    if list(df.columns) != COLUMNS:
        raise RecordSchemaError(
            f"expected columns {COLUMNS}, got {list(df.columns)}", 1)
    if len(df) == 0:
        raise RecordSchemaError("no records", 2)
    records = []
    for position, (_, row) in enumerate(df.iterrows()):
        line = position + 2
        label = _cell(row, "setting_label", line)
        branch = _number(_cell(row, "branch", line), "branch", line)
        counts = _number(_cell(row, "counts", line), "counts", line)
        exposure = _number(_cell(row, "exposure_s", line), "exposure_s",
                           line)
        if not branch.is_integer() or branch < 1:
            raise RecordSchemaError(
                f"branch must be a positive integer, got {branch}", line)
        try:
            records.append(CountRecord(label, projector_for_label(label),
                                       counts, exposure, int(branch)))
        except ValueError as e:
            raise RecordSchemaError(str(e), line)
    return records


def load_records_csv(path) -> List[CountRecord]:
    """
    Read records written by :func:`save_records_csv`.

    Raises
    ------
    RecordSchemaError
        If the file is empty, truncated or does not follow the schema.
    """
    try:
        df = pd.read_csv(path, dtype=str, keep_default_na=False)
    except pd.errors.EmptyDataError:
        raise RecordSchemaError("empty file", 1)
    except pd.errors.ParserError as e:
        raise RecordSchemaError(f"unparseable: {e}")
    return frame_to_records(df)
