"""
Data store
==========

Figure data tables of a sweep in CSV or schema-versioned JSON, and JSON
helpers for reports.
"""

from .figure_data import (
    FigureDataError,
    FIG2,
    FIG3,
    COLUMNS,
    SCHEMA_VERSION,
    fig2_frame,
    fig3_frame,
    write_frame,
    write_figure_data,
    read_figure_data,
    verify_figure_data,
)
from .json import save_dict_to_json, load_dict_from_json, dict_to_json

__all__ = [
    "FigureDataError",
    "FIG2",
    "FIG3",
    "COLUMNS",
    "SCHEMA_VERSION",
    "fig2_frame",
    "fig3_frame",
    "write_frame",
    "write_figure_data",
    "read_figure_data",
    "verify_figure_data",
    "save_dict_to_json",
    "load_dict_from_json",
    "dict_to_json",
]
