"""Experiment harness: file formats, parameter sweeps, plots."""

from .files import (
    FileFormatError,
    read_community_file,
    read_edge_file,
    write_community_file,
    write_edge_file,
)
from .sweep import (
    RunRecord,
    SweepSpec,
    aggregate,
    expand_grid,
    read_records_csv,
    run_sweep,
    write_records_csv,
)
from .plots import emit_plots

__all__ = [
    "FileFormatError",
    "read_community_file",
    "read_edge_file",
    "write_community_file",
    "write_edge_file",
    "RunRecord",
    "SweepSpec",
    "aggregate",
    "expand_grid",
    "read_records_csv",
    "run_sweep",
    "write_records_csv",
    "emit_plots",
]
