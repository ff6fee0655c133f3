"""Render stokes-squeeze sweep CSVs into labeled figure images.

This package consumes the CSV files only; it never recomputes physics and
does not depend on the library that produced them.
"""

__version__ = "0.1.0"

from .csvio import SchemaError, SweepTable, load_sweep_csv
from .render import (
    IMAGE_FORMATS,
    FigureSpec,
    build_figure,
    default_spec,
    render,
)

__all__ = [
    "__version__",
    "SchemaError",
    "SweepTable",
    "load_sweep_csv",
    "IMAGE_FORMATS",
    "FigureSpec",
    "build_figure",
    "default_spec",
    "render",
]
