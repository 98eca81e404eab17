"""Batch figure rendering for wrapping-hull experiment outputs.

This package deliberately does not import the estimation package. It
talks to it through two stable on-disk interfaces only: the experiment
CSV schemas and the hull geometry text format.
"""

from .errors import PlotError
from .figures import FIGURE_KINDS, PlotSpec, render
from .hulltext import parse_hull_text

__version__ = "0.1.0"

__all__ = [
    "FIGURE_KINDS",
    "PlotError",
    "PlotSpec",
    "parse_hull_text",
    "render",
]
