"""Figures from transfrechet bench CSV output."""

from .records import Row, SchemaError, aggregate, curve_class, median, quartiles, read_rows
from .render import KINDS, PlotJob, heatmap_matrix, level_curve_data, render, scatter_data

__version__ = "0.1.0"
