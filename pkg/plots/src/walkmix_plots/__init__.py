"""Figure rendering for walkmix benchmark CSVs."""

from .render import FigureSpec, SchemaError, aggregate, load_records, points_path, render

__version__ = "0.1.0"
