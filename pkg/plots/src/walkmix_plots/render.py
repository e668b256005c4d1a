"""Aggregate benchmark CSVs and render the two standard figures.

Input is the walkmix benchmark schema
(``dataset,walker,alpha,budget,replication,estimate,relative_error,steps,truncated``);
this package reads only the CSV file and has no dependency on the
benchmark code itself.

Figure kinds:

* ``error_vs_cost`` - mean relative error vs unique-query budget, one
  series per walker (grouped exactly by (walker, budget)).
* ``alpha_sweep``  - mean relative error vs alpha, one series per dataset
  (grouped exactly by (dataset, alpha)).

Every image comes with a point-value dump (``<image>.points.csv``) holding
the exact plotted means, standard errors, and replication counts, so the
figures stay verifiable against the raw CSV. Means are plotted with an
optional shaded +/-1 standard-error band; groups with a single
replication get no band.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np
import pandas as pd

__all__ = ["FigureSpec", "SchemaError", "load_records", "aggregate", "render", "points_path"]

REQUIRED_COLUMNS = (
    "dataset",
    "walker",
    "alpha",
    "budget",
    "replication",
    "estimate",
    "relative_error",
    "steps",
    "truncated",
)

ERROR_VS_COST = "error_vs_cost"
ALPHA_SWEEP = "alpha_sweep"
FIGURE_KINDS = (ERROR_VS_COST, ALPHA_SWEEP)


class SchemaError(ValueError):
    """Input CSV does not conform to the benchmark schema."""


@dataclass(frozen=True)
class FigureSpec:
    input_csv: Path
    output_image: Path
    kind: str
    band: bool = True

    def __post_init__(self):
        if self.kind not in FIGURE_KINDS:
            raise ValueError(f"unknown figure kind {self.kind!r}, expected {FIGURE_KINDS}")


def load_records(path: str | Path) -> pd.DataFrame:
    df = pd.read_csv(path)
    missing = [c for c in REQUIRED_COLUMNS if c not in df.columns]
    if missing:
        raise SchemaError(f"missing column(s) {missing} in {path}")
    if df.empty:
        raise SchemaError(f"no data rows in {path}")
    return df


def aggregate(df: pd.DataFrame, kind: str) -> pd.DataFrame:
    """Group means/standard errors, one row per plotted point."""
    keys = ["walker", "budget"] if kind == ERROR_VS_COST else ["dataset", "alpha"]
    grouped = df.groupby(keys, sort=True)["relative_error"]
    out = grouped.agg(
        mean_relative_error="mean",
        stderr=lambda s: s.std(ddof=1) / np.sqrt(len(s)) if len(s) > 1 else np.nan,
        replications="size",
    ).reset_index()
    return out


def points_path(output_image: str | Path) -> Path:
    out = Path(output_image)
    return out.with_name(out.stem + ".points.csv")


def _write_points(table: pd.DataFrame, path: Path) -> None:
    # repr-precision floats so dumped means are exactly the plotted values
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(table.columns) + "\n")
        for row in table.itertuples(index=False):
            cells = []
            for value in row:
                if isinstance(value, float):
                    cells.append("" if np.isnan(value) else repr(value))
                else:
                    cells.append(str(value))
            fh.write(",".join(cells) + "\n")


def render(spec: FigureSpec) -> Path:
    """Render one figure plus its point dump; returns the image path."""
    df = load_records(spec.input_csv)
    table = aggregate(df, spec.kind)

    if spec.kind == ERROR_VS_COST:
        series_key, x_key, x_label = "walker", "budget", "query cost"
    else:
        series_key, x_key, x_label = "dataset", "alpha", "alpha"

    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for name, part in table.groupby(series_key, sort=True):
        part = part.sort_values(x_key)
        x = part[x_key].to_numpy()
        y = part["mean_relative_error"].to_numpy()
        ax.plot(x, y, marker="o", label=str(name))
        if spec.band:
            err = part["stderr"].to_numpy()
            ok = ~np.isnan(err)
            if ok.any():
                ax.fill_between(x[ok], (y - err)[ok], (y + err)[ok], alpha=0.2)

    ax.set_xlabel(x_label)
    ax.set_ylabel("relative error")
    if spec.kind == ALPHA_SWEEP:
        ax.set_xticks(sorted(table[x_key].unique()))
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(spec.output_image, dpi=150)
    plt.close(fig)

    _write_points(table, points_path(spec.output_image))
    return Path(spec.output_image)
