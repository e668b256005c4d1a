"""The ``walkmix-plot`` command: CSV in, figure + point dump out."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .render import FIGURE_KINDS, FigureSpec, SchemaError, points_path, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="walkmix-plot",
        description="Render a benchmark figure (plus point-value dump) from a walkmix CSV.",
    )
    parser.add_argument("--csv", required=True, help="input benchmark CSV")
    parser.add_argument("--out", required=True, help="output image path (raster, e.g. .png)")
    parser.add_argument(
        "--kind",
        required=True,
        choices=[k.replace("_", "-") for k in FIGURE_KINDS],
        help="figure kind",
    )
    parser.add_argument("--no-band", action="store_true", help="skip the standard-error band")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    csv_path = Path(args.csv)
    if not csv_path.exists():
        print(f"input CSV not found: {csv_path}", file=sys.stderr)
        return 2
    spec = FigureSpec(
        input_csv=csv_path,
        output_image=Path(args.out),
        kind=args.kind.replace("-", "_"),
        band=not args.no_band,
    )
    try:
        image = render(spec)
    except SchemaError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {image} and {points_path(image)}")
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
