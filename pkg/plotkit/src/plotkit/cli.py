"""Command line interface.

    plotkit render fig3.csv --out fig3.png --format png
    plotkit batch out/ --format svg

Exit codes: 0 success, 2 usage or schema violation, 3 I/O failure.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .csvio import SchemaError
from .render import IMAGE_FORMATS, default_spec, render

EXIT_OK = 0
EXIT_SCHEMA = 2
EXIT_IO = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_SCHEMA)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="plotkit",
        description="Render sweep CSV files into labeled figure images",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_render = sub.add_parser("render", help="render one CSV file")
    p_render.add_argument("csv", help="input CSV path")
    p_render.add_argument("--out", default=None, help="output image path")
    p_render.add_argument("--format", choices=IMAGE_FORMATS, default="png")

    p_batch = sub.add_parser("batch", help="render every CSV in a directory")
    p_batch.add_argument("directory", help="directory containing CSV files")
    p_batch.add_argument("--format", choices=IMAGE_FORMATS, default="png")
    p_batch.add_argument(
        "--out-dir", default=None,
        help="where to put images (default: next to each CSV)",
    )
    return parser


def _cmd_render(args: argparse.Namespace) -> int:
    spec = default_spec(args.csv, args.out, args.format)
    path = render(spec)
    print(f"wrote {path}")
    return EXIT_OK


def _cmd_batch(args: argparse.Namespace) -> int:
    directory = Path(args.directory)
    if not directory.is_dir():
        print(f"error: not a directory: {directory}", file=sys.stderr)
        return EXIT_SCHEMA
    files = sorted(directory.glob("*.csv"))
    if not files:
        print(f"error: no CSV files in {directory}", file=sys.stderr)
        return EXIT_SCHEMA
    out_dir = Path(args.out_dir) if args.out_dir is not None else None
    for csv_path in files:
        out = (
            out_dir / f"{csv_path.stem}.{args.format}"
            if out_dir is not None
            else None
        )
        spec = default_spec(csv_path, out, args.format)
        path = render(spec)
        print(f"wrote {path}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"render": _cmd_render, "batch": _cmd_batch}
    try:
        return handlers[args.command](args)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
