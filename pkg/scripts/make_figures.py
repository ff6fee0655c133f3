#!/usr/bin/env python3
"""Regenerate every preset sweep CSV (and, when plotkit is installed, the
matching images) into a single output directory.

Usage:
    python3 scripts/make_figures.py [OUTDIR] [--step STEP] [--format png|svg]

OUTDIR defaults to ./figures. CSV output is byte-deterministic, so rerunning
into the same directory is a no-op unless the library changed.
"""

import argparse
import sys
from pathlib import Path

from stokes_squeeze.presets import PRESET_NAMES, run_preset


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("outdir", nargs="?", default="figures", type=Path)
    parser.add_argument("--step", type=float, default=0.05,
                        help="sweep step size passed to every preset")
    parser.add_argument("--format", choices=("png", "svg"), default="png")
    args = parser.parse_args(argv)

    args.outdir.mkdir(parents=True, exist_ok=True)

    csv_paths = []
    for name in PRESET_NAMES:
        out = args.outdir / f"{name}.csv"
        result = run_preset(name, step=args.step, output_path=str(out))
        for line in result.warnings:
            print(f"warning [{name}]: {line}", file=sys.stderr)
        print(f"wrote {out}")
        csv_paths.append(out)

    try:
        from plotkit.render import default_spec, render
    except ImportError:
        print("plotkit not installed; skipping image rendering", file=sys.stderr)
        return 0

    for csv_path in csv_paths:
        spec = default_spec(csv_path, image_format=args.format)
        render(spec)
        print(f"wrote {spec.output_image_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
