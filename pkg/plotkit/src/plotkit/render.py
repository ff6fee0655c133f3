"""Figure rendering for sweep CSVs.

Deterministic styling: fixed figure size, color/linestyle cycle keyed by
column order, legend entries in header order, axes auto-fit with 5%
margins.  The plotted series are exactly the arrays parsed from the CSV;
nothing is resampled or smoothed.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .csvio import SchemaError, SweepTable, load_sweep_csv

IMAGE_FORMATS = ("png", "svg")

_X_LABELS = {
    "phi01": r"peak nonlinear phase $\phi_{0,1}$",
    "omega": r"reduced frequency $\Omega$",
}
_Y_LABELS = {
    "normalized": r"normalized spectral variance $S^{*}_{S_2}$",
    "raw": r"spectral density $S_{S_2}$",
}

# one style per curve slot, cycled in column order
_LINE_STYLES = ("-", "--", "-.", ":", (0, (3, 1, 1, 1)), (0, (5, 1)))
_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf")


@dataclass(frozen=True)
class FigureSpec:
    """What to render and where to put it."""

    csv_path: Path
    x_label: str
    y_label: str
    curve_labels: tuple[str, ...]
    output_image_path: Path
    image_format: str = "png"

    def __post_init__(self) -> None:
        if self.image_format not in IMAGE_FORMATS:
            raise SchemaError(
                f"image_format must be one of {IMAGE_FORMATS} "
                f"(got {self.image_format!r})"
            )


def default_spec(
    csv_path: str | Path,
    output_image_path: str | Path | None = None,
    image_format: str = "png",
) -> FigureSpec:
    """FigureSpec with labels inferred from the CSV header and metadata."""
    csv_path = Path(csv_path)
    table = load_sweep_csv(csv_path)
    out = (
        Path(output_image_path)
        if output_image_path is not None
        else csv_path.with_suffix(f".{image_format}")
    )
    kind = table.metadata.get("kind", "normalized")
    return FigureSpec(
        csv_path=csv_path,
        x_label=_X_LABELS.get(table.x_name, table.x_name),
        y_label=_Y_LABELS.get(kind, kind),
        curve_labels=table.labels,
        output_image_path=out,
        image_format=image_format,
    )


def build_figure(spec: FigureSpec) -> tuple[plt.Figure, SweepTable]:
    """Load the CSV and build the matplotlib figure without saving it.

    Split from render() so tests can inspect the plotted line data; the
    arrays handed to matplotlib are the parsed CSV columns, unmodified.
    """
    table = load_sweep_csv(spec.csv_path)
    if tuple(spec.curve_labels) != table.labels:
        raise SchemaError(
            f"{spec.csv_path}: curve labels {list(table.labels)} do not match "
            f"the requested {list(spec.curve_labels)}"
        )
    fig, ax = plt.subplots(figsize=(6.4, 4.8), dpi=150)
    for j, label in enumerate(table.labels):
        ax.plot(
            table.x,
            table.columns[label],
            label=label,
            color=_COLORS[j % len(_COLORS)],
            linestyle=_LINE_STYLES[j % len(_LINE_STYLES)],
            linewidth=1.6,
        )
    ax.set_xlabel(spec.x_label)
    ax.set_ylabel(spec.y_label)
    ax.margins(0.05)
    ax.grid(True, alpha=0.3)
    ax.legend(title="curve", loc="best")
    fig.tight_layout()
    return fig, table


def render(spec: FigureSpec) -> Path:
    """Render one CSV to an image file; returns the written path."""
    fig, _ = build_figure(spec)
    try:
        fig.savefig(spec.output_image_path, format=spec.image_format)
    finally:
        plt.close(fig)
    return Path(spec.output_image_path)
