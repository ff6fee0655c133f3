import matplotlib.pyplot as plt
import numpy as np
import pytest

from plotkit import (
    FigureSpec,
    SchemaError,
    build_figure,
    default_spec,
    load_sweep_csv,
    render,
)


class TestDefaultSpec:
    def test_axis_labels_from_header_and_metadata(self, preset_csv_dir):
        spec1 = default_spec(preset_csv_dir / "fig1.csv")
        assert r"\phi_{0,1}" in spec1.x_label
        assert "normalized" in spec1.y_label
        spec3 = default_spec(preset_csv_dir / "fig3.csv")
        assert r"\Omega" in spec3.x_label
        assert spec3.curve_labels == ("a", "b", "c", "d")

    def test_output_defaults_next_to_csv(self, preset_csv_dir):
        spec = default_spec(preset_csv_dir / "fig1.csv")
        assert spec.output_image_path == preset_csv_dir / "fig1.png"

    def test_format_validation(self, preset_csv_dir):
        with pytest.raises(SchemaError, match="image_format"):
            default_spec(preset_csv_dir / "fig1.csv", image_format="pdf")


class TestBuildFigure:
    def test_line_count_and_legend_order(self, preset_csv_dir):
        spec = default_spec(preset_csv_dir / "fig4.csv")
        fig, table = build_figure(spec)
        try:
            ax = fig.axes[0]
            assert len(ax.get_lines()) == 6
            legend_texts = [t.get_text() for t in ax.get_legend().get_texts()]
            assert legend_texts == list("abcdef")
        finally:
            plt.close(fig)

    def test_lossless_data_round_trip(self, preset_csv_dir):
        # the plotted arrays must equal the CSV values exactly
        for name in ("fig1", "fig3", "fig5"):
            path = preset_csv_dir / f"{name}.csv"
            table = load_sweep_csv(path)
            fig, _ = build_figure(default_spec(path))
            try:
                ax = fig.axes[0]
                for line, label in zip(ax.get_lines(), table.labels):
                    np.testing.assert_array_equal(line.get_xdata(), table.x)
                    np.testing.assert_array_equal(
                        line.get_ydata(), table.columns[label]
                    )
            finally:
                plt.close(fig)

    def test_label_mismatch_rejected(self, preset_csv_dir):
        spec = default_spec(preset_csv_dir / "fig1.csv")
        bad = FigureSpec(
            csv_path=spec.csv_path,
            x_label=spec.x_label,
            y_label=spec.y_label,
            curve_labels=("a", "b"),
            output_image_path=spec.output_image_path,
        )
        with pytest.raises(SchemaError, match="labels"):
            build_figure(bad)


class TestRender:
    @pytest.mark.parametrize("fmt,magic", [("png", b"\x89PNG"), ("svg", b"<?xml")])
    def test_writes_image(self, preset_csv_dir, tmp_path, fmt, magic):
        out = tmp_path / f"fig3.{fmt}"
        written = render(default_spec(preset_csv_dir / "fig3.csv", out, fmt))
        assert written == out
        assert out.read_bytes()[: len(magic)] == magic
