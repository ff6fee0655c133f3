"""Secondary acceptance gate: preset CSVs render with the expected curves."""
import subprocess
import sys
import time

import matplotlib.pyplot as plt


EXPECTED_CURVES = {"fig1": 4, "fig2": 4, "fig3": 4, "fig4": 6, "fig5": 6}


class TestSecondaryAcceptance:
    def test_preset_rendering(self, preset_csv_dir, tmp_path):
        name = ("secondary: preset CSVs render with labeled curve counts "
                "4/4/4/6/6; schema violation exits 2")
        start = time.perf_counter()
        try:
            from plotkit import build_figure, default_spec

            for preset, count in EXPECTED_CURVES.items():
                csv_path = preset_csv_dir / f"{preset}.csv"
                out = tmp_path / f"{preset}.png"
                proc = subprocess.run(
                    [sys.executable, "-m", "plotkit", "render", str(csv_path),
                     "--out", str(out)],
                    capture_output=True, text=True,
                )
                assert proc.returncode == 0, proc.stderr
                assert out.exists() and out.stat().st_size > 0
                fig, _ = build_figure(default_spec(csv_path))
                try:
                    ax = fig.axes[0]
                    assert len(ax.get_lines()) == count
                    labels = [t.get_text() for t in ax.get_legend().get_texts()]
                    assert labels == list("abcdef"[:count])
                finally:
                    plt.close(fig)

            bad = tmp_path / "broken.csv"
            bad.write_text("omega,a\n", encoding="utf-8")
            proc = subprocess.run(
                [sys.executable, "-m", "plotkit", "render", str(bad)],
                capture_output=True, text=True,
            )
            assert proc.returncode == 2
        except BaseException:
            print(f"[FAIL] {name}")
            raise
        print(f"[PASS] {name} ({time.perf_counter() - start:.2f}s)")
