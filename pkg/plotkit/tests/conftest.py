import subprocess
import sys

import pytest

PRESETS = ("fig1", "fig2", "fig3", "fig4", "fig5")


@pytest.fixture(scope="session")
def preset_csv_dir(tmp_path_factory):
    """Preset CSVs produced through the generator's public CLI.

    plotkit consumes only the CSV files; generating them via subprocess
    keeps that boundary honest.
    """
    out = tmp_path_factory.mktemp("preset_csvs")
    for name in PRESETS:
        proc = subprocess.run(
            [sys.executable, "-m", "stokes_squeeze", "preset", name,
             "--out", str(out / f"{name}.csv")],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0, proc.stderr
    return out
