"""Parameter sweeps, figure presets, and deterministic CSV emission.

A sweep varies either the pulse-1 peak nonlinear phase ``phi01 = 2 gamma1 *
n_bar0_1`` (holding the gamma ratios fixed and evaluating the spectrum at a
single frequency) or the reduced frequency ``omega`` (holding all parameters
fixed).  Each sweep carries one or more labeled curves, every curve being a
full parameter set.  For each curve the linear phase difference is set to
the optimum at the target frequency ``omega0`` — re-derived per point for
phi01 sweeps, once per curve for omega sweeps — and the resulting values are
emitted as a commented CSV whose bytes depend only on the configuration.

The bundled presets reproduce the squeezing study layouts: normalized
spectra versus peak phase for several intensity ratios (at omega0 = 0 and
1), versus frequency for the same ratios, and versus frequency for a ladder
of gamma2/gamma1 ratios at equal intensities.
"""
from __future__ import annotations

import configparser
import io
import math
from dataclasses import dataclass, replace
from pathlib import Path

from . import __version__
from .params import (
    MediumParams,
    PulseParams,
    constant_phase,
    gaussian_envelope,
    zero_phase,
)
from .optimize import optimal_phase
from .spectra import SPECTRUM_KINDS, spectrum_curve, spectrum_s2

SWEEP_VARIABLES = ("phi01", "omega")
PRESET_NAMES = ("fig1", "fig2", "fig3", "fig4", "fig5")

_REF_N_BAR = 1.0e6  # peak photon number used by all presets
_REF_PHI01 = 2.0  # peak nonlinear phase for the frequency-sweep presets
_GUARD_THRESHOLD = 0.1


class ConfigError(ValueError):
    """Invalid sweep configuration; message names the offending field."""


@dataclass(frozen=True)
class SweepSpec:
    """What to vary and where to evaluate.

    variable   : "phi01" or "omega"
    start/stop : inclusive sweep range (stop is included when it lands on
                 the step grid)
    step       : grid spacing, > 0
    omega_eval : evaluation frequency for phi01 sweeps (ignored otherwise)
    t          : evaluation time
    """

    variable: str
    start: float
    stop: float
    step: float
    omega_eval: float = 0.0
    t: float = 0.0

    def __post_init__(self) -> None:
        if self.variable not in SWEEP_VARIABLES:
            raise ConfigError(
                f"sweep.variable must be one of {SWEEP_VARIABLES} "
                f"(got {self.variable!r})"
            )
        if self.step <= 0.0:
            raise ConfigError(f"sweep.step must be > 0 (got {self.step})")
        if not self.start < self.stop:
            raise ConfigError(
                f"sweep.start must be < sweep.stop (got {self.start}, {self.stop})"
            )
        if self.variable == "phi01" and self.start < 0.0:
            raise ConfigError(f"sweep.start must be >= 0 (got {self.start})")
        if self.variable == "omega" and self.start < 0.0:
            raise ConfigError(f"sweep.start must be >= 0 (got {self.start})")

    def values(self) -> list[float]:
        # snap the count so stop is included despite float accumulation
        count = int(math.floor((self.stop - self.start) / self.step + 1e-9)) + 1
        return [self.start + i * self.step for i in range(count)]


@dataclass(frozen=True)
class CurveSpec:
    """One labeled curve: a fully resolved parameter set."""

    label: str
    medium: MediumParams
    pulse1: PulseParams
    pulse2: PulseParams


@dataclass(frozen=True)
class RunConfig:
    """Everything needed to produce one CSV."""

    sweep: SweepSpec
    curves: tuple[CurveSpec, ...]
    omega0: float = 0.0
    kind: str = "normalized"
    output_path: str = "sweep.csv"
    optimize_phase: bool = True

    def __post_init__(self) -> None:
        if self.kind not in SPECTRUM_KINDS:
            raise ConfigError(
                f"output.kind must be one of {SPECTRUM_KINDS} (got {self.kind!r})"
            )
        if not self.curves:
            raise ConfigError("at least one curve is required")
        labels = [c.label for c in self.curves]
        if len(set(labels)) != len(labels):
            raise ConfigError(f"curve labels must be unique (got {labels})")


@dataclass(frozen=True)
class SweepResult:
    """CSV text plus warnings the caller should surface."""

    csv_text: str
    warnings: tuple[str, ...] = ()
    path: Path | None = None


def _fmt(x: float) -> str:
    return format(x, ".12g")


def _phi01_medium(curve: CurveSpec, phi01: float) -> MediumParams:
    """Medium with gamma1 set from phi01, preserving the gamma ratios."""
    base = curve.medium
    if base.gamma1 <= 0.0:
        raise ConfigError(
            "medium.gamma1 must be > 0 for phi01 sweeps (it fixes the "
            "gamma2/gamma1 and gamma_xpm/gamma1 ratios)"
        )
    gamma1 = phi01 / (2.0 * curve.pulse1.n_bar0)
    scale = gamma1 / base.gamma1
    return MediumParams(
        gamma1, base.gamma2 * scale, base.gamma_xpm * scale, base.tau_r
    )


def _with_phases(curve: CurveSpec, delta_phi: float) -> tuple[PulseParams, PulseParams]:
    p1 = replace(curve.pulse1, linear_phase=constant_phase(delta_phi))
    p2 = replace(curve.pulse2, linear_phase=zero_phase)
    return p1, p2


def _curve_guard_warning(label: str, medium: MediumParams) -> str | None:
    if medium.within_approximation(_GUARD_THRESHOLD):
        return None
    worst = max(medium.gamma1, medium.gamma2, medium.gamma_xpm)
    return (
        f"curve {label}: nonlinear coefficient {worst:g} exceeds "
        f"{_GUARD_THRESHOLD}; closed forms assume weak nonlinearity, "
        "values may be unreliable"
    )


def run_sweep(config: RunConfig) -> SweepResult:
    """Evaluate all curves of a sweep and render the CSV text."""
    sweep = config.sweep
    values = sweep.values()
    warnings: list[str] = []
    columns: list[list[float]] = []
    phase_notes: list[str] = []

    for curve in config.curves:
        if curve.pulse1.n_bar0 <= 0.0 and config.kind == "normalized":
            raise ConfigError(
                f"pulse1.n_bar0 must be > 0 for normalized output "
                f"(curve {curve.label})"
            )
        if sweep.variable == "omega":
            medium = curve.medium
            if config.optimize_phase:
                opt = optimal_phase(
                    curve.pulse1, curve.pulse2, medium, config.omega0, sweep.t
                )
                p1, p2 = _with_phases(curve, opt.delta_phi_opt)
                phase_notes.append(
                    f"curve {curve.label}: delta_phi_opt={_fmt(opt.delta_phi_opt)}"
                    f" (optimized at omega0={_fmt(config.omega0)})"
                )
            else:
                p1, p2 = curve.pulse1, curve.pulse2
                phase_notes.append(f"curve {curve.label}: linear phases as given")
            curve_obj = spectrum_curve(
                p1, p2, medium, values, kind=config.kind, t=sweep.t
            )
            columns.append(list(curve_obj.values))
            guard = _curve_guard_warning(curve.label, medium)
        else:  # phi01 sweep
            col: list[float] = []
            worst_medium = _phi01_medium(curve, max(values) if values else 0.0)
            for phi01 in values:
                medium = _phi01_medium(curve, phi01)
                if config.optimize_phase:
                    opt = optimal_phase(
                        curve.pulse1, curve.pulse2, medium, config.omega0, sweep.t
                    )
                    p1, p2 = _with_phases(curve, opt.delta_phi_opt)
                else:
                    p1, p2 = curve.pulse1, curve.pulse2
                s = spectrum_s2(p1, p2, medium, sweep.omega_eval, sweep.t)
                if config.kind == "normalized":
                    s = (s - 1.0) / p1.n_bar(sweep.t)
                col.append(s)
            columns.append(col)
            if config.optimize_phase:
                phase_notes.append(
                    f"curve {curve.label}: delta_phi re-optimized at each point "
                    f"(omega0={_fmt(config.omega0)})"
                )
            else:
                phase_notes.append(f"curve {curve.label}: linear phases as given")
            guard = _curve_guard_warning(curve.label, worst_medium)
        if guard is not None:
            warnings.append(guard)

    text = _render_csv(config, values, columns, phase_notes)
    return SweepResult(text, tuple(warnings))


def _curve_param_comment(curve: CurveSpec, variable: str) -> str:
    m = curve.medium
    bits = [
        f"n1={_fmt(curve.pulse1.n_bar0)}",
        f"n2={_fmt(curve.pulse2.n_bar0)}",
    ]
    if variable == "phi01":
        bits += [
            f"gamma2/gamma1={_fmt(m.gamma2 / m.gamma1)}",
            f"gamma_xpm/gamma1={_fmt(m.gamma_xpm / m.gamma1)}",
            "gamma1=phi01/(2*n1)",
        ]
    else:
        bits += [
            f"gamma1={_fmt(m.gamma1)}",
            f"gamma2={_fmt(m.gamma2)}",
            f"gamma_xpm={_fmt(m.gamma_xpm)}",
        ]
    bits.append(f"tau_r={_fmt(m.tau_r)}")
    return " ".join(bits)


def _render_csv(
    config: RunConfig,
    values: list[float],
    columns: list[list[float]],
    phase_notes: list[str],
) -> str:
    sweep = config.sweep
    buf = io.StringIO()
    w = buf.write
    w(f"# stokes-squeeze {__version__}\n")
    w(f"# kind: {config.kind}\n")
    w(f"# t: {_fmt(sweep.t)}\n")
    w(f"# omega0: {_fmt(config.omega0)}\n")
    line = (
        f"# sweep: variable={sweep.variable} start={_fmt(sweep.start)} "
        f"stop={_fmt(sweep.stop)} step={_fmt(sweep.step)}"
    )
    if sweep.variable == "phi01":
        line += f" omega_eval={_fmt(sweep.omega_eval)}"
    w(line + "\n")
    for curve, note in zip(config.curves, phase_notes):
        w(f"# curve {curve.label}: {_curve_param_comment(curve, sweep.variable)}\n")
        w(f"# {note}\n")
    w(",".join([sweep.variable] + [c.label for c in config.curves]) + "\n")
    for i, v in enumerate(values):
        row = [_fmt(v)] + [_fmt(col[i]) for col in columns]
        w(",".join(row) + "\n")
    return buf.getvalue()


def write_result(result: SweepResult, path: str | Path) -> SweepResult:
    """Write CSV text with '\\n' endings and UTF-8 regardless of platform."""
    out = Path(path)
    with open(out, "w", encoding="utf-8", newline="") as fh:
        fh.write(result.csv_text)
    return SweepResult(result.csv_text, result.warnings, out)


# ---------------------------------------------------------------------------
# presets

_INTENSITY_RATIOS = (0.25, 0.5, 1.0, 3.0)  # n2/n1 for the intensity-ratio presets
_GAMMA2_RATIOS = (2.0, 3.0, 4.0, 5.0, 6.0, 7.0)  # gamma2/gamma1 ladder
_CURVE_LABELS = "abcdef"


def _ratio_curves(gamma1: float) -> tuple[CurveSpec, ...]:
    medium = MediumParams(gamma1, 4.0 * gamma1, 0.5 * gamma1)
    return tuple(
        CurveSpec(
            label=_CURVE_LABELS[i],
            medium=medium,
            pulse1=PulseParams(_REF_N_BAR),
            pulse2=PulseParams(_REF_N_BAR * ratio),
        )
        for i, ratio in enumerate(_INTENSITY_RATIOS)
    )


def _gamma_ladder_curves(gamma1: float) -> tuple[CurveSpec, ...]:
    return tuple(
        CurveSpec(
            label=_CURVE_LABELS[i],
            medium=MediumParams(gamma1, ratio * gamma1, 0.5 * gamma1),
            pulse1=PulseParams(_REF_N_BAR),
            pulse2=PulseParams(_REF_N_BAR),
        )
        for i, ratio in enumerate(_GAMMA2_RATIOS)
    )


def preset_run_config(
    name: str, step: float = 0.05, output_path: str | None = None
) -> RunConfig:
    """Build the RunConfig for a named preset.

    fig1/fig2: normalized minimum spectrum versus peak phase phi01 in
    (0, 4], four intensity ratios n2/n1 in {1/4, 1/2, 1, 3}, evaluated and
    optimized at omega = 0 (fig1) or optimized at omega0 = 1 (fig2).
    fig3: the same four ratios versus frequency on [0, 5] at phi01 = 2,
    phases optimized at omega0 = 0.  fig4/fig5: equal intensities, gamma2 /
    gamma1 in {2..7} versus frequency, omega0 = 0 (fig4) or 1 (fig5).
    """
    if name not in PRESET_NAMES:
        raise ConfigError(f"unknown preset {name!r}; choose from {PRESET_NAMES}")
    if step <= 0.0:
        raise ConfigError(f"sweep.step must be > 0 (got {step})")
    gamma1 = _REF_PHI01 / (2.0 * _REF_N_BAR)
    out = output_path if output_path is not None else f"{name}.csv"

    if name in ("fig1", "fig2"):
        sweep = SweepSpec("phi01", start=step, stop=4.0, step=step, omega_eval=0.0)
        return RunConfig(
            sweep=sweep,
            curves=_ratio_curves(gamma1),
            omega0=0.0 if name == "fig1" else 1.0,
            kind="normalized",
            output_path=out,
        )
    sweep = SweepSpec("omega", start=0.0, stop=5.0, step=step)
    if name == "fig3":
        curves = _ratio_curves(gamma1)
        omega0 = 0.0
    else:
        curves = _gamma_ladder_curves(gamma1)
        omega0 = 0.0 if name == "fig4" else 1.0
    return RunConfig(
        sweep=sweep,
        curves=curves,
        omega0=omega0,
        kind="normalized",
        output_path=out,
    )


def run_preset(
    name: str, step: float = 0.05, output_path: str | None = None
) -> SweepResult:
    """Run a named preset and write its CSV; returns text + warnings + path."""
    config = preset_run_config(name, step, output_path)
    result = run_sweep(config)
    return write_result(result, config.output_path)


def preset_config_ini(name: str, step: float = 0.05) -> str:
    """INI text that reproduces `run_preset(name, step)` byte for byte."""
    config = preset_run_config(name, step)
    sweep = config.sweep
    first = config.curves[0]
    lines = [
        "[medium]",
        f"gamma1 = {first.medium.gamma1!r}",
        f"gamma2 = {first.medium.gamma2!r}",
        f"gamma_xpm = {first.medium.gamma_xpm!r}",
        f"tau_r = {first.medium.tau_r!r}",
        "",
        "[pulse1]",
        f"n_bar0 = {first.pulse1.n_bar0!r}",
        "",
        "[pulse2]",
        f"n_bar0 = {first.pulse2.n_bar0!r}",
        "",
        "[sweep]",
        f"variable = {sweep.variable}",
        f"start = {sweep.start!r}",
        f"stop = {sweep.stop!r}",
        f"step = {sweep.step!r}",
    ]
    if sweep.variable == "phi01":
        lines.append(f"omega_eval = {sweep.omega_eval!r}")
    lines += [
        f"t = {sweep.t!r}",
        "",
        "[output]",
        f"path = {config.output_path}",
        f"kind = {config.kind}",
        f"omega0 = {config.omega0!r}",
        "",
    ]
    for curve in config.curves:
        lines.append(f"[curve:{curve.label}]")
        if curve.medium != first.medium:
            lines.append(f"medium.gamma2 = {curve.medium.gamma2!r}")
        if curve.pulse2.n_bar0 != first.pulse2.n_bar0:
            lines.append(f"pulse2.n_bar0 = {curve.pulse2.n_bar0!r}")
        if curve.pulse1.n_bar0 != first.pulse1.n_bar0:
            lines.append(f"pulse1.n_bar0 = {curve.pulse1.n_bar0!r}")
        lines.append("")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# INI configuration files

_ENVELOPE_KEY = "envelope"


def _parse_envelope(text: str, field_name: str):
    text = text.strip()
    if text == "const":
        return None  # dataclass default
    if text.startswith("gaussian:"):
        try:
            tau_p = float(text.split(":", 1)[1])
        except ValueError as exc:
            raise ConfigError(f"{field_name}: bad gaussian width {text!r}") from exc
        if tau_p <= 0.0:
            raise ConfigError(f"{field_name}: gaussian width must be > 0")
        return gaussian_envelope(tau_p)
    raise ConfigError(
        f"{field_name} must be 'const' or 'gaussian:<tau_p>' (got {text!r})"
    )


def _get_float(
    cp: configparser.ConfigParser,
    section: str,
    key: str,
    default: float | None = None,
) -> float:
    if not cp.has_option(section, key):
        if default is None:
            raise ConfigError(f"{section}.{key} is required")
        return default
    raw = cp.get(section, key)
    try:
        return float(raw)
    except ValueError as exc:
        raise ConfigError(f"{section}.{key} must be a number (got {raw!r})") from exc


def _parse_pulse(cp: configparser.ConfigParser, section: str) -> PulseParams:
    n_bar0 = _get_float(cp, section, "n_bar0")
    kwargs = {}
    if cp.has_option(section, _ENVELOPE_KEY):
        env = _parse_envelope(cp.get(section, _ENVELOPE_KEY), f"{section}.envelope")
        if env is not None:
            kwargs["envelope"] = env
    if cp.has_option(section, "linear_phase"):
        kwargs["linear_phase"] = constant_phase(
            _get_float(cp, section, "linear_phase")
        )
    try:
        return PulseParams(n_bar0, **kwargs)
    except ValueError as exc:
        raise ConfigError(f"{section}: {exc}") from exc


_OVERRIDE_KEYS = {
    "medium.gamma1",
    "medium.gamma2",
    "medium.gamma_xpm",
    "medium.tau_r",
    "pulse1.n_bar0",
    "pulse1.linear_phase",
    "pulse2.n_bar0",
    "pulse2.linear_phase",
}


def _apply_overrides(
    cp: configparser.ConfigParser,
    section: str,
    medium: MediumParams,
    pulse1: PulseParams,
    pulse2: PulseParams,
) -> tuple[MediumParams, PulseParams, PulseParams]:
    for key in cp.options(section):
        if key not in _OVERRIDE_KEYS:
            raise ConfigError(
                f"{section}.{key}: unknown override "
                f"(allowed: {sorted(_OVERRIDE_KEYS)})"
            )
        value = _get_float(cp, section, key)
        target, attr = key.split(".", 1)
        try:
            if target == "medium":
                medium = replace(medium, **{attr: value})
            elif target == "pulse1":
                if attr == "linear_phase":
                    pulse1 = replace(pulse1, linear_phase=constant_phase(value))
                else:
                    pulse1 = replace(pulse1, **{attr: value})
            else:
                if attr == "linear_phase":
                    pulse2 = replace(pulse2, linear_phase=constant_phase(value))
                else:
                    pulse2 = replace(pulse2, **{attr: value})
        except ValueError as exc:
            raise ConfigError(f"{section}.{key}: {exc}") from exc
    return medium, pulse1, pulse2


def parse_config(path: str | Path) -> RunConfig:
    """Parse an INI sweep configuration into a RunConfig.

    Required sections: [medium] (gamma1, gamma2, gamma_xpm, optional tau_r),
    [pulse1]/[pulse2] (n_bar0, optional envelope 'const'|'gaussian:<tau_p>',
    optional constant linear_phase), [sweep] (variable, start, stop, step,
    optional omega_eval and t).  Optional [output] (path, kind, omega0,
    optimize 'yes'|'no') and any number of [curve:<label>] override sections
    whose keys look like 'pulse2.n_bar0'.  Without curve sections a single
    curve labeled 'a' is produced from the base parameters.
    """
    cp = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    try:
        read = cp.read(path, encoding="utf-8")
    except configparser.Error as exc:
        raise ConfigError(f"config parse error: {exc}") from exc
    if not read:
        raise ConfigError(f"config file not found or unreadable: {path}")

    for section in ("medium", "pulse1", "pulse2", "sweep"):
        if not cp.has_section(section):
            raise ConfigError(f"missing required section [{section}]")

    try:
        medium = MediumParams(
            gamma1=_get_float(cp, "medium", "gamma1"),
            gamma2=_get_float(cp, "medium", "gamma2"),
            gamma_xpm=_get_float(cp, "medium", "gamma_xpm"),
            tau_r=_get_float(cp, "medium", "tau_r", default=1.0),
        )
    except ValueError as exc:
        raise ConfigError(f"medium: {exc}") from exc
    pulse1 = _parse_pulse(cp, "pulse1")
    pulse2 = _parse_pulse(cp, "pulse2")

    variable = cp.get("sweep", "variable", fallback=None)
    if variable is None:
        raise ConfigError("sweep.variable is required")
    sweep = SweepSpec(
        variable=variable.strip(),
        start=_get_float(cp, "sweep", "start"),
        stop=_get_float(cp, "sweep", "stop"),
        step=_get_float(cp, "sweep", "step"),
        omega_eval=_get_float(cp, "sweep", "omega_eval", default=0.0),
        t=_get_float(cp, "sweep", "t", default=0.0),
    )

    out_path = "sweep.csv"
    kind = "normalized"
    omega0 = 0.0
    optimize = True
    if cp.has_section("output"):
        out_path = cp.get("output", "path", fallback=out_path).strip()
        kind = cp.get("output", "kind", fallback=kind).strip()
        omega0 = _get_float(cp, "output", "omega0", default=omega0)
        if cp.has_option("output", "optimize"):
            raw = cp.get("output", "optimize").strip().lower()
            if raw not in ("yes", "no"):
                raise ConfigError(f"output.optimize must be yes or no (got {raw!r})")
            optimize = raw == "yes"

    curve_sections = [s for s in cp.sections() if s.startswith("curve:")]
    curves: list[CurveSpec] = []
    if curve_sections:
        for section in curve_sections:
            label = section.split(":", 1)[1].strip()
            if not label:
                raise ConfigError(f"[{section}]: empty curve label")
            m, p1, p2 = _apply_overrides(cp, section, medium, pulse1, pulse2)
            curves.append(CurveSpec(label, m, p1, p2))
    else:
        curves.append(CurveSpec("a", medium, pulse1, pulse2))

    return RunConfig(
        sweep=sweep,
        curves=tuple(curves),
        omega0=omega0,
        kind=kind,
        output_path=out_path,
        optimize_phase=optimize,
    )


def run_config(path: str | Path, output_override: str | None = None) -> SweepResult:
    """Run the sweep described by an INI file and write its CSV."""
    config = parse_config(path)
    result = run_sweep(config)
    out = output_override if output_override is not None else config.output_path
    return write_result(result, out)
