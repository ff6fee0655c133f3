"""Quantum Stokes-parameter statistics of two polarized pulses in a Kerr medium.

Closed-form means, fluctuation spectra, and optimal linear phase settings
for two orthogonally polarized coherent pulses coupled by self- and
cross-phase modulation in a lossless electronic Kerr medium, plus an
independent numerical route (correlation quadrature, brute-force phase
scans) used to validate every closed form.
"""

__version__ = "0.1.0"

from .params import (
    DerivedPhases,
    MediumParams,
    PulseParams,
    constant_envelope,
    constant_phase,
    correlator_g,
    derived_phases,
    gaussian_envelope,
    lorentzian,
    response_h,
    zero_phase,
)
from .stokes import (
    StokesMeans,
    mean_s0_s1,
    mean_s2_s3,
    polarization_degree,
    stokes_means,
)
from .spectra import (
    CorrelationSample,
    SpectrumCurve,
    correlation_s2,
    correlation_s3,
    noise_coefficients,
    normalized_variance,
    spectrum_curve,
    spectrum_s2,
    spectrum_s3,
)
from .oracle import (
    QuadratureConvergenceError,
    QuadratureSpec,
    transform_g,
    transform_h,
    wiener_khintchine,
)
from .optimize import (
    Optimum,
    golden_section_min,
    minimum_spectrum_value,
    numeric_minimum,
    optimal_phase,
    phase_objective,
)
from .presets import (
    PRESET_NAMES,
    ConfigError,
    CurveSpec,
    RunConfig,
    SweepResult,
    SweepSpec,
    parse_config,
    preset_config_ini,
    preset_run_config,
    run_config,
    run_preset,
    run_sweep,
    write_result,
)

__all__ = [
    "__version__",
    "DerivedPhases",
    "MediumParams",
    "PulseParams",
    "constant_envelope",
    "constant_phase",
    "correlator_g",
    "derived_phases",
    "gaussian_envelope",
    "lorentzian",
    "response_h",
    "zero_phase",
    "StokesMeans",
    "mean_s0_s1",
    "mean_s2_s3",
    "polarization_degree",
    "stokes_means",
    "CorrelationSample",
    "SpectrumCurve",
    "correlation_s2",
    "correlation_s3",
    "noise_coefficients",
    "normalized_variance",
    "spectrum_curve",
    "spectrum_s2",
    "spectrum_s3",
    "QuadratureConvergenceError",
    "QuadratureSpec",
    "transform_g",
    "transform_h",
    "wiener_khintchine",
    "Optimum",
    "golden_section_min",
    "minimum_spectrum_value",
    "numeric_minimum",
    "optimal_phase",
    "phase_objective",
    "PRESET_NAMES",
    "ConfigError",
    "CurveSpec",
    "RunConfig",
    "SweepResult",
    "SweepSpec",
    "parse_config",
    "preset_config_ini",
    "preset_run_config",
    "run_config",
    "run_preset",
    "run_sweep",
    "write_result",
]
