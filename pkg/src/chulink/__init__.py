"""Physically consistent rate limits for electrically small radio links.

The package models both antennas of a short-range link as spherical-mode
radiators behind their minimum-Q matching networks, couples them with a
reciprocal two-port whose mutual impedance stays valid well inside the
near field, and integrates the resulting frequency-selective SNR into
achievable rates under uniform and water-filled power allocation.
"""

from .channel import (
    LinkModel,
    LinkPoint,
    NoisePsdSet,
    RfChain,
    SpectralCurve,
    channel_gain_sq,
    evaluate_link,
    noise_psd,
    noise_psds,
    snr_curve,
    xy_terms,
)
from .constants import CONSTANTS, PhysicalConstants
from .coupling import (
    COLINEAR,
    PARALLEL,
    FarFieldGains,
    LinkGeometry,
    OrientationPreset,
    TwoPortZ,
    assemble_two_port,
    chu_ff_mutual_impedance,
    chu_nf_mutual_impedance,
    hertz_mutual_impedance,
    oc_voltage_projection,
)
from .em import (
    AntennaSpec,
    ComplexOhm,
    FieldPoint,
    ModeCoefficient,
    chu_self_impedance,
    chu_tm1_fields,
    hertz_fields,
    hertz_radiation_resistance,
    radiated_power_sphere,
    tm1_coefficient,
    wavenumber,
)
from .errors import GeometryError, NumericalError
from .rate import Band, PowerBudget, WaterfillSolution, rate_opa, rate_uniform, waterfill
from .sweeps import (
    ExperimentConfig,
    SweepTable,
    default_config,
    emit_csv,
    format_csv,
    read_csv,
    run_opa_comparison,
    run_point,
    run_rate_vs_bandwidth,
    run_rate_vs_size,
    run_snr_vs_distance,
)

__version__ = "0.1.0"

__all__ = [
    "AntennaSpec",
    "Band",
    "COLINEAR",
    "CONSTANTS",
    "ComplexOhm",
    "ExperimentConfig",
    "FarFieldGains",
    "FieldPoint",
    "GeometryError",
    "LinkGeometry",
    "LinkModel",
    "LinkPoint",
    "ModeCoefficient",
    "NoisePsdSet",
    "NumericalError",
    "OrientationPreset",
    "PARALLEL",
    "PhysicalConstants",
    "PowerBudget",
    "RfChain",
    "SpectralCurve",
    "SweepTable",
    "TwoPortZ",
    "WaterfillSolution",
    "assemble_two_port",
    "channel_gain_sq",
    "chu_ff_mutual_impedance",
    "chu_nf_mutual_impedance",
    "chu_self_impedance",
    "chu_tm1_fields",
    "default_config",
    "emit_csv",
    "evaluate_link",
    "format_csv",
    "hertz_fields",
    "hertz_mutual_impedance",
    "hertz_radiation_resistance",
    "noise_psd",
    "noise_psds",
    "oc_voltage_projection",
    "radiated_power_sphere",
    "rate_opa",
    "rate_uniform",
    "read_csv",
    "run_opa_comparison",
    "run_point",
    "run_rate_vs_bandwidth",
    "run_rate_vs_size",
    "run_snr_vs_distance",
    "snr_curve",
    "tm1_coefficient",
    "wavenumber",
    "waterfill",
    "xy_terms",
]
