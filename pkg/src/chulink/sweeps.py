"""Sweep experiments over distance, size, and bandwidth, with CSV output.

Each driver resolves an ExperimentConfig into physical quantities, runs one
sweep, and returns a SweepTable whose metadata echoes the full resolved
configuration, so a table can be reproduced from its own header block.
Distances and antenna radii are specified electrically (in wavelengths at
the reference frequency) and resolved to meters here.
"""

import json
import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .channel import LinkModel, RfChain, channel_gain_sq, noise_psd
from .constants import CONSTANTS
from .coupling import COLINEAR, PARALLEL, LinkGeometry, OrientationPreset, assemble_two_port
from .em import AntennaSpec
from .errors import GeometryError
from .rate import Band, PowerBudget, rate_opa, rate_uniform, waterfill

__all__ = [
    "ExperimentConfig",
    "SweepTable",
    "default_config",
    "run_snr_vs_distance",
    "run_rate_vs_size",
    "run_rate_vs_bandwidth",
    "run_opa_comparison",
    "run_point",
    "format_csv",
    "emit_csv",
    "read_csv",
]

_REGIMES = ("auto", "near_field", "far_field")


def _jsonable(value):
    """Round any nested value through JSON so tables compare structurally."""
    return json.loads(json.dumps(value, default=lambda v: v.item() if hasattr(v, "item") else str(v)))


@dataclass(frozen=True)
class ExperimentConfig:
    """Resolved-unit-free description of one sweep experiment.

    Electrical inputs (lambda_over_a, d_over_lambda, sweep bounds) are turned
    into meters at the experiment's reference wavelength: c / f_center for
    carrier-band sweeps, c / f_min for bandwidth-ratio sweeps.
    """

    # antennas: one shared electrical size, or explicit radii in meters
    lambda_over_a: float = 20.0
    radius_t: float | None = None
    radius_r: float | None = None
    resistance_t: float = 50.0
    resistance_r: float = 50.0
    # orientation, used by single-point runs; sweeps always cover both presets
    orientation: str = "colinear"
    beta: float | None = None
    gamma: float | None = None
    # receive chain
    generator_r: float = 50.0
    lna_input_r: float = 50.0
    lna_gain: float = 10.0
    noise_figure_db: float = 5.0
    temperature: float = 300.0
    # band: carrier form (f_center, bandwidth_fraction) or ratio form (f_min)
    f_center: float = 25e9
    bandwidth_fraction: float = 0.2
    f_min: float | None = None
    # budget and coupling model
    p_max: float = 10e-3
    regime: str = "auto"
    # geometry when not swept
    d_over_lambda: float | None = None
    # sweep axis
    sweep_lo: float = 0.1
    sweep_hi: float = 1.0
    sweep_points: int = 201
    # distance panels of the size sweep: (d_over_lambda, regime) pairs
    size_distances: tuple = ((0.15, "near_field"), (0.45, "near_field"), (2.0, "far_field"))
    # numerics
    freq_grid_points: int = 2001
    normalization: str = "center"

    def __post_init__(self):
        if self.radius_t is None or self.radius_r is None:
            if not (self.lambda_over_a > 0):
                raise ValueError(f"lambda_over_a must be positive, got {self.lambda_over_a}")
        if self.orientation not in ("colinear", "parallel", "custom"):
            raise ValueError(f"unknown orientation {self.orientation!r}")
        if self.regime not in _REGIMES:
            raise ValueError(f"unknown regime {self.regime!r}")
        if self.normalization not in ("center", "peak"):
            raise ValueError(f"unknown normalization {self.normalization!r}")
        if not (self.f_center > 0):
            raise ValueError(f"f_center must be positive, got {self.f_center}")
        if not (0 < self.bandwidth_fraction < 2):
            raise ValueError(f"bandwidth_fraction must sit in (0, 2), got {self.bandwidth_fraction}")
        if self.f_min is not None and not (self.f_min > 0):
            raise ValueError(f"f_min must be positive, got {self.f_min}")
        if not (self.p_max > 0):
            raise ValueError(f"p_max must be positive, got {self.p_max}")
        if not (self.noise_figure_db >= 0):
            raise ValueError(f"noise_figure_db must be >= 0, got {self.noise_figure_db}")
        if not (self.temperature > 0):
            raise ValueError(f"temperature must be positive, got {self.temperature}")
        if self.sweep_points < 0:
            raise ValueError(f"sweep_points must be >= 0, got {self.sweep_points}")
        if self.freq_grid_points < 3 or self.freq_grid_points % 2 == 0:
            raise ValueError(f"freq_grid_points must be odd and >= 3, got {self.freq_grid_points}")
        for pair in self.size_distances:
            if len(pair) != 2 or pair[1] not in ("near_field", "far_field"):
                raise ValueError(f"bad size-distance panel {pair!r}")

    def to_dict(self) -> dict:
        return _jsonable(asdict(self))

    @classmethod
    def from_dict(cls, data: dict) -> "ExperimentConfig":
        known = set(cls.__dataclass_fields__)
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        data = dict(data)
        if "size_distances" in data:
            data["size_distances"] = tuple(tuple(p) for p in data["size_distances"])
        return cls(**data)

    # resolved quantities ------------------------------------------------

    def rf_chain(self) -> RfChain:
        return RfChain(
            generator_r=self.generator_r,
            lna_input_r=self.lna_input_r,
            lna_gain=self.lna_gain,
            noise_figure=10.0 ** (self.noise_figure_db / 10.0),
            temperature=self.temperature,
        )

    def reference_frequency(self) -> float:
        return self.f_min if self.f_min is not None else self.f_center

    def reference_wavelength(self) -> float:
        return CONSTANTS.c / self.reference_frequency()

    def antennas(self) -> tuple[AntennaSpec, AntennaSpec]:
        lam = self.reference_wavelength()
        a_t = self.radius_t if self.radius_t is not None else lam / self.lambda_over_a
        a_r = self.radius_r if self.radius_r is not None else lam / self.lambda_over_a
        return (
            AntennaSpec(radius=a_t, resistance=self.resistance_t),
            AntennaSpec(radius=a_r, resistance=self.resistance_r),
        )

    def carrier_band(self) -> Band:
        half = 0.5 * self.bandwidth_fraction * self.f_center
        return Band(self.f_center - half, self.f_center + half, self.freq_grid_points)

    def orientation_preset(self) -> OrientationPreset:
        if self.orientation == "custom":
            return OrientationPreset("custom", self.beta, self.gamma)
        return OrientationPreset(self.orientation)

    def resolved_metadata(self, experiment: str) -> dict:
        ant_t, ant_r = self.antennas()
        meta = {
            "experiment": experiment,
            "config": self.to_dict(),
            "resolved": {
                "reference_frequency_hz": self.reference_frequency(),
                "reference_wavelength_m": self.reference_wavelength(),
                "radius_t_m": ant_t.radius,
                "radius_r_m": ant_r.radius,
                "noise_figure_linear": 10.0 ** (self.noise_figure_db / 10.0),
            },
        }
        return meta


@dataclass
class SweepTable:
    """Named columns of equal length plus a metadata echo block."""

    columns: dict
    metadata: dict

    def __post_init__(self):
        self.columns = {name: np.asarray(col) for name, col in self.columns.items()}
        lengths = {col.shape[0] if col.ndim else 1 for col in self.columns.values()}
        if len(lengths) > 1:
            raise ValueError(f"columns differ in length: {sorted(lengths)}")
        self.metadata = _jsonable(self.metadata)

    @property
    def n_rows(self) -> int:
        if not self.columns:
            return 0
        return next(iter(self.columns.values())).shape[0]


def default_config(experiment: str) -> ExperimentConfig:
    """Default configuration for each named experiment."""
    if experiment == "snr-distance":
        return ExperimentConfig(sweep_lo=0.1, sweep_hi=1.0, sweep_points=201)
    if experiment == "rate-size":
        return ExperimentConfig(sweep_lo=0.01, sweep_hi=0.07, sweep_points=201)
    if experiment == "rate-bandwidth":
        return ExperimentConfig(
            f_min=5e9,
            p_max=1e-4,
            d_over_lambda=0.1,
            regime="near_field",
            sweep_lo=1.1,
            sweep_hi=80.0,
            sweep_points=201,
        )
    if experiment == "opa-compare-nf":
        # lna_gain recalibrated downward so the sweep reaches the low-SNR
        # region where water-filling separates from uniform allocation
        return ExperimentConfig(
            regime="near_field", lna_gain=1e-3, sweep_lo=0.1, sweep_hi=0.5, sweep_points=201
        )
    if experiment == "opa-compare-ff":
        return ExperimentConfig(
            regime="far_field", lna_gain=1e-3, sweep_lo=0.5, sweep_hi=30.0, sweep_points=201
        )
    if experiment == "point":
        return ExperimentConfig(d_over_lambda=0.3, sweep_points=1)
    raise ValueError(f"unknown experiment {experiment!r}")


def _check_separation(d: float, ant_t: AntennaSpec, ant_r: AntennaSpec, label: str):
    if d < (ant_t.radius + ant_r.radius) * (1.0 - 1e-12):
        raise GeometryError(
            f"{label}: separation {d:.6g} m is inside the contact distance "
            f"{ant_t.radius + ant_r.radius:.6g} m"
        )


def run_snr_vs_distance(cfg: ExperimentConfig) -> SweepTable:
    """SNR at the carrier against electrical separation, both presets.

    Columns report the reciprocal near-field SNR for the colinear and
    parallel arrangements plus the orientation-free far-field-model SNR.
    The colinear/parallel crossover separation, located by the first sign
    change of the SNR difference, lands in the metadata.
    """
    ant_t, ant_r = cfg.antennas()
    lam = cfg.reference_wavelength()
    band = cfg.carrier_band()
    pt_density = cfg.p_max / band.width
    rf = cfg.rf_chain()
    f_c = cfg.f_center
    d_grid = np.linspace(cfg.sweep_lo, cfg.sweep_hi, cfg.sweep_points)

    def snr_at(f, d, preset, regime):
        beta, gamma = preset.angles
        model = LinkModel(ant_t, ant_r, LinkGeometry(d, beta, gamma), rf, regime)
        z = model.two_port(f)
        return pt_density * channel_gain_sq(z, rf) / noise_psd(z, rf)

    snr_col = np.empty(cfg.sweep_points)
    snr_par = np.empty(cfg.sweep_points)
    snr_ff = np.empty(cfg.sweep_points)
    peak_norm = np.empty(cfg.sweep_points)
    for i, dol in enumerate(d_grid):
        d = dol * lam
        _check_separation(d, ant_t, ant_r, f"sweep point {i} (d/lambda = {dol:.6g})")
        snr_col[i] = snr_at(f_c, d, COLINEAR, "near_field")
        snr_par[i] = snr_at(f_c, d, PARALLEL, "near_field")
        snr_ff[i] = snr_at(f_c, d, PARALLEL, "far_field")
        if cfg.normalization == "peak":
            freq = band.grid()
            best = np.maximum(
                snr_at(freq, d, COLINEAR, "near_field"), snr_at(freq, d, PARALLEL, "near_field")
            )
            peak_norm[i] = d * freq[int(np.argmax(best))] / CONSTANTS.c

    crossover = None
    diff = snr_col - snr_par
    for i in range(cfg.sweep_points - 1):
        if diff[i] == 0.0:
            crossover = float(d_grid[i])
            break
        if diff[i] * diff[i + 1] < 0.0:
            frac = diff[i] / (diff[i] - diff[i + 1])
            crossover = float(d_grid[i] + frac * (d_grid[i + 1] - d_grid[i]))
            break

    columns = {
        "d_over_lambda": d_grid,
        "snr_db_colinear": 10.0 * np.log10(snr_col),
        "snr_db_parallel": 10.0 * np.log10(snr_par),
        "snr_db_far_field": 10.0 * np.log10(snr_ff),
        "regime": np.full(cfg.sweep_points, "near_field"),
    }
    if cfg.normalization == "peak":
        columns["d_over_lambda_peak"] = peak_norm
    meta = cfg.resolved_metadata("snr-distance")
    meta["crossover_d_over_lambda"] = crossover
    return SweepTable(columns, meta)


def _panel_tag(dol: float) -> str:
    return ("d%.2f" % dol).replace(".", "p")


def run_rate_vs_size(cfg: ExperimentConfig) -> SweepTable:
    """Uniform-allocation rate against electrical antenna size.

    One pair of columns (colinear, parallel) per configured distance panel;
    each panel carries its own coupling regime so far panels can use the
    unilateral model.
    """
    lam = cfg.reference_wavelength()
    band = cfg.carrier_band()
    budget = PowerBudget(cfg.p_max)
    rf = cfg.rf_chain()
    sizes = np.linspace(cfg.sweep_lo, cfg.sweep_hi, cfg.sweep_points)

    columns = {"a_over_lambda": sizes}
    for dol, regime in cfg.size_distances:
        for preset in (COLINEAR, PARALLEL):
            key = f"rate_{preset.tag}_{_panel_tag(dol)}"
            rates = np.empty(cfg.sweep_points)
            beta, gamma = preset.angles
            for i, aol in enumerate(sizes):
                ant = AntennaSpec(radius=aol * lam, resistance=cfg.resistance_t)
                ant_r = AntennaSpec(radius=aol * lam, resistance=cfg.resistance_r)
                d = dol * lam
                _check_separation(
                    d, ant, ant_r, f"sweep point {i} (a/lambda = {aol:.6g}, d/lambda = {dol:.6g})"
                )
                model = LinkModel(ant, ant_r, LinkGeometry(d, beta, gamma), rf, regime)
                rates[i] = rate_uniform(band, budget, model)
            columns[key] = rates
    meta = cfg.resolved_metadata("rate-size")
    meta["distance_panels"] = [list(p) for p in cfg.size_distances]
    return SweepTable(columns, meta)


def run_rate_vs_bandwidth(cfg: ExperimentConfig) -> SweepTable:
    """Uniform-allocation rate against bandwidth ratio f_max / f_min.

    The physical geometry is frozen at the f_min wavelength while the band
    upper edge sweeps, so wider ratios add increasingly mismatched spectrum.
    Reports the rate-maximizing ratio per preset in the metadata.
    """
    if cfg.f_min is None:
        raise ValueError("rate-bandwidth sweep needs f_min")
    if cfg.d_over_lambda is None:
        raise ValueError("rate-bandwidth sweep needs d_over_lambda")
    if not (cfg.sweep_lo > 1.0):
        raise ValueError(f"bandwidth ratios must exceed 1, got sweep_lo = {cfg.sweep_lo}")
    ant_t, ant_r = cfg.antennas()
    lam = cfg.reference_wavelength()
    d = cfg.d_over_lambda * lam
    _check_separation(d, ant_t, ant_r, f"fixed separation d/lambda = {cfg.d_over_lambda:.6g}")
    budget = PowerBudget(cfg.p_max)
    rf = cfg.rf_chain()
    ratios = np.linspace(cfg.sweep_lo, cfg.sweep_hi, cfg.sweep_points)

    rates = {}
    for preset in (COLINEAR, PARALLEL):
        beta, gamma = preset.angles
        model = LinkModel(ant_t, ant_r, LinkGeometry(d, beta, gamma), rf, cfg.regime)
        vals = np.empty(cfg.sweep_points)
        for i, ratio in enumerate(ratios):
            band = Band(cfg.f_min, ratio * cfg.f_min, cfg.freq_grid_points)
            vals[i] = rate_uniform(band, budget, model)
        rates[preset.tag] = vals

    meta = cfg.resolved_metadata("rate-bandwidth")
    for tag, vals in rates.items():
        meta[f"argmax_ratio_{tag}"] = float(ratios[int(np.argmax(vals))]) if len(vals) else None
    columns = {
        "ratio": ratios,
        "rate_colinear": rates["colinear"],
        "rate_parallel": rates["parallel"],
        "regime": np.full(cfg.sweep_points, cfg.regime),
    }
    return SweepTable(columns, meta)


def run_opa_comparison(cfg: ExperimentConfig) -> SweepTable:
    """Uniform versus water-filled rate against electrical separation."""
    ant_t, ant_r = cfg.antennas()
    lam = cfg.reference_wavelength()
    band = cfg.carrier_band()
    budget = PowerBudget(cfg.p_max)
    rf = cfg.rf_chain()
    d_grid = np.linspace(cfg.sweep_lo, cfg.sweep_hi, cfg.sweep_points)

    out = {
        "rate_uniform_colinear": np.empty(cfg.sweep_points),
        "rate_opa_colinear": np.empty(cfg.sweep_points),
        "rate_uniform_parallel": np.empty(cfg.sweep_points),
        "rate_opa_parallel": np.empty(cfg.sweep_points),
    }
    for i, dol in enumerate(d_grid):
        d = dol * lam
        _check_separation(d, ant_t, ant_r, f"sweep point {i} (d/lambda = {dol:.6g})")
        for preset in (COLINEAR, PARALLEL):
            beta, gamma = preset.angles
            model = LinkModel(ant_t, ant_r, LinkGeometry(d, beta, gamma), rf, cfg.regime)
            out[f"rate_uniform_{preset.tag}"][i] = rate_uniform(band, budget, model)
            out[f"rate_opa_{preset.tag}"][i] = rate_opa(band, budget, model)

    gain_col = out["rate_opa_colinear"] / out["rate_uniform_colinear"]
    gain_par = out["rate_opa_parallel"] / out["rate_uniform_parallel"]
    meta = cfg.resolved_metadata("opa-compare")
    meta["max_gain_colinear"] = float(np.max(gain_col)) if len(gain_col) else None
    meta["max_gain_parallel"] = float(np.max(gain_par)) if len(gain_par) else None
    columns = {
        "d_over_lambda": d_grid,
        **out,
        "gain_colinear": gain_col,
        "gain_parallel": gain_par,
        "regime": np.full(cfg.sweep_points, cfg.regime),
    }
    return SweepTable(columns, meta)


def run_point(cfg: ExperimentConfig) -> SweepTable:
    """Single-configuration dump: impedance matrix, gain, noise, SNR, rates."""
    if cfg.d_over_lambda is None:
        raise ValueError("point evaluation needs d_over_lambda")
    ant_t, ant_r = cfg.antennas()
    lam = cfg.reference_wavelength()
    d = cfg.d_over_lambda * lam
    _check_separation(d, ant_t, ant_r, f"separation d/lambda = {cfg.d_over_lambda:.6g}")
    beta, gamma = cfg.orientation_preset().angles
    geometry = LinkGeometry(d, beta, gamma)
    rf = cfg.rf_chain()
    band = cfg.carrier_band()
    model = LinkModel(ant_t, ant_r, geometry, rf, cfg.regime)

    f_c = cfg.f_center
    z = assemble_two_port(f_c, ant_t, ant_r, geometry, cfg.regime)
    g = float(channel_gain_sq(z, rf))
    n = float(noise_psd(z, rf))
    pt_density = cfg.p_max / band.width
    budget = PowerBudget(cfg.p_max)

    columns = {
        "f_hz": np.array([f_c]),
        "d_over_lambda": np.array([cfg.d_over_lambda]),
        "z_t_re": np.array([float(z.z_t.re)]),
        "z_t_im": np.array([float(z.z_t.im)]),
        "z_r_re": np.array([float(z.z_r.re)]),
        "z_r_im": np.array([float(z.z_r.im)]),
        "z_rt_re": np.array([float(z.z_rt.re)]),
        "z_rt_im": np.array([float(z.z_rt.im)]),
        "z_tr_re": np.array([float(z.z_tr.re)]),
        "z_tr_im": np.array([float(z.z_tr.im)]),
        "h_gain_sq": np.array([g]),
        "noise_psd_w_per_hz": np.array([n]),
        "snr_db": np.array([10.0 * math.log10(pt_density * g / n)]),
        "rate_uniform_bits_s": np.array([rate_uniform(band, budget, model)]),
        "rate_opa_bits_s": np.array([rate_opa(band, budget, model)]),
        "regime": np.array([z.regime]),
    }
    return SweepTable(columns, cfg.resolved_metadata("point"))


# CSV serialization -------------------------------------------------------


def _format_cell(value) -> str:
    if isinstance(value, (str, np.str_)):
        text = str(value)
        if "," in text or "\n" in text or "#" in text:
            raise ValueError(f"cell value {text!r} cannot be stored in a plain CSV")
        return text
    return format(float(value), ".17g")


def format_csv(table: SweepTable) -> str:
    """Render a table with a '#'-prefixed metadata block and 17-digit floats."""
    lines = [f"# {key} = {json.dumps(val, sort_keys=True)}" for key, val in table.metadata.items()]
    names = list(table.columns)
    lines.append(",".join(names))
    for i in range(table.n_rows):
        lines.append(",".join(_format_cell(table.columns[name][i]) for name in names))
    return "\n".join(lines) + "\n"


def emit_csv(table: SweepTable, path) -> None:
    text = format_csv(table)
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(text)


def read_csv(path) -> SweepTable:
    """Parse a table written by emit_csv back into an equal SweepTable."""
    with open(path, "r", encoding="utf-8", newline="") as handle:
        lines = handle.read().splitlines()
    metadata = {}
    body = []
    for line in lines:
        if line.startswith("# "):
            key, _, raw = line[2:].partition(" = ")
            if not raw:
                raise ValueError(f"malformed metadata line: {line!r}")
            metadata[key] = json.loads(raw)
        elif line:
            body.append(line)
    if not body:
        raise ValueError("missing CSV header row")
    names = body[0].split(",")
    rows = [line.split(",") for line in body[1:]]
    for row in rows:
        if len(row) != len(names):
            raise ValueError(f"row has {len(row)} cells, expected {len(names)}")
    columns = {}
    for j, name in enumerate(names):
        cells = [row[j] for row in rows]
        try:
            columns[name] = np.array([float(c) for c in cells])
        except ValueError:
            columns[name] = np.array(cells)
    return SweepTable(columns, metadata)
