"""Receive chain, channel gain, and colored noise of the coupled link.

The generator (resistance R) drives the transmit port; the receive port is
loaded by an LNA of input resistance R_in and voltage gain beta whose excess
noise is white with PSD 4 k_b T R_in (N_f - 1).  Both antenna resistances
contribute thermal noise, correlated through the mutual resistance whenever
the two-port is reciprocal.  Everything here is per-frequency and vectorizes
over the grid carried by the two-port.
"""

from dataclasses import dataclass

import numpy as np

from .constants import CONSTANTS
from .coupling import FarFieldGains, LinkGeometry, TwoPortZ, assemble_two_port
from .em import AntennaSpec
from .errors import NumericalError

__all__ = [
    "RfChain",
    "NoisePsdSet",
    "SpectralCurve",
    "LinkPoint",
    "LinkModel",
    "noise_psds",
    "xy_terms",
    "channel_gain_sq",
    "noise_psd",
    "snr_curve",
    "evaluate_link",
]


@dataclass(frozen=True)
class RfChain:
    """Generator and LNA parameters around the antenna two-port.

    noise_figure is the linear ratio (>= 1), not decibels.
    """

    generator_r: float = 50.0    # source resistance R [ohm]
    lna_input_r: float = 50.0    # LNA input resistance R_in [ohm]
    lna_gain: float = 10.0       # LNA voltage gain beta
    noise_figure: float = 10.0 ** 0.5
    temperature: float = 300.0   # physical temperature T [K]

    def __post_init__(self):
        if not (self.generator_r > 0 and self.lna_input_r > 0):
            raise ValueError("chain resistances must be positive")
        if not (self.lna_gain > 0):
            raise ValueError(f"LNA gain must be positive, got {self.lna_gain}")
        if not (self.noise_figure >= 1.0):
            raise ValueError(f"linear noise figure must be >= 1, got {self.noise_figure}")
        if not (self.temperature > 0):
            raise ValueError(f"temperature must be positive, got {self.temperature}")


@dataclass(frozen=True)
class NoisePsdSet:
    """One-sided thermal noise PSDs feeding the receive chain [V^2/Hz].

    s_cross is the cross-PSD between the two antenna noise voltages; it
    vanishes in the unilateral far-field model.
    """

    s_vt: object
    s_vr: object
    s_cross: object
    s_lna: object


@dataclass(frozen=True)
class SpectralCurve:
    """A real-valued curve sampled on a frequency grid."""

    frequency: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        freq = np.asarray(self.frequency, dtype=float)
        vals = np.asarray(self.values, dtype=float)
        if freq.shape != vals.shape:
            raise ValueError(f"grid and values differ in shape: {freq.shape} vs {vals.shape}")
        object.__setattr__(self, "frequency", freq)
        object.__setattr__(self, "values", vals)


@dataclass(frozen=True)
class LinkPoint:
    """Channel quantities at a single frequency sample."""

    h_gain_sq: float
    noise_psd: float
    snr: float


def noise_psds(z: TwoPortZ, rf: RfChain) -> NoisePsdSet:
    """Thermal source PSDs of the two-port plus the LNA excess term.

    Antenna resistors contribute 4 k_b T Re[Z]; reciprocal coupling
    correlates them with cross-PSD 4 k_b T Re[Z_rt], while the unilateral
    far-field model leaves them independent.
    """
    four_kt = 4.0 * CONSTANTS.k_b * rf.temperature
    s_vt = four_kt * np.asarray(z.z_t.re, dtype=float)
    s_vr = four_kt * np.asarray(z.z_r.re, dtype=float)
    if z.regime == "near_field":
        s_cross = four_kt * np.asarray(z.z_rt.re, dtype=float)
    else:
        s_cross = np.zeros_like(s_vt) if np.ndim(s_vt) else 0.0
    s_lna = four_kt * rf.lna_input_r * (rf.noise_figure - 1.0)
    return NoisePsdSet(s_vt=s_vt, s_vr=s_vr, s_cross=s_cross, s_lna=s_lna)


def xy_terms(z: TwoPortZ, rf: RfChain):
    """Numerator and denominator building blocks of gain and noise.

    X collects the antenna-noise power reaching the LNA input (ohm^3 scale),
    Y = |(R_in + Z_r)(R + Z_t) - Z_tr^2|^2 is the shared loop denominator
    (ohm^4 scale).  X is real for both the reciprocal and the unilateral
    matrix; the tiny imaginary residue of the literal sum is discarded.
    """
    r = rf.generator_r
    zt = np.asarray(z.z_t.z)
    zr = np.asarray(z.z_r.z)
    zrt = np.asarray(z.z_rt.z)
    ztr = np.asarray(z.z_tr.z)
    x = (
        np.abs(zrt) ** 2 * zt.real
        + (r + np.conj(zt)) * ztr * zrt.real
        + (r + zt) * np.conj(ztr) * ztr.real
        + np.abs(r + zt) ** 2 * zr.real
    ).real
    y = np.abs((rf.lna_input_r + zr) * (r + zt) - ztr**2) ** 2
    if np.any(y == 0):
        where = ""
        if z.frequency is not None:
            f = np.broadcast_to(np.asarray(z.frequency, dtype=float), np.shape(y))
            bad = np.argwhere(np.asarray(y) == 0)
            if bad.size:
                where = f" at f = {f[tuple(bad[0])]:.6g} Hz"
        raise NumericalError("loop denominator vanished" + where)
    return x, y


def channel_gain_sq(z: TwoPortZ, rf: RfChain):
    """Squared channel magnitude beta^2 R_in^2 |Z_rt|^2 / Y (dimensionless)."""
    _, y = xy_terms(z, rf)
    return rf.lna_gain**2 * rf.lna_input_r**2 * np.abs(np.asarray(z.z_rt.z)) ** 2 / y


def noise_psd(z: TwoPortZ, rf: RfChain):
    """Effective noise PSD referred through the chain [W/Hz].

    N = k_b T (R_in / R) [ (N_f - 1) + beta^2 R_in X / Y ].
    """
    x, y = xy_terms(z, rf)
    if np.any(np.asarray(x) < 0):
        raise ValueError("negative antenna-noise quadratic form; impedance data is not passive")
    kt = CONSTANTS.k_b * rf.temperature
    return kt * (rf.lna_input_r / rf.generator_r) * (
        (rf.noise_figure - 1.0) + rf.lna_gain**2 * rf.lna_input_r * x / y
    )


@dataclass(frozen=True)
class LinkModel:
    """Complete link description: two radiators, geometry, chain, regime."""

    ant_t: AntennaSpec
    ant_r: AntennaSpec
    geometry: LinkGeometry
    rf: RfChain = RfChain()
    regime: str = "auto"
    gains: FarFieldGains = FarFieldGains()

    def two_port(self, f) -> TwoPortZ:
        return assemble_two_port(f, self.ant_t, self.ant_r, self.geometry, self.regime, self.gains)

    def gain_sq(self, f):
        return channel_gain_sq(self.two_port(f), self.rf)

    def noise(self, f):
        return noise_psd(self.two_port(f), self.rf)

    def gamma(self, f):
        """Per-frequency SNR density |H|^2 / N [Hz/W]."""
        z = self.two_port(f)
        return channel_gain_sq(z, self.rf) / noise_psd(z, self.rf)


def snr_curve(model: LinkModel, band_freqs, pt: SpectralCurve) -> SpectralCurve:
    """SNR(f) = P_t(f) |H(f)|^2 / N(f) on the supplied grid.

    The transmit PSD must be sampled on exactly the band grid.
    """
    band_freqs = np.asarray(band_freqs, dtype=float)
    if pt.frequency.shape != band_freqs.shape or not np.allclose(
        pt.frequency, band_freqs, rtol=1e-12, atol=0.0
    ):
        raise ValueError("transmit PSD grid does not match the band grid")
    if np.any(pt.values < 0):
        raise ValueError("transmit PSD must be nonnegative")
    z = model.two_port(band_freqs)
    snr = pt.values * channel_gain_sq(z, model.rf) / noise_psd(z, model.rf)
    return SpectralCurve(band_freqs, snr)


def evaluate_link(model: LinkModel, f: float, pt_density: float) -> LinkPoint:
    """Channel gain, noise PSD, and SNR of the link at one frequency."""
    if not (pt_density >= 0):
        raise ValueError(f"transmit PSD must be nonnegative, got {pt_density}")
    z = model.two_port(f)
    g = float(channel_gain_sq(z, model.rf))
    n = float(noise_psd(z, model.rf))
    return LinkPoint(h_gain_sq=g, noise_psd=n, snr=pt_density * g / n)
