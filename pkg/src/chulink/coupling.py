"""Mutual impedance of two coupled small antennas and two-port assembly.

The transmit element sits at the origin with its axis tilted by beta from
the line joining the two antennas; the receive element sits at distance d
with its axis tilted by gamma in the same plane.  Near-field coupling comes
from the induced-voltage (EMF) method applied to the exact short-dipole
fields; far-field coupling comes from a power-transmission argument and is
treated as unilateral (no back-action on the transmitter).
"""

import math
from dataclasses import dataclass

import numpy as np

from .constants import CONSTANTS
from .em import AntennaSpec, ComplexOhm, chu_self_impedance, hertz_fields, wavenumber
from .errors import GeometryError

__all__ = [
    "LinkGeometry",
    "OrientationPreset",
    "COLINEAR",
    "PARALLEL",
    "FarFieldGains",
    "TwoPortZ",
    "hertz_mutual_impedance",
    "oc_voltage_projection",
    "chu_nf_mutual_impedance",
    "chu_ff_mutual_impedance",
    "assemble_two_port",
]

# Orientation products within one ulp of an exact null are flushed to zero so
# the orthogonal configurations produce identically zero coupling.
_TRIG_NULL = 1e-15


@dataclass(frozen=True)
class LinkGeometry:
    """Separation and axis tilts of the two link antennas.

    Attributes:
        distance: center-to-center separation d [m], > 0.
        beta: transmit-axis tilt from the joining line [rad].
        gamma: receive-axis tilt from the joining line [rad].
    """

    distance: float
    beta: float
    gamma: float

    def __post_init__(self):
        if not (self.distance > 0):
            raise ValueError(f"separation must be positive, got {self.distance}")


@dataclass(frozen=True)
class OrientationPreset:
    """Named axis arrangement, expandable to explicit (beta, gamma) angles.

    tag "colinear" puts both axes on the joining line, tag "parallel" puts
    both broadside to it; tag "custom" uses the supplied angles.
    """

    tag: str
    beta: float | None = None
    gamma: float | None = None

    def __post_init__(self):
        if self.tag not in ("colinear", "parallel", "custom"):
            raise ValueError(f"unknown orientation tag {self.tag!r}")
        if self.tag == "custom" and (self.beta is None or self.gamma is None):
            raise ValueError("custom orientation needs explicit beta and gamma")

    @property
    def angles(self) -> tuple[float, float]:
        if self.tag == "colinear":
            return (0.0, math.pi)
        if self.tag == "parallel":
            return (0.5 * math.pi, 1.5 * math.pi)
        return (float(self.beta), float(self.gamma))


COLINEAR = OrientationPreset("colinear")
PARALLEL = OrientationPreset("parallel")


@dataclass(frozen=True)
class FarFieldGains:
    """Broadside gains of the two elements; 3/2 for a lossless short dipole."""

    g_t: float = 1.5
    g_r: float = 1.5

    def __post_init__(self):
        if not (self.g_t > 0 and self.g_r > 0):
            raise ValueError("antenna gains must be positive")


@dataclass(frozen=True)
class TwoPortZ:
    """Frequency-sampled impedance matrix of the coupled link two-port.

    regime is "near_field" (reciprocal, z_rt == z_tr) or "far_field"
    (unilateral, z_tr == 0).  frequency and d_over_lambda record the samples
    the matrix was built on; they follow the shape of z_t.
    """

    z_t: ComplexOhm
    z_r: ComplexOhm
    z_rt: ComplexOhm
    z_tr: ComplexOhm
    regime: str
    frequency: object = None
    d_over_lambda: object = None

    def __post_init__(self):
        if self.regime not in ("near_field", "far_field"):
            raise ValueError(f"unknown regime {self.regime!r}")
        if np.any(np.asarray(self.z_t.re) <= 0) or np.any(np.asarray(self.z_r.re) <= 0):
            raise ValueError("self impedances must have positive real part")


def _orientation_products(beta: float, gamma: float) -> tuple[float, float]:
    ss = math.sin(beta) * math.sin(gamma)
    cc = math.cos(beta) * math.cos(gamma)
    ss = 0.0 if abs(ss) < _TRIG_NULL else ss
    cc = 0.0 if abs(cc) < _TRIG_NULL else cc
    return ss, cc


def hertz_mutual_impedance(f, geometry: LinkGeometry, r_rad_t, r_rad_r) -> ComplexOhm:
    """EMF-method mutual impedance of two short dipoles, exact in 1/(kd).

    Z = -3 sqrt(r_rad_t r_rad_r) [ 1/2 sin(beta) sin(gamma) (u + u^2 + u^3)
        + cos(beta) cos(gamma) (u^2 + u^3) ] e^{-j k d},   u = 1/(j k d).

    The sin product carries the transverse field terms, the cos product the
    radial ones.  Reciprocal by construction: the value is symmetric under
    swapping (beta, r_rad_t) with (gamma, r_rad_r).

    Args:
        f: frequency [Hz], scalar or array.
        geometry: separation and tilts.
        r_rad_t: transmit radiation resistance [ohm].
        r_rad_r: receive radiation resistance [ohm].
    """
    if np.any(np.asarray(r_rad_t) <= 0) or np.any(np.asarray(r_rad_r) <= 0):
        raise ValueError("radiation resistances must be positive")
    x = wavenumber(f) * geometry.distance
    u = 1.0 / (1j * x)
    ss, cc = _orientation_products(geometry.beta, geometry.gamma)
    bracket = 0.5 * ss * (u + u**2 + u**3) + cc * (u**2 + u**3)
    z = np.asarray(-3.0 * np.sqrt(r_rad_t * r_rad_r) * bracket * np.exp(-1j * x))
    return ComplexOhm(z.real, z.imag)


def oc_voltage_projection(f, geometry: LinkGeometry, i_t, dl_t, dl_r):
    """Open-circuit voltage induced on a receive dipole by a driven one.

    Evaluates the exact transmit fields at the receive location (r = d,
    theta = beta) and projects them on the receive axis, whose direction
    cosines against (r_hat, theta_hat) are (cos gamma, sin gamma).  The
    receive port polarity is chosen so that V / i_t reproduces
    hertz_mutual_impedance identically; the ratio of the two routes is the
    regression target for the closed form.

    Args:
        f: frequency [Hz].
        geometry: separation and tilts.
        i_t: transmit current [A].
        dl_t: transmit element length [m].
        dl_r: receive element length [m].

    Returns:
        Complex voltage [V].
    """
    if not (dl_r > 0):
        raise ValueError(f"receive element length must be positive, got {dl_r}")
    incident = hertz_fields(i_t, dl_t, f, geometry.distance, geometry.beta)
    return dl_r * (
        incident.e_r * math.cos(geometry.gamma) + incident.e_theta * math.sin(geometry.gamma)
    )


def chu_nf_mutual_impedance(f, geometry: LinkGeometry, z_t: ComplexOhm, z_r: ComplexOhm) -> ComplexOhm:
    """Near-field mutual impedance of two size-constrained radiators.

    The sphere-mode radiator couples exactly like a short dipole whose
    radiation resistance equals the radiator's own input resistance, so this
    is hertz_mutual_impedance evaluated at (Re z_t, Re z_r).

    Args:
        f: frequency [Hz], scalar or array.
        geometry: separation and tilts.
        z_t: transmit self impedance at f.
        z_r: receive self impedance at f.
    """
    re_t = np.asarray(z_t.re, dtype=float)
    re_r = np.asarray(z_r.re, dtype=float)
    if np.any(re_t <= 0) or np.any(re_r <= 0):
        raise ValueError("self impedances must have positive real part")
    return hertz_mutual_impedance(f, geometry, re_t, re_r)


def chu_ff_mutual_impedance(
    f, distance, ant_t: AntennaSpec, ant_r: AntennaSpec, gains: FarFieldGains = FarFieldGains()
) -> ComplexOhm:
    """Far-field (power-budget) mutual impedance, unilateral convention.

    Built from the transmit current divider of the TM1 ladder, the free-space
    amplitude spread c/(2 pi f d), the gain product, and the receive ladder
    response:

    Z = [j w a_t / (c + j w a_t)] [c / (2 pi f d)] sqrt(g_t g_r R_t / R_r)
        [j w R_r / (j w + c / a_r)]

    No propagation phase is attached; only the magnitude is meaningful at
    link-budget level, and |Z| = sqrt(g_t g_r Re z_t Re z_r) / (k d).

    Args:
        f: frequency [Hz], scalar or array.
        distance: separation d [m], > 0.
        ant_t: transmit radiator.
        ant_r: receive radiator.
        gains: broadside gain pair.
    """
    if not (distance > 0):
        raise ValueError(f"separation must be positive, got {distance}")
    if np.any(np.asarray(f) <= 0):
        raise ValueError("frequency must be positive")
    c = CONSTANTS.c
    w = 2.0 * np.pi * np.asarray(f, dtype=float)
    divider = 1j * w * ant_t.radius / (c + 1j * w * ant_t.radius)
    spread = c / (w * distance)
    load = 1j * w * ant_r.resistance / (1j * w + c / ant_r.radius)
    scale = math.sqrt(gains.g_t * gains.g_r * ant_t.resistance / ant_r.resistance)
    z = np.asarray(divider * spread * scale * load)
    return ComplexOhm(z.real, z.imag)


def assemble_two_port(
    f,
    ant_t: AntennaSpec,
    ant_r: AntennaSpec,
    geometry: LinkGeometry,
    regime: str = "auto",
    gains: FarFieldGains = FarFieldGains(),
) -> TwoPortZ:
    """Build the link two-port impedance matrix on a frequency grid.

    regime "near_field" (and "auto", since the near-field form is exact at
    any separation) fills a reciprocal matrix from the EMF coupling; regime
    "far_field" fills z_rt from the power-budget form and zeroes z_tr.

    Raises GeometryError if the antenna spheres overlap (d < a_t + a_r).
    """
    if regime not in ("auto", "near_field", "far_field"):
        raise ValueError(f"unknown regime {regime!r}")
    min_d = (ant_t.radius + ant_r.radius) * (1.0 - 1e-12)
    if geometry.distance < min_d:
        raise GeometryError(
            f"antenna spheres overlap: d = {geometry.distance:.6g} m < "
            f"a_t + a_r = {ant_t.radius + ant_r.radius:.6g} m"
        )
    z_t = chu_self_impedance(f, ant_t)
    z_r = chu_self_impedance(f, ant_r)
    if regime == "far_field":
        z_rt = chu_ff_mutual_impedance(f, geometry.distance, ant_t, ant_r, gains)
        zeros = np.zeros_like(np.asarray(z_rt.re, dtype=float))
        z_tr = ComplexOhm(zeros if zeros.ndim else 0.0, zeros if zeros.ndim else 0.0)
        resolved = "far_field"
    else:
        z_rt = chu_nf_mutual_impedance(f, geometry, z_t, z_r)
        z_tr = z_rt
        resolved = "near_field"
    d_over_lambda = geometry.distance * np.asarray(f, dtype=float) / CONSTANTS.c
    return TwoPortZ(
        z_t=z_t,
        z_r=z_r,
        z_rt=z_rt,
        z_tr=z_tr,
        regime=resolved,
        frequency=f,
        d_over_lambda=d_over_lambda if d_over_lambda.ndim else float(d_over_lambda),
    )
