"""Electrically small antennas as lowest-order spherical radiators.

A radiator confined to a sphere of radius a behaves, in its lowest TM mode,
like a series capacitor C = a/(cR) feeding a parallel RL pair with
L = a R / c.  This module evaluates that equivalent circuit, the matching
infinitesimal-dipole field set, and a Poynting-flux quadrature used to
cross-check radiated power.

Frequency arguments accept scalars or numpy arrays; geometry and current
arguments are scalars.
"""

import warnings
from dataclasses import dataclass

import numpy as np

from .constants import CONSTANTS
from .errors import NumericalError

__all__ = [
    "AntennaSpec",
    "ComplexOhm",
    "ModeCoefficient",
    "FieldPoint",
    "wavenumber",
    "chu_self_impedance",
    "hertz_radiation_resistance",
    "tm1_coefficient",
    "chu_tm1_fields",
    "hertz_fields",
    "radiated_power_sphere",
]


@dataclass(frozen=True)
class AntennaSpec:
    """Size-constrained radiator: enclosing-sphere radius and ladder resistance.

    Attributes:
        radius: radius a of the smallest sphere enclosing the antenna [m].
        resistance: resistance R terminating the TM1 equivalent ladder [ohm].
    """

    radius: float
    resistance: float

    def __post_init__(self):
        if not (self.radius > 0):
            raise ValueError(f"antenna radius must be positive, got {self.radius}")
        if not (self.resistance > 0):
            raise ValueError(f"ladder resistance must be positive, got {self.resistance}")

    @property
    def capacitance(self) -> float:
        """Series capacitor a/(cR) of the equivalent ladder [F]."""
        return self.radius / (CONSTANTS.c * self.resistance)

    @property
    def inductance(self) -> float:
        """Shunt inductor aR/c of the equivalent ladder [H]."""
        return self.radius * self.resistance / CONSTANTS.c


@dataclass(frozen=True)
class ComplexOhm:
    """Impedance value split into resistance and reactance parts [ohm]."""

    re: float
    im: float

    def __post_init__(self):
        if not (np.all(np.isfinite(self.re)) and np.all(np.isfinite(self.im))):
            raise ValueError("impedance components must be finite")

    @property
    def z(self):
        """The impedance as a complex number (or complex array)."""
        return self.re + 1j * self.im

    @classmethod
    def from_complex(cls, value) -> "ComplexOhm":
        value = np.asarray(value)
        return cls(value.real, value.imag)


@dataclass(frozen=True)
class ModeCoefficient:
    """Complex excitation amplitude of the lowest TM spherical mode."""

    a1: complex


@dataclass(frozen=True)
class FieldPoint:
    """Spherical field components at one observation point (E_phi = 0)."""

    e_r: complex
    e_theta: complex
    h_phi: complex


def wavenumber(f):
    """Free-space wavenumber 2 pi f / c [rad/m].

    Args:
        f: frequency [Hz], positive scalar or array.
    """
    if np.any(np.asarray(f) <= 0):
        raise ValueError("frequency must be positive")
    return 2.0 * np.pi * f / CONSTANTS.c


def chu_self_impedance(f, antenna: AntennaSpec) -> ComplexOhm:
    """Input impedance of the TM1 equivalent ladder.

    Closed form R (1 + j ka - (ka)^2) / (j ka - (ka)^2) with ka = 2 pi f a / c.
    The real part is R (ka)^2 / (1 + (ka)^2), so the circuit is purely
    capacitive-resistive: reactance is negative at every frequency and the
    resistance climbs monotonically to R as ka grows.

    Args:
        f: frequency [Hz], scalar or array.
        antenna: radiator dimensions and ladder resistance.

    Returns:
        ComplexOhm with the same shape as f.
    """
    ka = np.asarray(wavenumber(f) * antenna.radius)
    # reduced form of R (1 + j ka - (ka)^2) / (j ka - (ka)^2); the literal
    # quotient loses the real part to cancellation once ka^2 is below
    # machine epsilon
    re = antenna.resistance * ka**2 / (1.0 + ka**2)
    im = -antenna.resistance / (ka * (1.0 + ka**2))
    return ComplexOhm(re, im)


def hertz_radiation_resistance(dl, f) -> float:
    """Radiation resistance (2 pi / 3) eta (dl / lambda)^2 of a short dipole.

    Valid for electrically short elements; a warning is issued once dl
    reaches lambda/10 because the infinitesimal-dipole field set degrades
    beyond that point.

    Args:
        dl: dipole length [m].
        f: frequency [Hz].
    """
    if np.any(np.asarray(dl) <= 0):
        raise ValueError("dipole length must be positive")
    if np.any(np.asarray(f) <= 0):
        raise ValueError("frequency must be positive")
    lam = CONSTANTS.c / np.asarray(f, dtype=float)
    if np.any(dl >= lam / 10.0):
        warnings.warn(
            "dipole length is not small against the wavelength (dl >= lambda/10); "
            "short-dipole expressions lose accuracy",
            stacklevel=2,
        )
    r = (2.0 * np.pi / 3.0) * CONSTANTS.eta * (dl / lam) ** 2
    return r if np.ndim(r) else float(r)


def tm1_coefficient(current, f, r_rad) -> ModeCoefficient:
    """Mode amplitude that radiates the same power as a driven short dipole.

    A1 = j I k^2 c / (4 pi f) * sqrt(3 r_rad / (2 pi eta)), which fixes
    |A1|^2 = 3 k^2 I^2 r_rad / (8 pi eta) so that the radiated power matches
    1/2 I^2 r_rad.

    Args:
        current: driving current amplitude I [A].
        f: frequency [Hz].
        r_rad: radiation resistance of the equivalent dipole [ohm].
    """
    if np.any(np.asarray(f) <= 0):
        raise ValueError("frequency must be positive")
    if not (r_rad > 0):
        raise ValueError(f"radiation resistance must be positive, got {r_rad}")
    if current == 0:
        warnings.warn("zero driving current gives a degenerate mode amplitude", stacklevel=2)
        return ModeCoefficient(0j)
    k = wavenumber(f)
    amp = 1j * current * k**2 * CONSTANTS.c / (4.0 * np.pi * f)
    return ModeCoefficient(amp * np.sqrt(3.0 * r_rad / (2.0 * np.pi * CONSTANTS.eta)))


def chu_tm1_fields(a1: ModeCoefficient, f, r, theta) -> FieldPoint:
    """Exact exterior fields of the lowest TM spherical mode.

    Includes every reactive term, so the expressions hold from the antenna
    surface outward.  The radial electric component carries the -2j
    coefficient required by Ampere's law applied to H_phi; with
    A1 = j k^2 I dl / (4 pi) all three components then reduce to the
    short-dipole fields exactly.

    Args:
        a1: mode amplitude.
        f: frequency [Hz].
        r: observation radius [m], > 0.
        theta: polar angle from the mode axis [rad].
    """
    if np.any(np.asarray(r) <= 0):
        raise ValueError("observation radius must be positive")
    k = wavenumber(f)
    x = k * np.asarray(r, dtype=float)
    eta = CONSTANTS.eta
    radial = np.exp(-1j * x) / r
    amp = a1.a1 / k
    h_phi = amp * np.sin(theta) * radial * (1.0 + 1.0 / (1j * x))
    e_theta = eta * amp * np.sin(theta) * radial * (1.0 + 1.0 / (1j * x) - 1.0 / x**2)
    e_r = -2j * eta * amp * np.cos(theta) * radial * (1.0 / x + 1.0 / (1j * x**2))
    return FieldPoint(e_r, e_theta, h_phi)


def hertz_fields(current, dl, f, r, theta) -> FieldPoint:
    """Exact fields of an infinitesimal current element I dl.

    Args:
        current: element current I [A].
        dl: element length [m].
        f: frequency [Hz].
        r: observation radius [m], > 0.
        theta: polar angle from the element axis [rad].
    """
    if np.any(np.asarray(r) <= 0):
        raise ValueError("observation radius must be positive")
    if not (dl > 0):
        raise ValueError(f"element length must be positive, got {dl}")
    k = wavenumber(f)
    x = k * np.asarray(r, dtype=float)
    eta = CONSTANTS.eta
    radial = np.exp(-1j * x) / r
    moment = current * dl / (4.0 * np.pi)
    h_phi = 1j * k * moment * np.sin(theta) * radial * (1.0 + 1.0 / (1j * x))
    e_theta = 1j * k * eta * moment * np.sin(theta) * radial * (1.0 + 1.0 / (1j * x) - 1.0 / x**2)
    e_r = k * eta * (current * dl / (2.0 * np.pi)) * np.cos(theta) * radial * (
        1.0 / x + 1.0 / (1j * x**2)
    )
    return FieldPoint(e_r, e_theta, h_phi)


def radiated_power_sphere(a1: ModeCoefficient, f, sphere_r, n_theta: int = 64) -> float:
    """Real power crossing a sphere, by Gauss-Legendre quadrature in theta.

    Integrates 1/2 Re[E x H*] . r_hat over the sphere of radius sphere_r.
    The result must be radius independent in a lossless medium and equal
    (4 pi / 3) (eta / k^2) |A1|^2; the quadrature is accepted only if
    doubling the node count leaves it unchanged to 1e-9 relative.

    Args:
        a1: mode amplitude.
        f: frequency [Hz].
        sphere_r: integration sphere radius [m], > 0.
        n_theta: Gauss-Legendre node count for the polar integral.
    """
    if not (sphere_r > 0):
        raise ValueError(f"sphere radius must be positive, got {sphere_r}")

    def flux(n: int) -> float:
        nodes, weights = np.polynomial.legendre.leggauss(n)
        theta = 0.5 * np.pi * (nodes + 1.0)     # map [-1, 1] onto [0, pi]
        fields = chu_tm1_fields(a1, f, sphere_r, theta)
        s_r = 0.5 * np.real(fields.e_theta * np.conj(fields.h_phi))
        # phi integral is analytic (2 pi); jacobian of the theta map is pi/2
        return float(2.0 * np.pi * sphere_r**2 * 0.5 * np.pi * np.sum(weights * s_r * np.sin(theta)))

    coarse = flux(n_theta)
    fine = flux(2 * n_theta)
    residual = abs(fine - coarse) / max(abs(fine), 1e-300)
    if residual > 1e-9:
        raise NumericalError(
            f"Poynting quadrature did not settle: residual {residual:.3e} after doubling nodes"
        )
    return fine
