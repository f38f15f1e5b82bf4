"""Achievable-rate integrals over a finite band.

Rates are Shannon integrals of log2(1 + P_t(f) gamma(f)) with gamma = |H|^2/N,
evaluated by composite Simpson on a uniform odd grid.  Every public rate call
refines the grid by repeated doubling until the value settles to 1e-6
relative, so a returned number is always a converged one.  Optimal power
allocation solves the water-filling problem on the same quadrature by
bisecting the water level until the power constraint is met.
"""

from dataclasses import dataclass

import numpy as np

from .channel import LinkModel, SpectralCurve
from .errors import NumericalError

__all__ = [
    "Band",
    "PowerBudget",
    "WaterfillSolution",
    "rate_uniform",
    "waterfill",
    "rate_opa",
]

_REL_TOL = 1e-6        # grid-doubling convergence target for rate values
_MAX_DOUBLINGS = 8
_BISECT_REL = 1e-12
_BISECT_MAX = 200


@dataclass(frozen=True)
class Band:
    """Uniform frequency grid over [f_lo, f_hi] with an odd point count."""

    f_lo: float
    f_hi: float
    grid_points: int = 2001

    def __post_init__(self):
        if not (0 < self.f_lo < self.f_hi):
            raise ValueError(f"need 0 < f_lo < f_hi, got [{self.f_lo}, {self.f_hi}]")
        if self.grid_points < 3 or self.grid_points % 2 == 0:
            raise ValueError(f"grid_points must be odd and >= 3, got {self.grid_points}")

    @property
    def center(self) -> float:
        return 0.5 * (self.f_lo + self.f_hi)

    @property
    def width(self) -> float:
        return self.f_hi - self.f_lo

    def grid(self) -> np.ndarray:
        return np.linspace(self.f_lo, self.f_hi, self.grid_points)

    def refined(self) -> "Band":
        """Same span with doubled panel count (2n - 1 points)."""
        return Band(self.f_lo, self.f_hi, 2 * self.grid_points - 1)


@dataclass(frozen=True)
class PowerBudget:
    """Total transmit power constraint P_max [W]."""

    p_max: float

    def __post_init__(self):
        if not (self.p_max > 0):
            raise ValueError(f"power budget must be positive, got {self.p_max}")


@dataclass(frozen=True)
class WaterfillSolution:
    """Water-filling outcome: threshold, allocation, and achieved rate.

    gamma0 is the activation threshold (inverse water level): subchannels
    with gamma(f) > gamma0 receive power pt_star(f) = 1/gamma0 - 1/gamma(f).
    """

    gamma0: float
    pt_star: SpectralCurve
    rate_bits_s: float


def _simpson_weights(freq: np.ndarray) -> np.ndarray:
    n = freq.size
    if n < 3 or n % 2 == 0:
        raise ValueError(f"Simpson rule needs an odd grid of >= 3 points, got {n}")
    h = (freq[-1] - freq[0]) / (n - 1)
    steps = np.diff(freq)
    if not np.allclose(steps, h, rtol=1e-9, atol=0.0):
        raise ValueError("Simpson rule needs a uniform grid")
    w = np.ones(n)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    return w * (h / 3.0)


def _converged(new: float, old: float) -> bool:
    return abs(new - old) <= _REL_TOL * max(abs(new), abs(old), 1e-300)


def rate_uniform(band: Band, budget: PowerBudget, link: LinkModel) -> float:
    """Rate [bits/s] with the budget spread evenly across the band.

    Integrates log2(1 + (P_max / W) gamma(f)) by composite Simpson, doubling
    the grid until consecutive estimates agree to 1e-6 relative.
    """
    density = budget.p_max / band.width
    current = band
    previous = None
    for _ in range(_MAX_DOUBLINGS + 1):
        freq = current.grid()
        integrand = np.log2(1.0 + density * link.gamma(freq))
        value = float(np.sum(_simpson_weights(freq) * integrand))
        if previous is not None and _converged(value, previous):
            return value
        previous = value
        current = current.refined()
    residual = abs(value - previous) / max(abs(value), 1e-300)
    raise NumericalError(
        f"rate integral did not converge after {_MAX_DOUBLINGS} grid doublings "
        f"(relative residual {residual:.3e})"
    )


def waterfill(band: Band, budget: PowerBudget, gamma_curve: SpectralCurve) -> WaterfillSolution:
    """Optimal power allocation over a sampled SNR-density curve.

    Bisects the water level nu so that the Simpson integral of
    pt_star(f) = max(0, nu - 1/gamma(f)) equals P_max, then reports the
    threshold gamma0 = 1/nu and the rate integral of log2(gamma/gamma0)
    over the active set.  Values gamma = 0 mark permanently dead
    subchannels.
    """
    freq = gamma_curve.frequency
    gamma = gamma_curve.values
    expected = band.grid()
    if freq.shape != expected.shape or not np.allclose(freq, expected, rtol=1e-12, atol=0.0):
        raise ValueError("gamma curve is not sampled on the band grid")
    if np.any(gamma < 0):
        raise ValueError("gamma curve must be nonnegative")
    alive = gamma > 0
    if not np.any(alive):
        raise ValueError("gamma curve is identically zero; no power allocation exists")

    weights = _simpson_weights(freq)
    inv_gamma = np.full_like(gamma, np.inf)
    inv_gamma[alive] = 1.0 / gamma[alive]

    def spent(nu: float) -> float:
        return float(np.sum(weights * np.clip(nu - inv_gamma, 0.0, None)))

    lo = 0.0
    # raising the level past max(1/gamma) by P/W_active guarantees spent(hi) >= P
    hi = budget.p_max / float(np.sum(weights[alive])) + float(np.max(inv_gamma[alive]))
    for _ in range(64):
        if spent(hi) >= budget.p_max:
            break
        hi *= 2.0
    else:
        raise NumericalError("water level bracket expansion failed")
    for _ in range(_BISECT_MAX):
        mid = 0.5 * (lo + hi)
        if spent(mid) > budget.p_max:
            hi = mid
        else:
            lo = mid
        if hi - lo <= _BISECT_REL * hi:
            break
    nu = 0.5 * (lo + hi)

    pt_star = np.clip(nu - inv_gamma, 0.0, None)
    active = gamma * nu > 1.0
    rate = float(np.sum(weights[active] * np.log2(gamma[active] * nu))) if np.any(active) else 0.0
    return WaterfillSolution(
        gamma0=1.0 / nu,
        pt_star=SpectralCurve(freq, pt_star),
        rate_bits_s=rate,
    )


def rate_opa(band: Band, budget: PowerBudget, link: LinkModel) -> float:
    """Rate [bits/s] under the optimal (water-filling) allocation.

    Re-solves the allocation on successively doubled grids until the rate
    settles to 1e-6 relative, mirroring rate_uniform's refinement policy.
    """
    current = band
    previous = None
    for _ in range(_MAX_DOUBLINGS + 1):
        freq = current.grid()
        curve = SpectralCurve(freq, link.gamma(freq))
        value = waterfill(current, budget, curve).rate_bits_s
        if previous is not None and _converged(value, previous):
            return value
        previous = value
        current = current.refined()
    residual = abs(value - previous) / max(abs(value), 1e-300)
    raise NumericalError(
        f"allocation rate did not converge after {_MAX_DOUBLINGS} grid doublings "
        f"(relative residual {residual:.3e})"
    )
