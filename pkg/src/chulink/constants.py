"""Free-space electromagnetic constants.

All field and circuit expressions in the package assume the e^{+j omega t}
phasor convention with e^{-j k r} outgoing waves.
"""

import math
from dataclasses import dataclass

__all__ = ["PhysicalConstants", "CONSTANTS"]


@dataclass(frozen=True)
class PhysicalConstants:
    """Vacuum constants used by every electromagnetic expression.

    The wave impedance is derived as sqrt(mu / epsilon) instead of being
    quoted, so field ratios and radiated-power bookkeeping stay mutually
    consistent to machine precision.
    """

    c: float = 2.998e8            # speed of light [m/s]
    k_b: float = 1.38e-23         # Boltzmann constant [J/K]
    mu: float = 1.25663706e-6     # vacuum permeability [H/m]
    epsilon: float = 8.8541878e-12  # vacuum permittivity [F/m]

    @property
    def eta(self) -> float:
        """Free-space wave impedance sqrt(mu/epsilon), about 376.73 ohm."""
        return math.sqrt(self.mu / self.epsilon)


CONSTANTS = PhysicalConstants()
