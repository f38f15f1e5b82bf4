"""Field structure of the lowest TM mode from reactive zone to far zone.

Plots |E_theta| and |E_r| against electrical distance kr on the equator
and at 45 degrees.  Inside kr ~ 1 the stored-energy terms (1/x^2, 1/x^3)
dominate; past it only the radiating 1/x survives and E_r dies off a
full order faster than E_theta.
"""

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from chulink import CONSTANTS, chu_tm1_fields, hertz_fields, hertz_radiation_resistance, tm1_coefficient, wavenumber

OUT = os.path.join(os.path.dirname(__file__), "output")


def main():
    os.makedirs(OUT, exist_ok=True)
    f = 1e9
    lam = CONSTANTS.c / f
    k = wavenumber(f)
    current, dl = 1.0, lam / 200.0
    a1 = tm1_coefficient(current, f, hertz_radiation_resistance(dl, f))
    kr = np.logspace(-1, 1.5, 300)
    r = kr / k

    theta = np.pi / 4.0
    mode = chu_tm1_fields(a1, f, r, theta)
    dip = hertz_fields(current, dl, f, r, theta)
    agree = np.max(np.abs(mode.e_theta - dip.e_theta) / np.abs(dip.e_theta))
    print(f"mode vs dipole E_theta worst rel mismatch: {agree:.2e} (power-matched amplitude)")

    ratio_near = abs(mode.e_r[0]) / abs(mode.e_theta[0])
    ratio_far = abs(mode.e_r[-1]) / abs(mode.e_theta[-1])
    print(f"|E_r| / |E_theta| at 45 deg: {ratio_near:.2f} at kr = {kr[0]:.2g}, "
          f"{ratio_far:.4f} at kr = {kr[-1]:.3g}")

    fig, ax = plt.subplots(figsize=(6.5, 4.2))
    ax.loglog(kr, np.abs(mode.e_theta), label=r"|E_theta|, 45 deg")
    ax.loglog(kr, np.abs(mode.e_r), label=r"|E_r|, 45 deg")
    ax.loglog(kr, np.abs(chu_tm1_fields(a1, f, r, np.pi / 2.0).e_theta), ls="--",
              label=r"|E_theta|, equator")
    ax.axvline(1.0, color="gray", lw=0.8, ls=":")
    ax.set_xlabel("electrical distance kr")
    ax.set_ylabel("V/m")
    ax.set_title("lowest-mode field components")
    ax.legend()
    ax.grid(True, which="both", alpha=0.3)
    path = os.path.join(OUT, "mode_fields.png")
    fig.savefig(path, dpi=130, bbox_inches="tight")
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
