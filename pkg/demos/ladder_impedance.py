"""Self impedance of the size-limited radiator across electrical size.

The series-C into parallel-LR ladder gives a port impedance whose real
part climbs from ~(ka)^2 toward the load R while the capacitive
reactance collapses; at ka = 1 the two parts meet at R/2.
"""

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from chulink import CONSTANTS, AntennaSpec, chu_self_impedance

OUT = os.path.join(os.path.dirname(__file__), "output")


def main():
    os.makedirs(OUT, exist_ok=True)
    radius = 0.01
    ant = AntennaSpec(radius, 50.0)
    ka = np.logspace(-2, 1, 400)
    f = ka * CONSTANTS.c / (2.0 * np.pi * radius)
    z = chu_self_impedance(f, ant)

    mid = chu_self_impedance(CONSTANTS.c / (2.0 * np.pi * radius), ant)
    print(f"at ka = 1: Z = {mid.re:.3f} {mid.im:+.3f}j ohm (expect 25 - 25j for R = 50)")
    small = chu_self_impedance(f[0], ant)
    print(f"at ka = {ka[0]:.2g}: Re Z = {small.re:.4g} ohm, approx R (ka)^2 = {50 * ka[0] ** 2:.4g}")

    fig, ax = plt.subplots(figsize=(6.5, 4.2))
    ax.loglog(ka, z.re, label="Re Z")
    ax.loglog(ka, -z.im, label="-Im Z")
    ax.axvline(1.0, color="gray", lw=0.8, ls=":")
    ax.set_xlabel("electrical size ka")
    ax.set_ylabel("ohm")
    ax.set_title("ladder self impedance, R = 50 ohm")
    ax.legend()
    ax.grid(True, which="both", alpha=0.3)
    path = os.path.join(OUT, "ladder_impedance.png")
    fig.savefig(path, dpi=130, bbox_inches="tight")
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
