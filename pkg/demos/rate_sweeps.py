"""Achievable rate against antenna size and against bandwidth ratio.

Left panel: rate vs electrical size a/lambda at three separations.  In
the reactive zone the end-on pair leads; at two wavelengths orientation
stops mattering.  Right panel: with the low band edge pinned, widening
the band first buys rate, then costs it once the added spectrum is too
far above the size-limited radiator's sweet spot.
"""

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from chulink import default_config, run_rate_vs_bandwidth, run_rate_vs_size

OUT = os.path.join(os.path.dirname(__file__), "output")


def main():
    os.makedirs(OUT, exist_ok=True)
    size = run_rate_vs_size(default_config("rate-size"))
    band = run_rate_vs_bandwidth(default_config("rate-bandwidth"))
    best = band.metadata["argmax_ratio_colinear"]
    print(f"rate-optimal bandwidth ratio (colinear, d = 0.1 lambda): {best:.1f}")

    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(11.0, 4.2))
    styles = {"d0p15": "-", "d0p45": "--", "d2p00": ":"}
    labels = {"d0p15": "0.15", "d0p45": "0.45", "d2p00": "2.0"}
    aol = size.columns["a_over_lambda"]
    for tag, ls in styles.items():
        ax1.semilogy(aol, size.columns[f"rate_colinear_{tag}"] / 1e9, "C0" + ls,
                     label=f"colinear, d = {labels[tag]} lambda")
        ax1.semilogy(aol, size.columns[f"rate_parallel_{tag}"] / 1e9, "C1" + ls,
                     label=f"parallel, d = {labels[tag]} lambda")
    ax1.set_xlabel("antenna size a / lambda")
    ax1.set_ylabel("rate (Gbit/s)")
    ax1.set_title("rate vs size")
    ax1.legend(fontsize=7)
    ax1.grid(True, which="both", alpha=0.3)

    ratios = band.columns["ratio"]
    ax2.plot(ratios, band.columns["rate_colinear"] / 1e9, label="colinear")
    ax2.plot(ratios, band.columns["rate_parallel"] / 1e9, label="parallel")
    ax2.axvline(best, color="gray", lw=0.8, ls=":")
    ax2.set_xlabel("bandwidth ratio f_max / f_min")
    ax2.set_ylabel("rate (Gbit/s)")
    ax2.set_title("rate vs bandwidth, d = 0.1 lambda")
    ax2.legend()
    ax2.grid(True, alpha=0.3)

    path = os.path.join(OUT, "rate_sweeps.png")
    fig.savefig(path, dpi=130, bbox_inches="tight")
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
