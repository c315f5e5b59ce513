"""Optional matplotlib figures written next to the CLI's JSON/CSV output."""

from __future__ import annotations

import math
import os
from typing import Sequence

import numpy as np


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def _save(fig, directory: str, name: str) -> str:
    os.makedirs(directory, exist_ok=True)
    path = os.path.join(directory, name)
    fig.savefig(path, dpi=120, bbox_inches="tight")
    return path


def c2_density(eps: float, r_max: float, directory: str) -> str:
    from .ehgeometry import c2_density as density

    plt = _pyplot()
    r = np.geomspace(1e-2 * math.sqrt(eps), r_max, 300)
    d = density(r, eps)
    fig, ax = plt.subplots(1, 2, figsize=(9, 3.5))
    ax[0].plot(r, 2 * math.pi**2 * r**3 * d)
    ax[0].set_xlabel("r")
    ax[0].set_ylabel("2 pi^2 r^3 c2-density")
    ax[1].loglog(r, d)
    ax[1].set_xlabel("r")
    ax[1].set_ylabel("c2-density")
    fig.suptitle(f"Eguchi-Hanson c2, eps = {eps:g}")
    path = _save(fig, directory, "eh_c2_density.png")
    plt.close(fig)
    return path


def positivity_margin(margins: Sequence[tuple[float, float]], delta: float, threshold: float,
                      directory: str) -> str:
    plt = _pyplot()
    e, m = zip(*margins)
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.semilogx(np.array(e) / delta**2, m, marker=".")
    ax.axhline(0.0, color="k", lw=0.5)
    ax.axvline(threshold / delta**2, color="r", ls="--", lw=0.8)
    ax.set_xlabel("eps / delta^2")
    ax.set_ylabel("min eigenvalue of glued metric")
    path = _save(fig, directory, "eh_positivity_margin.png")
    plt.close(fig)
    return path


def cone_fit(deltas: Sequence[float], values: Sequence[float], slope: float, directory: str) -> str:
    plt = _pyplot()
    x = np.log(3 * np.asarray(deltas))
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.plot(x, values, "o", label="zeta'_delta(0)")
    ax.plot(x, values[-1] + slope * (x - x[-1]), "-", lw=0.8, label=f"slope {slope:.6f}")
    ax.set_xlabel("ln(3 delta)")
    ax.legend()
    path = _save(fig, directory, "cone_zeta_fit.png")
    plt.close(fig)
    return path


def qseries_growth(k: int, rows: Sequence[tuple[float, int, int]], directory: str) -> str:
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(5, 3.5))
    for col, label in ((1, "c0"), (2, "c1")):
        pts = [(l, math.log10(abs(r[col]))) for r in rows for l in [r[0]] if r[col]]
        if pts:
            ax.plot(*zip(*pts), ".", label=label)
    ax.set_xlabel("l")
    ax.set_ylabel("log10 |coefficient|")
    ax.set_title(f"k = {k}")
    ax.legend()
    path = _save(fig, directory, f"qseries_growth_k{k}.png")
    plt.close(fig)
    return path
