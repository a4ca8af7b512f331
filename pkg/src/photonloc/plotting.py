"""Matplotlib rendering of the figure data next to the CSV artifacts.

Rendering is opt-in from the CLI; the CSV files remain the primary output
and the plots are generated from the same in-memory rows.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


def _save(fig, path: str) -> str:
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path


def plot_seed(rows, path: str) -> str:
    """Real part, imaginary part, and envelope of a seed versus radius."""
    r = np.array([row[0] for row in rows])
    re = np.array([row[1] for row in rows])
    im = np.array([row[2] for row in rows])
    env = np.array([row[3] for row in rows])
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(r, re, label="Re g", lw=0.9)
    ax.plot(r, im, label="Im g", lw=0.9)
    ax.plot(r, env, label="envelope", lw=1.4, color="k")
    ax.set_xlabel("r")
    ax.set_ylabel("seed")
    ax.legend()
    return _save(fig, path)


def plot_field_profiles(slices, path: str) -> str:
    """Energy-density profiles for several time slices on one axis.

    ``slices`` is a list of (t, rows) pairs with rows (r, value).
    """
    fig, ax = plt.subplots(figsize=(6, 4))
    for t, rows in slices:
        r = np.array([row[0] for row in rows])
        v = np.array([row[1] for row in rows])
        ax.plot(r, v, label=f"t = {t:g}", lw=0.9)
    ax.set_xlabel("r")
    ax.set_ylabel("normal-ordered E^2 / sin^2(theta)")
    ax.legend()
    return _save(fig, path)


def plot_fidelity_curve(points, path: str) -> str:
    """Infidelity versus effective carrier, one line per seed kind."""
    fig, ax = plt.subplots(figsize=(6, 4))
    for kind in sorted({p["kind"] for p in points}):
        sel = [p for p in points if p["kind"] == kind]
        x = np.array([p["x"] for p in sel])
        y = np.array([p["one_minus_F"] for p in sel])
        style = "--" if kind.endswith("analytic") else "-"
        ax.semilogy(x, np.maximum(y, 1e-300), style, label=kind, lw=1.0)
    ax.set_xlabel("effective carrier (cycles in the support)")
    ax.set_ylabel("1 - F")
    ax.legend()
    return _save(fig, path)


def plot_bounds(rows, path: str) -> str:
    """Upper and lower infidelity bounds versus localization radius."""
    x = np.array([row[0] for row in rows])
    up = np.array([row[1] for row in rows])
    lo = np.array([row[2] for row in rows])
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.semilogy(x, lo, label="1 - F_lower", color="tab:blue")
    ax.semilogy(x, up, label="1 - F_upper", color="tab:red")
    ax.set_xlabel("r0 / sigma")
    ax.set_ylabel("1 - F")
    ax.legend()
    return _save(fig, path)
