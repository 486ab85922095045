"""Figure rendering for the report paths (energy levels, coupling sweeps)."""

from __future__ import annotations

import numpy as np


def _pyplot():
    import matplotlib

    matplotlib.use("Agg", force=False)
    import matplotlib.pyplot as plt

    return plt


def render_spectrum_plot(report, path) -> None:
    """Energy levels per sector: one column of level markers per sector."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    for idx, sector in enumerate(report.sectors):
        if not sector.energies:
            continue
        energies = [e for e, _ in sector.energies]
        ax.hlines(energies, idx - 0.32, idx + 0.32, lw=1.2)
    ax.set_xticks(range(len(report.sectors)))
    ax.set_xticklabels(
        [s.label or "-" for s in report.sectors], rotation=90, fontsize=7
    )
    ax.set_xlabel("sector")
    ax.set_ylabel("energy")
    ax.set_title("spectrum by symmetry sector")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_sweep_plot(values, lam_rows, path, param_name: str = "J") -> None:
    """Single-particle levels against the swept coupling."""
    plt = _pyplot()
    lam = np.asarray(lam_rows)
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    for i in range(lam.shape[1]):
        ax.plot(values, lam[:, i], lw=1.0)
    ax.set_xlabel(param_name)
    ax.set_ylabel("single-particle level")
    ax.set_title("single-particle spectrum sweep")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
