"""SVG trend plots from an aggregated sweep table.

Three families, one file per (family, model):

* ``nmi_vs_n_<model>.svg`` -- NMI against network size, one panel per
  mixing value, one series per cluster-size range (log-scale x).
* ``nmi_vs_k_<model>.svg`` -- NMI against average degree, one panel per
  network size, one series per cluster-size range.
* ``nmi_vs_mu_<model>.svg`` -- NMI against mixing, one panel per
  cluster-size range, one series per network size.

Series are algorithm-averaged; per-algorithm files carry an
``_by_algorithm`` suffix. The y axis is fixed to [0, 1].
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np
import pandas as pd

MARKERS = ["s", "^", "o", "D", "v", "P"]


def _algorithm_average(table: pd.DataFrame) -> pd.DataFrame:
    keys = ["model", "n", "k", "mu", "range"]
    usable = table.dropna(subset=["nmi_mean"])
    return usable.groupby(keys, sort=False)["nmi_mean"].mean().reset_index()


def _panel_plot(df, x_col, panel_col, series_col, path, logx=False, title=""):
    panels = sorted(df[panel_col].unique(), key=str)
    series = sorted(df[series_col].unique(), key=str)
    fig, axes = plt.subplots(
        1, max(len(panels), 1), figsize=(3.2 * max(len(panels), 1), 3.0), squeeze=False
    )
    for ax, panel in zip(axes[0], panels):
        sub = df[df[panel_col] == panel]
        for i, s in enumerate(series):
            line = sub[sub[series_col] == s].sort_values(x_col)
            if line.empty:
                continue
            y = line["nmi_mean"].to_numpy()
            assert np.all((y >= 0) & (y <= 1)), "NMI out of [0, 1]"
            ax.plot(
                line[x_col].to_numpy(),
                y,
                marker=MARKERS[i % len(MARKERS)],
                label=f"{series_col}={s}",
            )
        if logx:
            ax.set_xscale("log")
        ax.set_ylim(0.0, 1.0)
        ax.set_xlabel(x_col)
        ax.set_ylabel("mean NMI")
        ax.set_title(f"{panel_col}={panel}")
        ax.grid(True, alpha=0.3)
    axes[0][0].legend(fontsize=7)
    fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path, format="svg")
    plt.close(fig)


def emit_plots(table: pd.DataFrame, out_dir) -> list[str]:
    """Write the three plot families per model; returns the file paths."""
    os.makedirs(out_dir, exist_ok=True)
    paths = []
    averaged = _algorithm_average(table)
    for model in sorted(averaged["model"].unique()):
        sub = averaged[averaged["model"] == model]
        for fname, x_col, panel_col, series_col, logx in [
            (f"nmi_vs_n_{model}.svg", "n", "mu", "range", True),
            (f"nmi_vs_k_{model}.svg", "k", "n", "range", False),
            (f"nmi_vs_mu_{model}.svg", "mu", "range", "n", False),
        ]:
            path = os.path.join(out_dir, fname)
            _panel_plot(
                sub, x_col, panel_col, series_col, path, logx=logx,
                title=f"{model} (algorithm-averaged)",
            )
            paths.append(path)

    # per-algorithm variant of the mixing family
    usable = table.dropna(subset=["nmi_mean"])
    for model in sorted(usable["model"].unique()):
        sub = usable[usable["model"] == model].copy()
        path = os.path.join(out_dir, f"nmi_vs_mu_{model}_by_algorithm.svg")
        _panel_plot(
            sub.groupby(["model", "mu", "algorithm"], sort=False)["nmi_mean"]
            .mean()
            .reset_index()
            .assign(range="all"),
            "mu",
            "range",
            "algorithm",
            path,
            title=f"{model} (per algorithm)",
        )
        paths.append(path)
    return paths
