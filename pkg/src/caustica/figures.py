"""Rendering scan results to image files.

Kept separate from the scanner so library users without a display stack pay
for matplotlib only when they ask for a figure.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


def render_scan(result, path, title=None):
    """Heatmap of real pre-image counts with located caustic points overlaid.

    Writes a PNG (or whatever the path's extension selects) and returns the
    path.
    """
    g = result.grid
    counts = np.array(result.counts, dtype=float).T  # rows = s2, cols = s1
    counts[counts < 0] = np.nan
    fig, ax = plt.subplots(figsize=(6, 5))
    im = ax.imshow(
        counts,
        origin="lower",
        extent=(g.s1_min, g.s1_max, g.s2_min, g.s2_max),
        aspect="auto",
        cmap="viridis",
        interpolation="nearest",
    )
    fig.colorbar(im, ax=ax, label="real pre-images")
    if result.caustic_points:
        xs = [p[0] for p in result.caustic_points]
        ys = [p[1] for p in result.caustic_points]
        ax.plot(xs, ys, ".", color="red", markersize=2, label="caustic")
        ax.legend(loc="upper right")
    ax.set_xlabel("$s_1$")
    ax.set_ylabel("$s_2$")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
