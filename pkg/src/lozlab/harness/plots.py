"""Static SVG figures: rescaled-position histogram, moment bars, lozenge picture."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
from matplotlib.patches import Polygon  # noqa: E402
from scipy import stats  # noqa: E402

from ..tiling import GTPattern, positions  # noqa: E402

W = np.sqrt(3) / 2
COLORS = {"particle": "#d9a441", "up": "#5b8bd0", "down": "#9fc4a8"}


def _save(fig, path):
    # fixed hash salt and no date keep the SVG byte-identical across runs
    with matplotlib.rc_context({"svg.hashsalt": "lozlab", "svg.fonttype": "none"}):
        fig.savefig(path, format="svg", metadata={"Date": None, "Creator": None})
    plt.close(fig)


def plot_histogram(values, path, title: str = "rescaled Y^1"):
    fig, ax = plt.subplots(figsize=(6, 4))
    v = np.asarray(values, dtype=float)
    ax.hist(v, bins=min(60, max(10, len(np.unique(v)))), density=True, color="#8aa9d6",
            edgecolor="white", label="tilings")
    t = np.linspace(min(-4, v.min()), max(4, v.max()), 400)
    ax.plot(t, stats.norm.pdf(t), color="#b03a2e", lw=2, label="N(0,1)")
    ax.set_title(title)
    ax.legend()
    _save(fig, path)


def plot_moments(rows, path, title: str = "limit-shape moments"):
    """rows: iterable of (r, analytic, empirical, stderr)."""
    rows = list(rows)
    r = np.array([x[0] for x in rows])
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar(r - 0.2, [x[1] for x in rows], width=0.4, label="analytic", color="#5b8bd0")
    ax.bar(r + 0.2, [x[2] for x in rows], width=0.4, yerr=[3 * x[3] for x in rows],
           label="empirical (3 SE)", color="#d9a441", capsize=3)
    ax.set_xlabel("r")
    ax.set_title(title)
    ax.legend()
    _save(fig, path)


def lozenges(pattern: GTPattern):
    """Polygons (kind, vertices) of the free-boundary tiling encoded by pattern.

    Vertical line k sits at abscissa k*sqrt(3)/2 and carries m + k unit slots,
    slot s covering heights [s - k/2, s + 1 - k/2]. Particles are lozenges whose
    vertical diagonal is their slot; holes on consecutive lines pair up in
    order into the two slanted lozenge types.
    """
    n, m = pattern.depth, pattern.m
    out = []
    holes = [list(range(m))]
    for k in range(1, n + 1):
        occ = set(positions(pattern, k))
        holes.append([s for s in range(m + k) if s not in occ])
        x = k * W
        for s in occ:
            lo = s - k / 2
            pts = [(x, lo), (x - W, lo + 0.5), (x, lo + 1)]
            if k < n:
                pts += [(x + W, lo + 0.5)]
            out.append(("particle", pts))
    for k in range(n):
        x0, x1 = k * W, (k + 1) * W
        for s, t in zip(holes[k], holes[k + 1]):
            a, b = s - k / 2, t - (k + 1) / 2
            out.append(("up" if b > a else "down", [(x0, a), (x1, b), (x1, b + 1), (x0, a + 1)]))
    return out


def plot_lozenges(pattern: GTPattern, path):
    fig, ax = plt.subplots(figsize=(6, 6))
    for kind, pts in lozenges(pattern):
        ax.add_patch(Polygon(pts, closed=True, facecolor=COLORS[kind], edgecolor="black", lw=0.4))
    n, m = pattern.depth, pattern.m
    ax.set_xlim(-0.2, n * W + 0.2)
    ax.set_ylim(-n / 2 - 0.5, m + 0.5)
    ax.set_aspect("equal")
    ax.axis("off")
    _save(fig, path)
