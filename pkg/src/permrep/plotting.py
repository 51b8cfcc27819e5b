"""Figures for the table commands (written to files, never shown)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402


def _grid(rows, key):
    n_max = max(r["n"] for r in rows)
    grid = np.full((n_max + 1, n_max + 1), np.nan)
    for r in rows:
        grid[r["n"], r["s"]] = r[key]
    return grid


def heatmap(rows, path, title, key="value", label="value"):
    grid = _grid(rows, key)
    fig, ax = plt.subplots(figsize=(5, 4))
    im = ax.imshow(grid, origin="lower", cmap="viridis")
    for (n, s), v in np.ndenumerate(grid):
        if not np.isnan(v):
            ax.text(s, n, f"{int(v)}", ha="center", va="center", color="w", fontsize=8)
    ax.set_xlabel("s")
    ax.set_ylabel("n")
    ax.set_title(title)
    fig.colorbar(im, ax=ax, label=label)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def growth_plot(rows, path, title):
    N = [r["n"] for r in rows]
    fig, ax = plt.subplots(figsize=(5, 4))
    ax.plot(N, [r["value"] for r in rows], "o-", label="d_M(N)")
    ax.plot(N, [r["embedding_bound"] for r in rows], "s--", label="embedding bound")
    ax.plot(N, [r["power_bound"] for r in rows], "^:", label="power bound")
    ax.set_yscale("symlog")
    ax.set_xlabel("N")
    ax.set_ylabel("dimension")
    ax.set_title(title)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
