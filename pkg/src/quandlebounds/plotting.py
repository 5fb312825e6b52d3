"""Bar charts of invariant multisets, written straight to image files."""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .multiset import InvariantMultiset  # noqa: E402

GOLDEN = (5**0.5 - 1) / 2


def figsize(width=6.0):
    return width, width * GOLDEN


def plot_multiset(ms: InvariantMultiset, path: str, title: str = "") -> str:
    """Draw value -> multiplicity for every residue mod p and save to ``path``."""
    values = list(range(ms.p))
    counts = [ms.count(v) for v in values]
    fig, ax = plt.subplots(figsize=figsize())
    bars = ax.bar(values, [float(c) for c in counts], color="0.55", edgecolor="black", linewidth=0.6)
    bars[0].set_color("tab:red")
    bars[0].set_edgecolor("black")
    ax.set_xlabel(f"value mod {ms.p}")
    ax.set_ylabel("multiplicity")
    if ms.p <= 31:
        ax.set_xticks(values)
    ax.set_title(title or f"total {ms.total}, zeros {ms.a0()}", fontsize=10)
    for side in ("top", "right"):
        ax.spines[side].set_visible(False)
    fig.tight_layout()
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
