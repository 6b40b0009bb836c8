"""Dot plots of permutation matrices and bar charts of count tables."""

from __future__ import annotations

import io
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
from matplotlib.figure import Figure  # noqa: E402
from matplotlib.ticker import MaxNLocator  # noqa: E402

from .enumeration import CountTable  # noqa: E402

# fixed salt and no timestamp so identical input renders identical SVG bytes
matplotlib.rcParams["svg.hashsalt"] = "evilrect"
_METADATA = {"svg": {"Date": None}, "png": {}, "pdf": {"CreationDate": None}}


def ascii_plot(p: Sequence[int], dot: str = "o", blank: str = ".") -> str:
    """One character per cell, largest value on the top line."""
    n = len(p)
    lines = []
    for value in range(n, 0, -1):
        lines.append("".join(dot if v == value else blank for v in p))
    return "\n".join(lines)


def permutation_figure(p: Sequence[int], title: str | None = None) -> Figure:
    n = len(p)
    side = min(8.0, max(2.0, 0.08 * n + 1.5))
    fig = Figure(figsize=(side, side))
    ax = fig.add_subplot()
    ax.scatter(range(1, n + 1), p, s=max(4, 400 / max(n, 1)), color="black")
    ax.set_xlim(0.5, n + 0.5)
    ax.set_ylim(0.5, n + 0.5)
    ax.set_aspect("equal")
    if n <= 20:
        ax.set_xticks(range(1, n + 1))
        ax.set_yticks(range(1, n + 1))
        ax.grid(True, linewidth=0.3)
    if title:
        ax.set_title(title)
    return fig


def counts_figure(table: CountTable, title: str | None = None) -> Figure:
    fig = Figure(figsize=(6, 4))
    ax = fig.add_subplot()
    for n in table.sizes():
        row = table.row(n)
        ax.plot(list(row), list(row.values()), marker="o", label=f"n={n}")
    ax.xaxis.set_major_locator(MaxNLocator(integer=True))
    ax.set_xlabel("recoils k")
    ax.set_ylabel("count")
    ax.set_yscale("log")
    ax.legend(fontsize="small")
    if title:
        ax.set_title(title)
    return fig


def render(fig: Figure, fmt: str) -> bytes:
    buf = io.BytesIO()
    fig.savefig(buf, format=fmt, metadata=_METADATA.get(fmt))
    return buf.getvalue()


def save(fig: Figure, path: str) -> None:
    fmt = path.rsplit(".", 1)[-1].lower() if "." in path else "png"
    with open(path, "wb") as fh:
        fh.write(render(fig, fmt))
