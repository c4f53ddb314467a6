"""Matplotlib drawings of paths, Le-diagrams, pipe dreams, plabic graphs and reports.

Every function returns a ``Figure``; :func:`figure_to_svg` and
:func:`save_figure` write it without timestamps so output is reproducible.
"""

from __future__ import annotations

import io
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.figure import Figure  # noqa: E402
from matplotlib.patches import Circle, FancyArrowPatch, Rectangle  # noqa: E402

from .core import DyckPath, EAST  # noqa: E402
from .lediagram import ELBOW, LeDiagram, boundary_labels, pipe_dream  # noqa: E402
from .permutation import southwest_reading  # noqa: E402
from .plabic import BLACK, PerfectOrientation, PlabicGraph  # noqa: E402
from .verify import CHECKS, FAIL, PASS, SKIP, VerifyReport  # noqa: E402

plt.rcParams["svg.hashsalt"] = "positroid-lab"
_METADATA = {"svg": {"Date": None}, "png": {}, "pdf": {"CreationDate": None}}


def figure_to_svg(fig: Figure) -> str:
    buf = io.StringIO()
    fig.savefig(buf, format="svg", metadata=_METADATA["svg"])
    plt.close(fig)
    return buf.getvalue()


def save_figure(fig: Figure, target: str | Path) -> Path:
    target = Path(target)
    fmt = target.suffix.lstrip(".") or "svg"
    fig.savefig(target, format=fmt, metadata=_METADATA.get(fmt, {}))
    plt.close(fig)
    return target


def draw_path(path: DyckPath) -> Figure:
    """The path, its bounding diagonal and the southwest step labels."""
    fig, ax = plt.subplots(figsize=(0.6 * path.m + 1.5, 0.6 * path.d + 1.5))
    ax.plot([0, path.m], [0, path.d], color="0.6", linestyle="--", linewidth=1)
    labels = southwest_reading(path)[::-1]
    x = y = 0
    for step, label in zip(path.steps, labels):
        nx, ny = (x + 1, y) if step == EAST else (x, y + 1)
        ax.plot([x, nx], [y, ny], color="black", linewidth=2)
        offset = (0, -0.25) if step == EAST else (0.2, 0)
        ax.text((x + nx) / 2 + offset[0], (y + ny) / 2 + offset[1], str(label),
                ha="center", va="center", fontsize=8)
        x, y = nx, ny
    ax.set_xticks(range(path.m + 1))
    ax.set_yticks(range(path.d + 1))
    ax.grid(True, color="0.9")
    ax.set_aspect("equal")
    ax.set_title(str(path), fontsize=9)
    return fig


def draw_le(diagram: LeDiagram, pipes: bool = False) -> Figure:
    """The filling of a Le-diagram; with ``pipes`` the pipe dream is overlaid."""
    fig, ax = plt.subplots(figsize=(0.6 * diagram.m + 1.5, 0.6 * diagram.d + 1.5))
    tiles = pipe_dream(diagram)
    for (r, c), tile in tiles.items():
        x, y = c - 1, diagram.d - r
        ax.add_patch(Rectangle((x, y), 1, 1, fill=False, edgecolor="black"))
        if not pipes:
            ax.text(x + 0.5, y + 0.5, diagram.cell(r, c), ha="center", va="center")
        elif tile == ELBOW:
            ax.plot([x, x + 0.5, x + 0.5], [y + 0.5, y + 0.5, y], color="tab:blue")
            ax.plot([x + 0.5, x + 0.5, x + 1], [y + 1, y + 0.5, y + 0.5], color="tab:blue")
        else:
            ax.plot([x, x + 1], [y + 0.5, y + 0.5], color="tab:blue")
            ax.plot([x + 0.5, x + 0.5], [y, y + 1], color="tab:blue")
    row_label, col_label = boundary_labels(diagram)
    for r, label in row_label.items():
        ax.text(diagram.shape[r - 1] + 0.2, diagram.d - r + 0.5, str(label), va="center", fontsize=8)
    for c, label in col_label.items():
        ax.text(c - 0.5, diagram.d - diagram.column_length(c) - 0.3, str(label),
                ha="center", fontsize=8)
    ax.set_xlim(-0.5, diagram.m + 1)
    ax.set_ylim(-1, diagram.d + 0.5)
    ax.set_aspect("equal")
    ax.axis("off")
    return fig


def draw_plabic(graph: PlabicGraph, orientation: PerfectOrientation | None = None) -> Figure:
    """The graph in its stored drawing; edges become arrows under an orientation."""
    if not graph.positions:
        raise ValueError("graph carries no positions to draw")
    fig, ax = plt.subplots(figsize=(5, 5))
    pos = graph.positions
    boundary = [pos[b] for b in range(1, graph.n + 1)]
    cx = sum(p[0] for p in boundary) / graph.n
    cy = sum(p[1] for p in boundary) / graph.n
    radius = max(((p[0] - cx) ** 2 + (p[1] - cy) ** 2) ** 0.5 for p in boundary)
    ax.add_patch(Circle((cx, cy), radius, fill=False, edgecolor="0.7"))
    for e, (u, v) in enumerate(graph.edges):
        if orientation is not None:
            tail, head = (u, v) if orientation.forward[e] else (v, u)
            ax.add_patch(FancyArrowPatch(pos[tail], pos[head], arrowstyle="-|>",
                                         mutation_scale=12, color="black", shrinkA=6, shrinkB=6))
        else:
            ax.plot([pos[u][0], pos[v][0]], [pos[u][1], pos[v][1]], color="black")
    for v, color in sorted(graph.colors.items()):
        ax.add_patch(Circle(pos[v], 0.12, facecolor="black" if color == BLACK else "white",
                            edgecolor="black", zorder=3))
    for b in range(1, graph.n + 1):
        x, y = pos[b]
        ax.text(x + 0.15 * (x - cx) / radius, y + 0.15 * (y - cy) / radius, str(b),
                ha="center", va="center", fontsize=8)
    ax.set_xlim(cx - radius - 0.5, cx + radius + 0.5)
    ax.set_ylim(cy - radius - 0.5, cy + radius + 0.5)
    ax.set_aspect("equal")
    ax.axis("off")
    return fig


def draw_report(report: VerifyReport) -> Figure:
    """Stacked pass/fail/skip counts per check."""
    tally = report.tally()
    fig, ax = plt.subplots(figsize=(8, 3.5))
    left = [0] * len(CHECKS)
    for status, color in ((PASS, "tab:green"), (FAIL, "tab:red"), (SKIP, "0.75")):
        widths = [tally[name][status] for name in CHECKS]
        ax.barh(CHECKS, widths, left=left, color=color, label=status)
        left = [a + b for a, b in zip(left, widths)]
    ax.invert_yaxis()
    ax.set_xlabel("paths")
    verdict = "pass" if report.passed else "FAIL"
    ax.set_title(f"verify: {len(report.paths)} paths, {verdict}", fontsize=10)
    ax.legend(loc="lower right", fontsize=8)
    fig.tight_layout()
    return fig


def write_report(report: VerifyReport, directory: str | Path) -> list[Path]:
    """Write ``verify.tsv`` and ``verify.svg`` into ``directory``."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    tsv = directory / "verify.tsv"
    tsv.write_text(report.to_tsv())
    return [tsv, save_figure(draw_report(report), directory / "verify.svg")]
