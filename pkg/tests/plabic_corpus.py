"""Handcrafted plabic graphs used by the move-invariance tests.

Boundary vertex i sits on the unit circle, clockwise from the top. Rotations
are read off the straight-line drawing unless given explicitly.
"""

from __future__ import annotations

import math

from positroid_lab.core import DyckPath
from positroid_lab.plabic import BLACK, WHITE, PlabicGraph, build_plabic, rotations_from_positions

B, W = BLACK, WHITE


def _boundary(n: int, radius: float = 3.0) -> dict[int, tuple[float, float]]:
    return {
        i: (radius * math.cos(math.pi / 2 - 2 * math.pi * (i - 1) / n),
            radius * math.sin(math.pi / 2 - 2 * math.pi * (i - 1) / n))
        for i in range(1, n + 1)
    }


def drawn(n: int, internal: dict[int, tuple[str, tuple[float, float]]], edges) -> PlabicGraph:
    positions = _boundary(n)
    positions.update({v: xy for v, (_, xy) in internal.items()})
    colors = {v: c for v, (c, _) in internal.items()}
    rotations = rotations_from_positions(edges, positions, colors)
    return PlabicGraph(n, colors, tuple(edges), rotations, positions)


def alternating_square() -> PlabicGraph:
    return drawn(
        4,
        {5: (B, (1, 1)), 6: (W, (1, -1)), 7: (B, (-1, -1)), 8: (W, (-1, 1))},
        [(1, 8), (2, 5), (3, 6), (4, 7), (5, 6), (6, 7), (7, 8), (8, 5)],
    )


def parallel_pair() -> PlabicGraph:
    """A black and a white vertex joined twice; edge 2 is the upper arc."""
    edges = ((1, 5), (2, 6), (5, 6), (5, 6))
    rotations = {5: (0, 2, 3), 6: (1, 3, 2)}
    positions = {1: (-3.0, 0.0), 2: (3.0, 0.0), 5: (-1.0, 0.0), 6: (1.0, 0.0)}
    return PlabicGraph(2, {5: B, 6: W}, edges, rotations, positions)


def black_star() -> PlabicGraph:
    return drawn(3, {4: (B, (0, 0))}, [(1, 4), (2, 4), (3, 4)])


def white_star() -> PlabicGraph:
    return drawn(3, {4: (W, (0, 0))}, [(1, 4), (2, 4), (3, 4)])


def black_edge() -> PlabicGraph:
    """Two black trivalent vertices joined by a contractible edge."""
    return drawn(
        4,
        {5: (B, (1, 0)), 6: (B, (-1, 0))},
        [(1, 5), (2, 5), (3, 6), (4, 6), (5, 6)],
    )


def bicolored_edge() -> PlabicGraph:
    return drawn(
        4,
        {5: (B, (1, 0)), 6: (W, (-1, 0))},
        [(1, 5), (2, 5), (3, 6), (4, 6), (5, 6)],
    )


def triangle() -> PlabicGraph:
    return drawn(
        3,
        {4: (B, (0, 1)), 5: (W, (0.9, -0.5)), 6: (B, (-0.9, -0.5))},
        [(1, 4), (2, 5), (3, 6), (4, 5), (5, 6), (6, 4)],
    )


def domino() -> PlabicGraph:
    """Two alternating square faces sharing an edge, boundary at the corners."""
    return drawn(
        4,
        {
            5: (B, (-1.5, 0.8)), 6: (W, (0, 0.8)), 7: (B, (1.5, 0.8)),
            8: (W, (1.5, -0.8)), 9: (B, (0, -0.8)), 10: (W, (-1.5, -0.8)),
        },
        [(1, 7), (2, 8), (3, 10), (4, 5),
         (5, 6), (6, 7), (7, 8), (8, 9), (9, 10), (10, 5), (6, 9)],
    )


def square_with_bivalent() -> PlabicGraph:
    """The alternating square with a degree-2 white vertex on a boundary edge."""
    return drawn(
        4,
        {5: (B, (1, 1)), 6: (W, (1, -1)), 7: (B, (-1, -1)), 8: (W, (-1, 1)), 9: (W, (1.8, 1.8))},
        [(1, 8), (2, 9), (9, 5), (3, 6), (4, 7), (5, 6), (6, 7), (7, 8), (8, 5)],
    )


def corpus() -> dict[str, PlabicGraph]:
    graphs = {
        "alternating-square": alternating_square(),
        "parallel-pair": parallel_pair(),
        "black-star": black_star(),
        "white-star": white_star(),
        "black-edge": black_edge(),
        "bicolored-edge": bicolored_edge(),
        "triangle": triangle(),
        "domino": domino(),
        "square-with-bivalent": square_with_bivalent(),
    }
    for steps in ("EEN", "EENEN", "EEENENN"):
        graphs[f"tree-{steps}"] = build_plabic(DyckPath.parse(steps))
    return graphs
