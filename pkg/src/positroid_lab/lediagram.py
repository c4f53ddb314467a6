"""Le-diagrams, their pipe dreams, and the rational Dyck characterization.

Cells are addressed ``(row, column)`` with row 1 on top and column 1 on the
left. The boundary path runs from the north-east corner of the d x m box to
its south-west corner and its steps are labelled 1..d+m in that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import DyckPath, EAST, NORTH
from .errors import InconsistencyError, InvalidArgument, NotRationalDyckError
from .permutation import CCW, CW, DecoratedPermutation

PLUS = "+"
ZERO = "0"
ELBOW = "elbow"
CROSS = "cross"


@dataclass(frozen=True)
class LeDiagram:
    d: int
    m: int
    shape: tuple[int, ...]
    fill: tuple[str, ...]

    def __post_init__(self) -> None:
        shape = tuple(int(x) for x in self.shape)
        shape = shape + (0,) * (self.d - len(shape))
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "fill", tuple(self.fill) + ("",) * (self.d - len(self.fill)))
        if self.d < 1 or self.m < 1:
            raise InvalidArgument("Le-diagrams live in a d x m box with d, m >= 1")
        if len(shape) != self.d or any(a < b for a, b in zip(shape, shape[1:])):
            raise InvalidArgument(f"{shape} is not a partition with at most {self.d} parts")
        if shape[0] > self.m or shape[-1] < 0:
            raise InvalidArgument(f"shape {shape} does not fit in a {self.d}x{self.m} box")
        for r, (row, length) in enumerate(zip(self.fill, shape), 1):
            if len(row) != length or set(row) - {PLUS, ZERO}:
                raise InvalidArgument(f"row {r} fill {row!r} does not cover {length} cells")

    @classmethod
    def rectangle(cls, rows: Sequence[str]) -> "LeDiagram":
        return cls(len(rows), len(rows[0]), tuple(len(r) for r in rows), tuple(rows))

    def cell(self, r: int, c: int) -> str:
        return self.fill[r - 1][c - 1]

    def column_length(self, c: int) -> int:
        return sum(1 for length in self.shape if length >= c)

    def to_json(self) -> dict:
        return {"d": self.d, "m": self.m, "shape": list(self.shape), "fill": list(self.fill)}


def validate_le(diagram: LeDiagram) -> bool:
    """No zero may see a plus above it in its column and a plus left of it in its row."""
    for r in range(1, diagram.d + 1):
        for c in range(1, diagram.shape[r - 1] + 1):
            if diagram.cell(r, c) != ZERO:
                continue
            above = any(diagram.cell(r2, c) == PLUS for r2 in range(1, r))
            left = any(diagram.cell(r, c2) == PLUS for c2 in range(1, c))
            if above and left:
                return False
    return True


def boundary_labels(diagram: LeDiagram) -> tuple[dict[int, int], dict[int, int]]:
    """Labels of the boundary steps: (row -> label, column -> label)."""
    row_label, col_label = {}, {}
    label, x = 1, diagram.m
    for r in range(1, diagram.d + 1):
        while x > diagram.shape[r - 1]:
            col_label[x] = label
            label += 1
            x -= 1
        row_label[r] = label
        label += 1
    while x > 0:
        col_label[x] = label
        label += 1
        x -= 1
    return row_label, col_label


def pipe_dream(diagram: LeDiagram) -> dict[tuple[int, int], str]:
    return {
        (r, c): ELBOW if diagram.cell(r, c) == PLUS else CROSS
        for r in range(1, diagram.d + 1)
        for c in range(1, diagram.shape[r - 1] + 1)
    }


def trace_pipe(diagram: LeDiagram, tiles: dict, start: tuple[str, int]) -> tuple[str, int]:
    """Follow a pipe entering from the west of a row or the north of a column.

    Returns ``("row", r)`` when it leaves through the east end of row r and
    ``("col", c)`` when it leaves below column c.
    """
    kind, index = start
    if kind == "row":
        r, c, heading = index, 1, "east"
    else:
        r, c, heading = 1, index, "south"
    for _ in range(4 * (diagram.d + 1) * (diagram.m + 1)):
        if heading == "east" and c > diagram.shape[r - 1]:
            return ("row", r)
        if heading == "south" and r > diagram.column_length(c):
            return ("col", c)
        if tiles[(r, c)] == ELBOW:
            heading = "south" if heading == "east" else "east"
        if heading == "east":
            c += 1
        else:
            r += 1
    raise InconsistencyError("pipe did not leave the diagram")


def perm_from_le(diagram: LeDiagram) -> DecoratedPermutation:
    tiles = pipe_dream(diagram)
    row_label, col_label = boundary_labels(diagram)
    label_of = {("row", r): v for r, v in row_label.items()}
    label_of.update({("col", c): v for c, v in col_label.items()})
    n = diagram.d + diagram.m
    images = [0] * n
    decorations = {}
    for start, i in label_of.items():
        end = trace_pipe(diagram, tiles, start)
        j = label_of[end]
        images[i - 1] = j
        if i == j:
            # vertical boundary steps are rows
            decorations[i] = CCW if start[0] == "row" else CW
    return DecoratedPermutation(n, tuple(images), decorations)


def cell_dimension(diagram: LeDiagram) -> int:
    return sum(row.count(PLUS) for row in diagram.fill)


def le_from_path(path: DyckPath) -> LeDiagram:
    """Rectangular Le-diagram: one plus per column, a full last column.

    Column c < m carries its plus in row ``d - h``, where h is the height of
    the (m - c + 1)-th east step of the path (the path mirrored left-right).
    """
    d, m = path.d, path.m
    heights = path.heights()
    rows = [[ZERO] * m for _ in range(d)]
    for c in range(1, m):
        rows[d - heights[m - c] - 1][c - 1] = PLUS
    for r in range(d):
        rows[r][m - 1] = PLUS
    return LeDiagram.rectangle(["".join(r) for r in rows])


def path_from_le(diagram: LeDiagram) -> DyckPath:
    """Inverse of :func:`le_from_path`; raises if the diagram is not of that form."""
    d, m = diagram.d, diagram.m
    if diagram.shape != (m,) * d:
        raise NotRationalDyckError("shape is not the full rectangle")
    if any(diagram.cell(r, m) != PLUS for r in range(1, d + 1)):
        raise NotRationalDyckError("last column must be all pluses")
    heights = [0] * m
    for c in range(1, m):
        plus_rows = [r for r in range(1, d + 1) if diagram.cell(r, c) == PLUS]
        if len(plus_rows) != 1:
            raise NotRationalDyckError(f"column {c} has {len(plus_rows)} pluses")
        heights[m - c] = d - plus_rows[0]
    steps, y = [], 0
    for h in heights:
        if h < y:
            raise NotRationalDyckError("plus rows do not trace a monotone path")
        steps.append(NORTH * (h - y) + EAST)
        y = h
    steps.append(NORTH * (d - y))
    return DyckPath(m, d, "".join(steps))


def is_rational_dyck_le(diagram: LeDiagram) -> bool:
    if not validate_le(diagram):
        return False
    try:
        path_from_le(diagram)
    except NotRationalDyckError:
        return False
    return True
