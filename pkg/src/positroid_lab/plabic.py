"""Plabic graphs stored as rotation systems.

Boundary vertices are the integers 1..n, placed clockwise on the disk.
Internal vertices use integer ids above n. Edges are numbered by their
position in ``edges``; ``rotations[v]`` lists the edges at an internal
vertex in clockwise order (plane drawn with the y axis pointing up).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Mapping, Sequence

from .core import DyckPath, NORTH, Positroid
from .errors import InconsistencyError, MalformedGraph, MoveNotApplicable, NotOrientableError
from .permutation import CCW, CW, DecoratedPermutation, southwest_reading

BLACK = "black"
WHITE = "white"


@dataclass(frozen=True, eq=False)
class PlabicGraph:
    n: int
    colors: Mapping[int, str]
    edges: tuple[tuple[int, int], ...]
    rotations: Mapping[int, tuple[int, ...]]
    positions: Mapping[int, tuple[float, float]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "colors", dict(self.colors))
        object.__setattr__(self, "edges", tuple((int(u), int(v)) for u, v in self.edges))
        object.__setattr__(
            self, "rotations", {v: tuple(rot) for v, rot in dict(self.rotations).items()}
        )
        object.__setattr__(self, "positions", dict(self.positions))
        self._validate()

    # -- structure ---------------------------------------------------------

    def _validate(self) -> None:
        n = self.n
        if n < 1:
            raise MalformedGraph("a plabic graph needs boundary vertices")
        for v, color in self.colors.items():
            if v <= n:
                raise MalformedGraph(f"internal vertex id {v} collides with the boundary")
            if color not in (BLACK, WHITE):
                raise MalformedGraph(f"vertex {v} has color {color!r}")
        vertices = set(range(1, n + 1)) | set(self.colors)
        incident: dict[int, list[int]] = {v: [] for v in vertices}
        for e, (u, v) in enumerate(self.edges):
            if u not in vertices or v not in vertices:
                raise MalformedGraph(f"edge {e} has an unknown endpoint")
            if u == v:
                raise MalformedGraph(f"edge {e} is a loop")
            incident[u].append(e)
            incident[v].append(e)
        for b in range(1, n + 1):
            if len(incident[b]) != 1:
                raise MalformedGraph(f"boundary vertex {b} must have degree 1")
        if set(self.rotations) != set(self.colors):
            raise MalformedGraph("every internal vertex needs a rotation")
        for v in self.colors:
            if sorted(self.rotations[v]) != sorted(incident[v]):
                raise MalformedGraph(f"rotation at {v} does not list its incident edges")
            if len(incident[v]) < 2:
                raise MalformedGraph(f"internal vertex {v} is a leaf or isolated")
        seen = set()
        stack = list(range(1, n + 1))
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            stack.extend(self.other(e, v) for e in incident[v])
        if seen != vertices:
            raise MalformedGraph("graph has a component away from the boundary")

    @property
    def internal(self) -> list[int]:
        return sorted(self.colors)

    def other(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if a == v else a

    def incident(self, v: int) -> tuple[int, ...]:
        if v <= self.n:
            return tuple(e for e, ends in enumerate(self.edges) if v in ends)
        return self.rotations[v]

    def degree(self, v: int) -> int:
        return len(self.incident(v))

    def canonical_key(self) -> tuple:
        """Key identifying the embedded graph up to renaming vertices and edges."""
        vid: dict[int, int] = {b: b for b in range(1, self.n + 1)}
        eid: dict[int, int] = {}
        order: list[tuple[int, int]] = []
        queue: list[tuple[int, int]] = []
        head = 0
        for b in range(1, self.n + 1):
            (e,) = self.incident(b)
            queue.append((b, e))
            while head < len(queue):
                v, via = queue[head]
                head += 1
                if via not in eid:
                    eid[via] = len(eid)
                w = self.other(via, v)
                if w in vid:
                    continue
                vid[w] = self.n + 1 + len(order)
                order.append((w, via))
                rot = self.rotations[w]
                k = rot.index(via)
                for f in rot[k + 1:] + rot[:k]:
                    if f not in eid:
                        eid[f] = len(eid)
                    queue.append((w, f))
        verts = []
        for w, via in order:
            rot = self.rotations[w]
            k = rot.index(via)
            verts.append((vid[w], self.colors[w], tuple(eid[f] for f in rot[k:] + rot[:k])))
        edges = sorted(
            (eid[e], tuple(sorted((vid[u], vid[v])))) for e, (u, v) in enumerate(self.edges)
        )
        return (self.n, tuple(verts), tuple(edges))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PlabicGraph):
            return NotImplemented
        return self.canonical_key() == other.canonical_key()

    def __hash__(self) -> int:
        return hash(self.canonical_key())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "internal": [{"id": v, "color": self.colors[v]} for v in self.internal],
            "edges": [list(e) for e in self.edges],
            "rotations": {str(v): list(self.rotations[v]) for v in self.internal},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "PlabicGraph":
        return cls(
            n=int(data["n"]),
            colors={int(v["id"]): v["color"] for v in data["internal"]},
            edges=tuple(tuple(e) for e in data["edges"]),
            rotations={int(k): tuple(v) for k, v in data["rotations"].items()},
        )


def rotations_from_positions(
    edges: Sequence[tuple[int, int]], positions: Mapping[int, tuple[float, float]], internal
) -> dict[int, tuple[int, ...]]:
    """Clockwise edge order at each internal vertex from a straight-line drawing."""
    out = {}
    for v in internal:
        x0, y0 = positions[v]
        around = []
        for e, (a, b) in enumerate(edges):
            if v in (a, b):
                x1, y1 = positions[b if a == v else a]
                around.append((-math.atan2(y1 - y0, x1 - x0), e))
        out[v] = tuple(e for _, e in sorted(around))
    return out


# ------------------------------------------------------------ construction


def build_plabic(path: DyckPath) -> PlabicGraph:
    """Tree plabic graph of a rational Dyck path.

    One internal vertex sits on each step: black on N steps, white on E
    steps. Consecutive step vertices are joined, N-step vertices reach the
    boundary eastwards and E-step vertices northwards; boundary vertex i is
    attached to the step carrying label i in the southwest labelling.
    """
    n, d, m = path.n, path.d, path.m
    labels = southwest_reading(path)[::-1]  # label of step k, in path order
    cx, cy = m / 2, d / 2
    radius = math.hypot(m, d) / 2
    colors, positions, edges = {}, {}, []
    x = y = 0
    for k, step in enumerate(path.steps):
        v = n + 1 + k
        if step == NORTH:
            colors[v] = BLACK
            positions[v] = (x, y + 0.5)
            y += 1
        else:
            colors[v] = WHITE
            positions[v] = (x + 0.5, y)
            x += 1
    for k, step in enumerate(path.steps):
        v, label = n + 1 + k, labels[k]
        px, py = positions[v]
        if step == NORTH:
            bx = cx + math.sqrt(max(radius**2 - (py - cy) ** 2, 0.0))
            positions[label] = (bx, py)
        else:
            by = cy + math.sqrt(max(radius**2 - (px - cx) ** 2, 0.0))
            positions[label] = (px, by)
        edges.append((label, v))
    for k in range(n - 1):
        edges.append((n + 1 + k, n + 2 + k))
    rotations = rotations_from_positions(edges, positions, colors)
    return PlabicGraph(n, colors, tuple(edges), rotations, positions)


# -------------------------------------------------------------- invariants


def graph_type(graph: PlabicGraph) -> tuple[int, int]:
    total = graph.n
    for v, color in graph.colors.items():
        deg = graph.degree(v)
        total += deg - 2 if color == BLACK else 2 - deg
    if total % 2:
        raise MalformedGraph("type formula gives a half-integer rank")
    return total // 2, graph.n


def is_tree(graph: PlabicGraph) -> bool:
    # construction already guarantees connectivity to the boundary; check all of it
    vertex_count = graph.n + len(graph.colors)
    if len(graph.edges) != vertex_count - 1:
        return False
    seen, stack = set(), [1]
    while stack:
        v = stack.pop()
        if v in seen:
            continue
        seen.add(v)
        stack.extend(graph.other(e, v) for e in graph.incident(v))
    return len(seen) == vertex_count


def trip(graph: PlabicGraph, start: int) -> list[int]:
    """Vertices visited by the trip from boundary vertex ``start``.

    Turn left (next edge clockwise) at black vertices and right at white.
    """
    (e,) = graph.incident(start)
    v = graph.other(e, start)
    walk = [start, v]
    for _ in range(4 * len(graph.edges) + 4):
        if v <= graph.n:
            return walk
        rot = graph.rotations[v]
        k = rot.index(e)
        step = 1 if graph.colors[v] == BLACK else -1
        e = rot[(k + step) % len(rot)]
        v = graph.other(e, v)
        walk.append(v)
    raise InconsistencyError(f"trip from {start} does not terminate")


def _trip_darts(graph: PlabicGraph, start: int) -> list[tuple[int, int]]:
    """The trip from ``start`` as darts ``(edge, end)`` leaving through that end."""
    (e,) = graph.incident(start)
    darts = []
    v = start
    for _ in range(4 * len(graph.edges) + 4):
        end = 0 if graph.edges[e][0] == v else 1
        darts.append((e, end))
        v = graph.edges[e][1 - end]
        if v <= graph.n:
            return darts
        rot = graph.rotations[v]
        k = rot.index(e)
        e = rot[(k + (1 if graph.colors[v] == BLACK else -1)) % len(rot)]
    raise InconsistencyError(f"trip from {start} does not terminate")


def enclosed_winding(graph: PlabicGraph, start: int) -> int:
    """Total winding number over the faces of a trip that returns to its start.

    The disk boundary is added as arcs ``i -> i+1`` so that faces can be
    traced from the rotation system. Positive means the enclosed region lies
    to the left of the trip.
    """
    n, m = graph.n, len(graph.edges)
    # arc k (edge id m + k) runs from boundary k + 1 to boundary k + 2 (mod n)
    rotation: dict[int, list[tuple[int, int]]] = {}
    for v in graph.internal:
        rotation[v] = [(e, 0 if graph.edges[e][0] == v else 1) for e in graph.rotations[v]]
    for i in range(1, n + 1):
        (e,) = graph.incident(i)
        inward = (e, 0 if graph.edges[e][0] == i else 1)
        rotation[i] = [(m + i - 1, 0), inward, (m + (i - 2) % n, 1)]

    def head(dart: tuple[int, int]) -> int:
        e, end = dart
        if e >= m:
            k = e - m
            return (k + 1) % n + 1 if end == 0 else k + 1
        return graph.edges[e][1 - end]

    face: dict[tuple[int, int], int] = {}
    for v in sorted(rotation):
        for dart in rotation[v]:
            if dart in face:
                continue
            label, d = len(set(face.values())), dart
            while d not in face:
                face[d] = label
                e, end = d
                arrive = (e, 1 - end)
                rot = rotation[head(d)]
                d = rot[(rot.index(arrive) + 1) % len(rot)]
    net: dict[int, int] = {}
    for e, end in _trip_darts(graph, start):
        net[e] = net.get(e, 0) + (1 if end == 0 else -1)
    adjacency: dict[int, list[tuple[int, int]]] = {}
    for e in range(m + n):
        left, right = face[(e, 0)], face[(e, 1)]
        c = net.get(e, 0)
        adjacency.setdefault(right, []).append((left, c))
        adjacency.setdefault(left, []).append((right, -c))
    outer = face[(m, 0)]
    winding, queue = {outer: 0}, [outer]
    while queue:
        f = queue.pop()
        for g, c in adjacency.get(f, ()):
            if g not in winding:
                winding[g] = winding[f] + c
                queue.append(g)
            elif winding[g] != winding[f] + c:
                raise InconsistencyError("trip is not a closed curve")
    return sum(winding.values())


def _fixed_point_decoration(graph: PlabicGraph, start: int) -> str:
    """cw when the trip encloses its region on the left, ccw when on the right.

    This depends only on the drawing, so it is unchanged by bivalent
    insertions and unicolored contractions. A trip enclosing nothing falls
    back to the color of the neighbouring vertex.
    """
    w = enclosed_winding(graph, start)
    if w:
        return CW if w > 0 else CCW
    (e,) = graph.incident(start)
    return CW if graph.colors.get(graph.other(e, start)) == BLACK else CCW


def trip_permutation(graph: PlabicGraph) -> DecoratedPermutation:
    """Trip images, with fixed points decorated by the side they enclose."""
    images, decorations = [], {}
    for i in range(1, graph.n + 1):
        walk = trip(graph, i)
        j = walk[-1]
        images.append(j)
        if i == j:
            decorations[i] = _fixed_point_decoration(graph, i)
    return DecoratedPermutation(graph.n, tuple(images), decorations)


# ------------------------------------------------------ perfect orientations


@dataclass(frozen=True)
class PerfectOrientation:
    """``forward[e]`` is True when edge e points from ``edges[e][0]`` to ``edges[e][1]``."""

    forward: tuple[bool, ...]

    def bitmask(self) -> int:
        return sum(1 << e for e, f in enumerate(self.forward) if f)

    def sources(self, graph: PlabicGraph) -> tuple[int, ...]:
        out = []
        for b in range(1, graph.n + 1):
            (e,) = graph.incident(b)
            tail = graph.edges[e][0] if self.forward[e] else graph.edges[e][1]
            if tail == b:
                out.append(b)
        return tuple(out)

    def is_perfect(self, graph: PlabicGraph) -> bool:
        for v, color in graph.colors.items():
            out = sum(
                1 for e in graph.rotations[v]
                if (graph.edges[e][0] == v) == self.forward[e]
            )
            if color == BLACK and out != 1:
                return False
            if color == WHITE and graph.degree(v) - out != 1:
                return False
        return True


def perfect_orientations(graph: PlabicGraph) -> list[PerfectOrientation]:
    """All perfect orientations, by backtracking over edges; sorted by bitmask."""
    m = len(graph.edges)
    colors = graph.colors
    # required outdegree, current outdegree and unassigned edges per internal vertex
    want = {v: 1 if c == BLACK else graph.degree(v) - 1 for v, c in colors.items()}
    out_count = {v: 0 for v in colors}
    free = {v: graph.degree(v) for v in colors}
    forward = [False] * m
    found: list[PerfectOrientation] = []
    touched_by = [tuple(x for x in e if x in colors) for e in graph.edges]

    def assign(e: int) -> None:
        if e == m:
            found.append(PerfectOrientation(tuple(forward)))
            return
        u, v = graph.edges[e]
        touched = touched_by[e]
        for x in touched:
            free[x] -= 1
        for fwd in (False, True):
            tail = u if fwd else v
            if tail in out_count:
                out_count[tail] += 1
            forward[e] = fwd
            if all(out_count[x] <= want[x] <= out_count[x] + free[x] for x in touched):
                assign(e + 1)
            if tail in out_count:
                out_count[tail] -= 1
        for x in touched:
            free[x] += 1
        forward[e] = False

    assign(0)
    return sorted(found, key=PerfectOrientation.bitmask)


def positroid_from_plabic(graph: PlabicGraph) -> Positroid:
    orientations = perfect_orientations(graph)
    if not orientations:
        raise NotOrientableError("graph admits no perfect orientation")
    d, n = graph_type(graph)
    bases = frozenset(o.sources(graph) for o in orientations)
    if any(len(b) != d for b in bases):
        raise InconsistencyError("source sets disagree with the type formula")
    return Positroid(n, d, bases)


# ------------------------------------------------------------------ moves


class Move(str, Enum):
    SQUARE = "M1"
    CONTRACT = "M2-contract"
    UNCONTRACT = "M2-uncontract"
    INSERT = "M3-insert"
    REMOVE = "M3-remove"
    REDUCE = "R1"


def _rebuild(graph: PlabicGraph, colors, edges, rotations) -> PlabicGraph:
    """Drop deleted edges (``None``) and renumber the rest densely."""
    keep = [e for e, ends in enumerate(edges) if ends is not None]
    new_id = {e: k for k, e in enumerate(keep)}
    return PlabicGraph(
        graph.n,
        colors,
        tuple(edges[e] for e in keep),
        {v: tuple(new_id[e] for e in rot) for v, rot in rotations.items()},
    )


def _fresh_vertex(graph: PlabicGraph) -> int:
    return max([graph.n, *graph.colors]) + 1


def _replace(rot: tuple[int, ...], old: int, new: Sequence[int]) -> tuple[int, ...]:
    k = rot.index(old)
    return rot[:k] + tuple(new) + rot[k + 1:]


def _square_move(graph: PlabicGraph, site: Sequence[int]) -> PlabicGraph:
    cycle = list(site)
    if len(cycle) != 4 or len(set(cycle)) != 4 or any(v not in graph.colors for v in cycle):
        raise MoveNotApplicable("square move needs four distinct internal vertices")
    for k, v in enumerate(cycle):
        w = cycle[(k + 1) % 4]
        if graph.degree(v) != 3:
            raise MoveNotApplicable(f"vertex {v} is not trivalent")
        if graph.colors[v] == graph.colors[w]:
            raise MoveNotApplicable("square colors do not alternate")
        if not any(graph.other(e, v) == w for e in graph.rotations[v]):
            raise MoveNotApplicable(f"{v} and {w} are not adjacent")
    colors = dict(graph.colors)
    for v in cycle:
        colors[v] = WHITE if colors[v] == BLACK else BLACK
    return PlabicGraph(graph.n, colors, graph.edges, graph.rotations)


def _contract(graph: PlabicGraph, e: int) -> PlabicGraph:
    u, v = graph.edges[e]
    if u not in graph.colors or v not in graph.colors:
        raise MoveNotApplicable("contracted edge must join internal vertices")
    if graph.colors[u] != graph.colors[v]:
        raise MoveNotApplicable("contracted edge must be unicolored")
    if sum(1 for f in graph.rotations[u] if graph.other(f, u) == v) > 1:
        raise MoveNotApplicable("contracting a parallel edge would create a loop")
    keep, gone = min(u, v), max(u, v)
    ru, rv = graph.rotations[keep], graph.rotations[gone]
    ku, kv = ru.index(e), rv.index(e)
    merged = ru[ku + 1:] + ru[:ku] + rv[kv + 1:] + rv[:kv]
    colors = {x: c for x, c in graph.colors.items() if x != gone}
    edges: list = [
        None if f == e else tuple(keep if x == gone else x for x in ends)
        for f, ends in enumerate(graph.edges)
    ]
    rotations = {x: r for x, r in graph.rotations.items() if x not in (keep, gone)}
    rotations[keep] = merged
    return _rebuild(graph, colors, edges, rotations)


def _uncontract(graph: PlabicGraph, site: tuple[int, int, int]) -> PlabicGraph:
    """Split the arc ``rot[start:start+length]`` (cyclically) off vertex v."""
    v, start, length = site
    if v not in graph.colors:
        raise MoveNotApplicable("only internal vertices can be uncontracted")
    rot = graph.rotations[v]
    deg = len(rot)
    if not (1 <= length <= deg - 1) or not 0 <= start < deg:
        raise MoveNotApplicable("arc must leave at least one edge on each side")
    arc = tuple(rot[(start + k) % deg] for k in range(length))
    rest = tuple(rot[(start + length + k) % deg] for k in range(deg - length))
    w = _fresh_vertex(graph)
    e_new = len(graph.edges)
    edges: list = [
        (tuple(w if (x == v and f in arc) else x for x in ends))
        for f, ends in enumerate(graph.edges)
    ]
    edges.append((v, w))
    colors = dict(graph.colors)
    colors[w] = graph.colors[v]
    rotations = dict(graph.rotations)
    rotations[v] = (e_new,) + rest
    rotations[w] = (e_new,) + arc
    return _rebuild(graph, colors, edges, rotations)


def _insert(graph: PlabicGraph, site: tuple[int, str]) -> PlabicGraph:
    e, color = site
    if color not in (BLACK, WHITE) or not 0 <= e < len(graph.edges):
        raise MoveNotApplicable("insertion needs an edge id and a color")
    u, v = graph.edges[e]
    w = _fresh_vertex(graph)
    e2 = len(graph.edges)
    edges = list(graph.edges)
    edges[e] = (u, w)
    edges.append((w, v))
    colors = dict(graph.colors)
    colors[w] = color
    rotations = dict(graph.rotations)
    if v in rotations:
        rotations[v] = _replace(rotations[v], e, [e2])
    rotations[w] = (e, e2)
    return _rebuild(graph, colors, edges, rotations)


def _remove(graph: PlabicGraph, w: int) -> PlabicGraph:
    if w not in graph.colors or graph.degree(w) != 2:
        raise MoveNotApplicable("only degree-2 internal vertices can be removed")
    e1, e2 = sorted(graph.rotations[w])
    u, v = graph.other(e1, w), graph.other(e2, w)
    if u == v:
        raise MoveNotApplicable("removal would create a loop")
    edges: list = list(graph.edges)
    edges[e1] = tuple(v if x == w else x for x in graph.edges[e1])
    edges[e2] = None
    colors = {x: c for x, c in graph.colors.items() if x != w}
    rotations = {x: r for x, r in graph.rotations.items() if x != w}
    if v in rotations:
        rotations[v] = _replace(rotations[v], e2, [e1])
    return _rebuild(graph, colors, edges, rotations)


def _reduce(graph: PlabicGraph, site: tuple[int, int]) -> PlabicGraph:
    u, v = site
    if u not in graph.colors or v not in graph.colors:
        raise MoveNotApplicable("R1 needs two internal vertices")
    if graph.colors[u] == graph.colors[v] or graph.degree(u) != 3 or graph.degree(v) != 3:
        raise MoveNotApplicable("R1 needs trivalent vertices of different colors")
    shared = [e for e in graph.rotations[u] if graph.other(e, u) == v]
    if len(shared) != 2:
        raise MoveNotApplicable("vertices are not joined by a pair of parallel edges")
    (a,) = [e for e in graph.rotations[u] if e not in shared]
    (b,) = [e for e in graph.rotations[v] if e not in shared]
    x, y = graph.other(a, u), graph.other(b, v)
    if x == y:
        raise MoveNotApplicable("reduction would create a loop")
    edges: list = list(graph.edges)
    edges[a] = (x, y)
    edges[b] = None
    for e in shared:
        edges[e] = None
    colors = {z: c for z, c in graph.colors.items() if z not in (u, v)}
    rotations = {z: r for z, r in graph.rotations.items() if z not in (u, v)}
    if y in rotations:
        rotations[y] = _replace(rotations[y], b, [a])
    return _rebuild(graph, colors, edges, rotations)


def apply_move(graph: PlabicGraph, move: Move | str, site) -> PlabicGraph:
    """Apply a local move at ``site`` and return the new graph.

    Sites: M1 a 4-cycle of vertices; M2-contract an edge id; M2-uncontract
    ``(vertex, start, length)``; M3-insert ``(edge id, color)``; M3-remove a
    vertex; R1 a pair of vertices.
    """
    move = Move(move)
    handlers = {
        Move.SQUARE: _square_move,
        Move.CONTRACT: _contract,
        Move.UNCONTRACT: _uncontract,
        Move.INSERT: _insert,
        Move.REMOVE: _remove,
        Move.REDUCE: _reduce,
    }
    return handlers[move](graph, site)


def _squares(graph: PlabicGraph) -> Iterator[tuple[int, int, int, int]]:
    seen = set()
    internal = graph.internal
    nbrs = {v: {graph.other(e, v) for e in graph.rotations[v]} for v in internal}
    for a in internal:
        for b in nbrs[a]:
            for c in nbrs.get(b, ()):
                if c == a:
                    continue
                for dd in nbrs.get(c, ()):
                    if dd in (a, b) or a not in nbrs.get(dd, ()):
                        continue
                    key = frozenset((a, b, c, dd))
                    if len(key) == 4 and key not in seen:
                        seen.add(key)
                        yield (a, b, c, dd)


def find_sites(graph: PlabicGraph, move: Move | str) -> list:
    """Every site at which ``move`` applies."""
    move = Move(move)
    sites: list = []
    if move is Move.SQUARE:
        candidates: list = list(_squares(graph))
    elif move is Move.CONTRACT:
        candidates = list(range(len(graph.edges)))
    elif move is Move.UNCONTRACT:
        candidates = [
            (v, s, k)
            for v in graph.internal
            for s in range(graph.degree(v))
            for k in range(1, graph.degree(v))
        ]
    elif move is Move.INSERT:
        candidates = [(e, c) for e in range(len(graph.edges)) for c in (BLACK, WHITE)]
    elif move is Move.REMOVE:
        candidates = graph.internal
    else:
        candidates = [
            (u, v) for u in graph.internal for v in graph.internal if u < v
        ]
    for site in candidates:
        try:
            apply_move(graph, move, site)
        except MoveNotApplicable:
            continue
        sites.append(site)
    return sites
