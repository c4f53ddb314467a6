"""Matroid polytopes of positroids: H-systems, exact LP and edge checks.

Coordinates are 1-based in the text listing and 0-based in coefficient
vectors. Every window sum is a cyclic range of coordinates modulo n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .core import ColumnProfile, Positroid, colex_key
from .errors import InvalidArgument, UnboundedError
from .lp import INFEASIBLE, OPTIMAL, UNBOUNDED, LPResult, solve_lp
from .necklace import GrassmannNecklace, cyclic_key

CORRECTED = "corrected"
LITERAL = "literal"

Constraint = tuple[tuple[Fraction, ...], Fraction]


def _fraction_text(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _normalize(rows: Iterable[tuple[Sequence, object]], n: int) -> tuple[Constraint, ...]:
    out = []
    for a, b in rows:
        a = tuple(Fraction(x) for x in a)
        if len(a) != n:
            raise InvalidArgument(f"coefficient vector of length {len(a)} in dimension {n}")
        out.append((a, Fraction(b)))
    return tuple(out)


@dataclass(frozen=True)
class HPolytope:
    """``{x : a.x = b for equalities, a.x <= b for inequalities}``.

    ``labels`` names the inequalities for the text listing only.
    """

    n: int
    equalities: tuple[Constraint, ...]
    inequalities: tuple[Constraint, ...]
    labels: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "equalities", _normalize(self.equalities, self.n))
        object.__setattr__(self, "inequalities", _normalize(self.inequalities, self.n))
        labels = tuple(self.labels)
        if labels and len(labels) != len(self.inequalities):
            raise InvalidArgument("one label per inequality")
        object.__setattr__(self, "labels", labels)

    def satisfied_by(self, point: Sequence) -> bool:
        x = [Fraction(v) for v in point]
        dot = lambda a: sum((ai * xi for ai, xi in zip(a, x) if ai), Fraction(0))  # noqa: E731
        return all(dot(a) == b for a, b in self.equalities) and all(
            dot(a) <= b for a, b in self.inequalities
        )

    def pruned(self) -> "HPolytope":
        """Drop duplicate rows and rows of the form ``0 <= b``; for display only."""
        seen, keep, labels = set(), [], []
        for k, (a, b) in enumerate(self.inequalities):
            if not any(a) and b >= 0:
                continue
            if (a, b) in seen:
                continue
            seen.add((a, b))
            keep.append((a, b))
            if self.labels:
                labels.append(self.labels[k])
        return HPolytope(self.n, self.equalities, tuple(keep), tuple(labels))

    def to_json(self) -> dict:
        def row(c: Constraint) -> dict:
            a, b = c
            return {"a": [_fraction_text(x) for x in a], "b": _fraction_text(b)}

        return {
            "n": self.n,
            "eq": [row(c) for c in self.equalities],
            "ineq": [row(c) for c in self.inequalities],
        }

    @classmethod
    def from_json(cls, data: dict) -> "HPolytope":
        rows = lambda key: [(r["a"], r["b"]) for r in data[key]]  # noqa: E731
        return cls(int(data["n"]), rows("eq"), rows("ineq"))

    def to_text(self) -> str:
        lines = [_render(a, "=", b) for a, b in self.equalities]
        for k, (a, b) in enumerate(self.inequalities):
            line = _render(a, "<=", b)
            if self.labels:
                line += f"    [{self.labels[k]}]"
            lines.append(line)
        return "\n".join(lines) + "\n"


def _render(a: Sequence[Fraction], op: str, b: Fraction) -> str:
    terms = []
    for j, c in enumerate(a, 1):
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        coef = "" if mag == 1 else _fraction_text(mag) + "*"
        terms.append((sign, f"{coef}x{j}"))
    if not terms:
        lhs = "0"
    else:
        lhs = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        lhs += "".join(f" {s} {t}" for s, t in terms[1:])
    return f"{lhs} {op} {_fraction_text(b)}"


@dataclass(frozen=True)
class Vertex01:
    coordinates: tuple[int, ...]

    def __post_init__(self) -> None:
        coords = tuple(int(x) for x in self.coordinates)
        if set(coords) - {0, 1}:
            raise InvalidArgument(f"{coords} is not a 0/1 vector")
        object.__setattr__(self, "coordinates", coords)

    @classmethod
    def indicator(cls, subset: Iterable[int], n: int) -> "Vertex01":
        s = set(subset)
        return cls(tuple(1 if j in s else 0 for j in range(1, n + 1)))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(j for j, x in enumerate(self.coordinates, 1) if x)


def vertices_from_bases(positroid: Positroid) -> list[Vertex01]:
    return [Vertex01.indicator(B, positroid.n) for B in positroid.sorted_bases()]


# ------------------------------------------------------------ H-systems


def cyclic_window(start: int, end: int, n: int) -> list[int]:
    """Coordinates start, start+1, ..., end read modulo n (inclusive)."""
    out, x = [start], start
    while x != end:
        x = x % n + 1
        out.append(x)
    return out


def _indicator_row(coords: Iterable[int], n: int) -> tuple[int, ...]:
    s = set(coords)
    return tuple(1 if j in s else 0 for j in range(1, n + 1))


def _simplex_part(n: int, d: int) -> tuple[list, list, list]:
    eq = [((1,) * n, d)]
    ineq, labels = [], []
    for j in range(1, n + 1):
        ineq.append((tuple(-1 if k == j else 0 for k in range(1, n + 1)), 0))
        labels.append(f"x{j} >= 0")
    return eq, ineq, labels


def hrep_general(necklace: GrassmannNecklace) -> HPolytope:
    """Window system of a necklace: ``x_j + ... + x_{a-1} <= k-1`` for a = k-th entry of I_j."""
    if not isinstance(necklace, GrassmannNecklace):
        raise InvalidArgument("hrep_general expects a GrassmannNecklace")
    n, d = necklace.n, necklace.d
    eq, ineq, labels = _simplex_part(n, d)
    for j in range(1, n + 1):
        key = cyclic_key(j)
        for k, a in enumerate(necklace[j], 1):
            window = [x for x in range(1, n + 1) if key(x) < key(a)]
            ineq.append((_indicator_row(window, n), k - 1))
            labels.append(f"window j={j} k={k}")
    return HPolytope(n, eq, ineq, labels)


def literal_m(profile: ColumnProfile, i: int) -> int | None:
    """``max{r : w(p_r) >= i and r < i}`` over principal positions, or None when empty."""
    p = profile.principal
    hits = [r for r in range(1, len(p) + 1) if profile.weight(p[r - 1]) >= i and r < i]
    return max(hits) if hits else None


def hrep_refined(profile: ColumnProfile, variant: str = CORRECTED) -> HPolytope:
    """Compact system built from the column profile of a phi-image.

    The ``corrected`` variant bounds ``x_i + ... + x_{p_{s+1}-1}`` by ``d-i+2``
    for ``i = 2..d`` with ``s = max{r : w(p_r) >= i-1}`` (window to n when
    s = t). The ``literal`` variant uses the ``m(i)`` windows instead and omits
    rows whose index set is empty; it admits extra 0/1 points on many paths and
    is kept for auditing only.
    """
    if variant not in (CORRECTED, LITERAL):
        raise InvalidArgument(f"unknown refined variant {variant!r}")
    d, n = profile.d, profile.n
    p = profile.principal
    t = len(p)
    w = profile.weight
    eq, ineq, labels = _simplex_part(n, d)
    for i in range(1, d + 1):
        ineq.append((_indicator_row([i], n), 1))
        labels.append(f"x{i} <= 1")
    for k in range(t):
        end = p[k + 1] - 1 if k + 1 < t else n
        ineq.append((_indicator_row(range(p[k], end + 1), n), 1))
        labels.append(f"block p{k + 1}")
    if variant == CORRECTED:
        for i in range(2, d + 1):
            s = max(r for r in range(1, t + 1) if w(p[r - 1]) >= i - 1)
            end = p[s] - 1 if s < t else n
            ineq.append((_indicator_row(range(i, end + 1), n), d - i + 2))
            labels.append(f"row window i={i}")
    else:
        for i in range(1, d + 1):
            r = literal_m(profile, i)
            if r is None:
                continue
            ineq.append((_indicator_row(range(i, p[r - 1]), n), d - i + r))
            labels.append(f"m-window i={i}")
    for k in range(2, t + 1):
        start = p[k - 1]
        ineq.append((_indicator_row(cyclic_window(start, w(start), n), n), w(start)))
        labels.append(f"wrap window p{k}")
    return HPolytope(n, eq, ineq, labels)


def literal_m_gaps(profile: ColumnProfile) -> list[int]:
    """Rows i in [d] for which the literal ``m(i)`` index set is empty."""
    return [i for i in range(1, profile.d + 1) if literal_m(profile, i) is None]


# ------------------------------------------------------------------- LP


def _nonneg_flags(H: HPolytope) -> tuple[list[bool], list[Constraint]]:
    """Turn rows ``-x_j <= 0`` into sign constraints on the variables."""
    flags = [False] * H.n
    rest = []
    for a, b in H.inequalities:
        nz = [j for j, c in enumerate(a) if c]
        if b == 0 and len(nz) == 1 and a[nz[0]] < 0:
            flags[nz[0]] = True
        else:
            rest.append((a, b))
    return flags, rest


def lp_max(H: HPolytope, objective: Sequence) -> LPResult:
    """Exact maximum of ``objective . x`` over H."""
    if len(objective) != H.n:
        raise InvalidArgument(f"objective of length {len(objective)} in dimension {H.n}")
    flags, rest = _nonneg_flags(H)
    return solve_lp([Fraction(c) for c in objective], H.equalities, rest, flags)


def polytope_contains(outer: HPolytope, inner: HPolytope) -> bool:
    """Whether every point of ``inner`` satisfies every constraint of ``outer``."""
    if outer.n != inner.n:
        raise InvalidArgument("polytopes live in different dimensions")
    rows = [(a, b) for a, b in outer.inequalities]
    rows += [(a, b) for a, b in outer.equalities]
    rows += [(tuple(-x for x in a), -b) for a, b in outer.equalities]
    cache: dict[tuple, LPResult] = {}
    for a, b in rows:
        res = cache.get(a)
        if res is None:
            res = cache[a] = lp_max(inner, a)
        if res.status == INFEASIBLE:
            return True
        if res.status == UNBOUNDED:
            raise UnboundedError("inner system is unbounded")
        if res.value > b:
            return False
    return True


def polytopes_equal(P: HPolytope, Q: HPolytope) -> bool:
    return polytope_contains(P, Q) and polytope_contains(Q, P)


def zero_one_points(H: HPolytope, d: int) -> list[Vertex01]:
    if not 0 <= d <= H.n:
        raise InvalidArgument(f"cannot place {d} ones in dimension {H.n}")
    # on a 0/1 point a.x is the sum of a over the support; scale rows to integers
    def integral(rows):
        out = []
        for a, b in rows:
            scale = math.lcm(*(x.denominator for x in a), b.denominator)
            out.append((tuple(int(x * scale) for x in a), int(b * scale)))
        return out

    eqs, ineqs = integral(H.equalities), integral(H.inequalities)
    pts = []
    for S in combinations(range(H.n), d):
        if all(sum(a[j] for j in S) == b for a, b in eqs) and all(
            sum(a[j] for j in S) <= b for a, b in ineqs
        ):
            pts.append(Vertex01.indicator([j + 1 for j in S], H.n))
    return sorted(pts, key=lambda v: colex_key(v.support))


def vertices_adjacent(V: Sequence[Vertex01], u: Vertex01, v: Vertex01) -> bool:
    """Whether the segment uv is an edge of conv(V).

    The midpoint is written as a convex combination of V while maximizing the
    weight carried by points other than u and v. The segment is an edge
    exactly when that maximum is zero.
    """
    V = list(dict.fromkeys(V))
    if u not in V or v not in V:
        raise InvalidArgument("both endpoints must belong to the vertex list")
    if u == v:
        raise InvalidArgument("an edge needs two distinct endpoints")
    n = len(u.coordinates)
    others = [w for w in V if w != u and w != v]
    if not others:
        return True
    k = len(V)
    mid = [Fraction(a + b, 2) for a, b in zip(u.coordinates, v.coordinates)]
    eq = [((1,) * k, 1)]
    for i in range(n):
        eq.append((tuple(w.coordinates[i] for w in V), mid[i]))
    objective = [0 if (w == u or w == v) else 1 for w in V]
    res = solve_lp(objective, eq, (), [True] * k)
    if res.status != OPTIMAL:
        raise InvalidArgument("midpoint is not in the hull of its own endpoints")
    return res.value == 0


def is_root_direction(u: Vertex01, v: Vertex01) -> bool:
    diff = [a - b for a, b in zip(u.coordinates, v.coordinates)]
    return sorted(x for x in diff if x) == [-1, 1]


def ggms_holds(V: Sequence[Vertex01], *, prefilter: bool = True) -> bool:
    """Every edge of conv(V) is parallel to some ``e_i - e_j``.

    With ``prefilter`` pairs that already differ by a root skip the LP.
    """
    for u, v in combinations(V, 2):
        if prefilter and is_root_direction(u, v):
            continue
        if vertices_adjacent(V, u, v) and not is_root_direction(u, v):
            return False
    return True
