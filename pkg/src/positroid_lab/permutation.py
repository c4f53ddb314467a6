"""Decorated permutations and their links to necklaces and paths."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .core import ColumnProfile, DyckPath, EAST, NORTH
from .errors import InconsistencyError, InvalidArgument, NotRationalDyckError
from .necklace import GrassmannNecklace, cyclic_key

CW = "cw"
CCW = "ccw"


@dataclass(frozen=True)
class DecoratedPermutation:
    """A permutation of [n]; fixed points carry a ``cw``/``ccw`` mark."""

    n: int
    images: tuple[int, ...]
    decorations: Mapping[int, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        if len(images) != self.n or sorted(images) != list(range(1, self.n + 1)):
            raise InvalidArgument(f"{images} is not a permutation of [{self.n}]")
        decorations = {int(k): v for k, v in dict(self.decorations).items()}
        fixed = {j for j in range(1, self.n + 1) if images[j - 1] == j}
        if set(decorations) != fixed:
            raise InvalidArgument("decorations must be given exactly on the fixed points")
        if any(v not in (CW, CCW) for v in decorations.values()):
            raise InvalidArgument("decorations are 'cw' or 'ccw'")
        object.__setattr__(self, "decorations", dict(sorted(decorations.items())))

    def __hash__(self) -> int:
        return hash((self.n, self.images, tuple(self.decorations.items())))

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    @classmethod
    def from_cycles(
        cls, cycles: Iterable[Sequence[int]], n: int, ccw: Iterable[int] = ()
    ) -> "DecoratedPermutation":
        """Fixed points default to clockwise unless listed in ``ccw``."""
        images = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a - 1] = b
        ccw = set(ccw)
        decorations = {j: (CCW if j in ccw else CW) for j in range(1, n + 1) if images[j - 1] == j}
        return cls(n, tuple(images), decorations)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "DecoratedPermutation":
        """Parse cycle notation such as ``"(1 5 2 4 3)"``; ``(j*)`` marks ccw."""
        cycles, ccw = [], []
        for body in re.findall(r"\(([^)]*)\)", text):
            tokens = body.split()
            if len(tokens) == 1 and tokens[0].endswith("*"):
                ccw.append(int(tokens[0][:-1]))
                cycles.append([int(tokens[0][:-1])])
            else:
                cycles.append([int(x) for x in tokens])
        seen = [x for c in cycles for x in c]
        if len(seen) != len(set(seen)):
            raise InvalidArgument(f"cycles in {text!r} are not disjoint")
        if n is None:
            n = max(seen, default=0)
        return cls.from_cycles(cycles, n, ccw)

    def inverse(self) -> "DecoratedPermutation":
        inv = [0] * self.n
        for j, image in enumerate(self.images, 1):
            inv[image - 1] = j
        return DecoratedPermutation(self.n, tuple(inv), self.decorations)

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc, j = [], start
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        """Cycle notation, each cycle led by its smallest element.

        Clockwise fixed points print as ``(j)``, counterclockwise as ``(j*)``.
        """
        parts = []
        for cyc in self.cycles():
            if len(cyc) == 1:
                j = cyc[0]
                parts.append(f"({j}*)" if self.decorations[j] == CCW else f"({j})")
            else:
                parts.append("(" + " ".join(map(str, cyc)) + ")")
        return "".join(parts)

    def __str__(self) -> str:
        return self.cycle_string()

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "images": list(self.images),
            "decorations": {str(k): v for k, v in self.decorations.items()},
            "cycle": self.cycle_string(),
        }


def weak_excedances(perm: DecoratedPermutation) -> set[int]:
    return {
        j
        for j in range(1, perm.n + 1)
        if j < perm(j) or (perm(j) == j and perm.decorations[j] == CCW)
    }


def perm_from_necklace(necklace: GrassmannNecklace) -> DecoratedPermutation:
    n = necklace.n
    images = [0] * n
    decorations = {}
    for i in range(1, n + 1):
        cur, nxt = set(necklace[i]), set(necklace[i % n + 1])
        if i not in cur:
            images[i - 1] = i
            decorations[i] = CW
        elif cur == nxt:
            images[i - 1] = i
            decorations[i] = CCW
        else:
            (j,) = nxt - cur
            images[j - 1] = i
    return DecoratedPermutation(n, tuple(images), decorations)


def necklace_from_perm(perm: DecoratedPermutation) -> GrassmannNecklace:
    """``I_i`` collects the j with ``j <_i perm(j)`` plus the ccw fixed points."""
    n = perm.n
    entries = []
    for i in range(1, n + 1):
        key = cyclic_key(i)
        entry = [
            j
            for j in range(1, n + 1)
            if (perm(j) != j and key(j) < key(perm(j)))
            or (perm(j) == j and perm.decorations[j] == CCW)
        ]
        entries.append(tuple(entry))
    d = len(entries[0])
    return GrassmannNecklace(n, d, tuple(entries))


def perm_inverse_explicit(profile: ColumnProfile) -> DecoratedPermutation:
    """Permutation of a rational Dyck positroid from the closed form of its inverse."""
    d, n = profile.d, profile.n
    principal = set(profile.principal)
    w = profile.weight
    inv = [0] * (n + 1)
    for i in range(1, n + 1):
        if i > d and i < n and i + 1 not in principal:
            inv[i] = i + 1
        elif i > d and (i == n or i + 1 in principal):
            inv[i] = w(i)
        elif i == 1:
            inv[i] = d + 1
        elif 1 < i <= d:
            hits = [j for j in profile.principal if w(j) == i - 1]
            if len(hits) > 1:
                raise InconsistencyError(f"several principal columns of weight {i - 1}")
            inv[i] = hits[0] if hits else i - 1
        else:
            raise InconsistencyError(f"no case of the inverse formula applies to {i}")
    images = [0] * n
    for i in range(1, n + 1):
        images[inv[i] - 1] = i
    if sorted(images) != list(range(1, n + 1)):
        raise InconsistencyError("closed-form inverse is not a bijection")
    return DecoratedPermutation(n, tuple(images))


def southwest_reading(path: DyckPath) -> list[int]:
    """Step labels read from (m, d) back to the origin.

    N steps are labelled 1..d from the top, E steps d+1..d+m from the left.
    """
    labels = []
    north_seen = east_seen = 0
    for step in path.steps:
        if step == NORTH:
            north_seen += 1
            labels.append(path.d - north_seen + 1)
        else:
            east_seen += 1
            labels.append(path.d + east_seen)
    return labels[::-1]


def southwest_perm(path: DyckPath) -> DecoratedPermutation:
    reading = southwest_reading(path)
    images = [0] * path.n
    for a, b in zip(reading, reading[1:] + reading[:1]):
        images[a - 1] = b
    return DecoratedPermutation(path.n, tuple(images))


def path_from_perm(perm: DecoratedPermutation, d: int | None = None) -> DyckPath:
    """Recover the path by walking the inverse cycle from d+1."""
    n = perm.n
    if d is None:
        d = len(weak_excedances(perm))
    if not 1 <= d < n:
        raise NotRationalDyckError(f"rank {d} impossible on [{n}] with m >= 1")
    inv = perm.inverse()
    cycle, j = [], d + 1
    while True:
        cycle.append(j)
        j = inv(j)
        if j == d + 1:
            break
    if len(cycle) != n:
        raise NotRationalDyckError(f"{perm} is not a single {n}-cycle")
    steps = "".join(EAST if i > d else NORTH for i in cycle)
    return DyckPath(n - d, d, steps)


def geometric_bound_holds(profile: ColumnProfile) -> bool:
    d, m = profile.d, profile.m
    return all(
        m * profile.weight(j) >= d * (d + m - j + 1) for j in range(d + 1, d + m + 1)
    )


def inverse_cycle_from(perm: DecoratedPermutation, start: int) -> list[int]:
    inv = perm.inverse()
    out, j = [start], inv(start)
    while j != start:
        out.append(j)
        j = inv(j)
    return out
