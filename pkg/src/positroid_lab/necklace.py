"""Cyclic orders, Grassmann necklaces and the necklace/bases correspondence."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .core import ColumnProfile, Positroid, Subset
from .errors import InvalidArgument


def cyclic_key(i: int):
    """Sort key realising the order i < i+1 < ... < n < 1 < ... < i-1."""
    return lambda x: (x < i, x)


def cyclic_sorted(i: int, items: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(items, key=cyclic_key(i)))


def leq_i(i: int, a: int, b: int, n: int) -> bool:
    if not all(1 <= x <= n for x in (i, a, b)):
        raise InvalidArgument(f"arguments must lie in [1, {n}]")
    key = cyclic_key(i)
    return key(a) <= key(b)


def gale_leq(i: int, S: Iterable[int], T: Iterable[int]) -> bool:
    s, t = cyclic_sorted(i, S), cyclic_sorted(i, T)
    if len(s) != len(t):
        raise InvalidArgument("Gale order compares sets of equal size")
    key = cyclic_key(i)
    return all(key(a) <= key(b) for a, b in zip(s, t))


@dataclass(frozen=True)
class GrassmannNecklace:
    """Entries ``I_1..I_n``, each stored increasing in its own cyclic order."""

    n: int
    d: int
    entries: tuple[Subset, ...]

    def __post_init__(self) -> None:
        n, d = self.n, self.d
        if len(self.entries) != n:
            raise InvalidArgument(f"a necklace on [{n}] has {n} entries")
        entries = tuple(cyclic_sorted(i, e) for i, e in enumerate(self.entries, 1))
        object.__setattr__(self, "entries", entries)
        for i, entry in enumerate(entries, 1):
            if len(set(entry)) != d or len(entry) != d:
                raise InvalidArgument(f"I_{i} = {entry} is not a {d}-subset")
            if any(not 1 <= x <= n for x in entry):
                raise InvalidArgument(f"I_{i} = {entry} is not inside [{n}]")
        for i in range(1, n + 1):
            cur, nxt = set(self[i]), set(self[i % n + 1])
            if i in cur:
                if len(cur - {i} - nxt) or len(nxt - cur) > 1:
                    raise InvalidArgument(f"I_{i % n + 1} is not I_{i} with {i} exchanged")
            elif cur != nxt:
                raise InvalidArgument(f"{i} is not in I_{i}, so I_{i % n + 1} must equal it")

    def __getitem__(self, i: int) -> Subset:
        return self.entries[i - 1]

    def to_json(self) -> dict:
        return {"n": self.n, "d": self.d, "entries": [list(e) for e in self.entries]}


def necklace_from_bases(positroid: Positroid) -> GrassmannNecklace:
    """I_i is the lexicographically smallest basis listed in the order <=_i."""
    if not positroid.bases:
        raise InvalidArgument("empty basis set")
    entries = []
    for i in range(1, positroid.n + 1):
        key = cyclic_key(i)
        best = min(
            (cyclic_sorted(i, b) for b in positroid.bases),
            key=lambda t: tuple(key(x) for x in t),
        )
        entries.append(best)
    return GrassmannNecklace(positroid.n, positroid.d, tuple(entries))


def bases_from_necklace(necklace: GrassmannNecklace) -> Positroid:
    n, d = necklace.n, necklace.d
    bases = [
        B
        for B in combinations(range(1, n + 1), d)
        if all(gale_leq(j, necklace[j], B) for j in range(1, n + 1))
    ]
    return Positroid(n, d, frozenset(bases))


# ------------------------------------------------------- explicit formula


def _completion(d: int, taken_weights: Sequence[int], count: int, *, literal_pool=None) -> list[int]:
    pool = literal_pool if literal_pool is not None else [
        q for q in range(1, d + 1) if q not in set(taken_weights)
    ]
    if count > len(pool):
        raise InvalidArgument("profile leaves too few completion indices")
    return list(pool[:count])


def necklace_explicit(profile: ColumnProfile, *, completion: str = "weights") -> GrassmannNecklace:
    """Necklace of a rational Dyck positroid read off its column profile.

    ``completion="weights"`` finishes each entry with the smallest rows of
    [d] that are not weights of the columns already chosen for that entry.
    ``completion="literal"`` draws them from the global complement E_A
    instead; that variant is kept only to measure where it goes wrong and
    may raise ``InvalidArgument`` when E_A runs out.
    """
    if completion not in ("weights", "literal"):
        raise InvalidArgument(f"unknown completion rule {completion!r}")
    d, n = profile.d, profile.n
    p = profile.principal
    t = len(p)
    w = profile.weight
    if any(w(p[k]) <= w(p[k + 1]) for k in range(t - 1)):
        raise InvalidArgument("weights must strictly decrease along principal indices")
    literal_pool = list(profile.complement) if completion == "literal" else None

    entries: list[list[int]] = [list(range(1, d + 1))]
    for j in range(2, d + 1):
        entry = list(range(j, d + 1)) + [d + 1]
        qualifying = [k for k in range(1, t + 1) if w(p[k - 1]) >= j - 1]
        s = max(qualifying) if qualifying else 0
        entry += list(p[s:])
        need = d - len(entry)
        if need < 0:
            raise InvalidArgument(f"profile overfills entry I_{j}")
        taken = [w(x) for x in entry]
        entry += _completion(d, taken, need, literal_pool=literal_pool)
        entries.append(entry)
    for j in range(d + 1, n + 1):
        below = [k for k in range(1, t + 1) if p[k - 1] <= j]
        s = max(below) if below else 0
        entry = [j] + list(p[s:])
        if len(entry) > d:
            raise InvalidArgument(f"profile overfills entry I_{j}")
        taken = [w(x) for x in entry]
        entry += _completion(d, taken, d - len(entry), literal_pool=literal_pool)
        entries.append(entry)
    return GrassmannNecklace(n, d, tuple(tuple(e) for e in entries))
