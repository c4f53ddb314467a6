"""Rational Dyck paths and matrices, the phi embedding, exact minors and bases.

Paths are strings over ``{"E", "N"}`` read from ``(0, 0)`` to ``(m, d)``.
Every index visible to callers is 1-based, matching the usual ``[n]``
notation; rows of matrices are numbered top to bottom.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    InconsistencyError,
    InvalidArgument,
    MalformedMatrix,
    NotCoprimeError,
    NotRationalDyckError,
    RankError,
)

EAST = "E"
NORTH = "N"

Subset = tuple[int, ...]


def colex_key(subset: Sequence[int]) -> tuple[int, ...]:
    return tuple(reversed(sorted(subset)))


def _check_dims(m: int, d: int) -> None:
    if not (isinstance(m, int) and isinstance(d, int)) or m < 1 or d < 1:
        raise InvalidArgument(f"type (m, d) must be positive integers, got ({m}, {d})")


# ---------------------------------------------------------------- paths


@dataclass(frozen=True)
class DyckPath:
    """A lattice path from (0, 0) to (m, d) weakly below ``y = (d/m) x``."""

    m: int
    d: int
    steps: str

    def __post_init__(self) -> None:
        _check_dims(self.m, self.d)
        if set(self.steps) - {EAST, NORTH}:
            raise InvalidArgument(f"path {self.steps!r} uses symbols other than E/N")
        if self.steps.count(EAST) != self.m or self.steps.count(NORTH) != self.d:
            raise InvalidArgument(
                f"path {self.steps!r} does not have type (m={self.m}, d={self.d})"
            )
        x = y = 0
        for k, step in enumerate(self.steps, 1):
            if step == EAST:
                x += 1
            else:
                y += 1
            if y * self.m > x * self.d:
                raise NotRationalDyckError(
                    f"path {self.steps!r} goes above the diagonal after prefix "
                    f"{self.steps[:k]!r}"
                )

    @classmethod
    def parse(cls, text: str, m: int | None = None, d: int | None = None) -> "DyckPath":
        """Build a path from its step string, inferring the type when omitted."""
        text = text.strip().upper()
        m_seen, d_seen = text.count(EAST), text.count(NORTH)
        if m is not None and m != m_seen or d is not None and d != d_seen:
            raise InvalidArgument(
                f"path {text!r} has type ({m_seen}, {d_seen}), expected ({m}, {d})"
            )
        return cls(m_seen, d_seen, text)

    @property
    def n(self) -> int:
        return self.m + self.d

    def heights(self) -> tuple[int, ...]:
        """Number of N steps preceding each E step."""
        out, y = [], 0
        for step in self.steps:
            if step == NORTH:
                y += 1
            else:
                out.append(y)
        return tuple(out)

    def __str__(self) -> str:
        return self.steps


def _paths_from(m: int, d: int, x: int, y: int, prefix: list[str], out: list[str]) -> None:
    if x == m and y == d:
        out.append("".join(prefix))
        return
    # E sorts before N, so depth-first in this order is lexicographic.
    if x < m:
        prefix.append(EAST)
        _paths_from(m, d, x + 1, y, prefix, out)
        prefix.pop()
    if y < d and (y + 1) * m <= x * d:
        prefix.append(NORTH)
        _paths_from(m, d, x, y + 1, prefix, out)
        prefix.pop()


def enumerate_paths(m: int, d: int) -> list[DyckPath]:
    """All rational Dyck paths of type (m, d) in lexicographic order (E < N)."""
    _check_dims(m, d)
    strings: list[str] = []
    _paths_from(m, d, 0, 0, [], strings)
    return [DyckPath(m, d, s) for s in strings]


def count_formula(m: int, d: int) -> int:
    _check_dims(m, d)
    if math.gcd(m, d) != 1:
        raise NotCoprimeError(f"gcd({m}, {d}) != 1; use count_bizley")
    q, r = divmod(math.comb(m + d, d), m + d)
    if r:
        raise InconsistencyError(f"binom({m + d}, {d}) not divisible by {m + d}")
    return q


def count_bizley(a: int, b: int, terms: int) -> list[int]:
    """Rational Catalan numbers ``Cat(k*a, k*b)`` for ``k = 1..terms``.

    Expands ``exp(sum_j binom(j(a+b), jb) / (a+b) * x^j / j)`` over the
    rationals with the recurrence ``k f_k = sum_i i g_i f_{k-i}`` for
    ``f = exp(g)``.
    """
    _check_dims(a, b)
    if math.gcd(a, b) != 1:
        raise InvalidArgument(f"({a}, {b}) must be coprime")
    if terms < 1:
        raise InvalidArgument("terms must be >= 1")
    g = [Fraction(0)] + [
        Fraction(math.comb(j * (a + b), j * b), (a + b) * j) for j in range(1, terms + 1)
    ]
    f = [Fraction(1)]
    for k in range(1, terms + 1):
        f.append(sum(i * g[i] * f[k - i] for i in range(1, k + 1)) / k)
    out = []
    for k, coeff in enumerate(f[1:], 1):
        if coeff.denominator != 1:
            raise InconsistencyError(f"Bizley coefficient {k} is not integral: {coeff}")
        out.append(int(coeff))
    return out


def rational_catalan(m: int, d: int) -> int:
    """Cat(m, d) for any positive type, coprime or not."""
    _check_dims(m, d)
    g = math.gcd(m, d)
    if g == 1:
        return count_formula(m, d)
    return count_bizley(m // g, d // g, g)[-1]


# -------------------------------------------------------------- matrices


def _as_rows(rows: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(v) for v in row) for row in rows)


@dataclass(frozen=True)
class DyckMatrix:
    """d x m binary matrix whose zeros form an upper-right staircase."""

    d: int
    m: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        _check_dims(self.m, self.d)
        object.__setattr__(self, "rows", _as_rows(self.rows))
        if len(self.rows) != self.d or any(len(r) != self.m for r in self.rows):
            raise MalformedMatrix(f"expected a {self.d}x{self.m} matrix")
        if any(v not in (0, 1) for r in self.rows for v in r):
            raise MalformedMatrix("Dyck matrices are binary")
        counts = []
        for j in range(self.m):
            column = [self.rows[i][j] for i in range(self.d)]
            c = sum(column)
            if column != [0] * (self.d - c) + [1] * c:
                raise MalformedMatrix(f"ones in column {j + 1} are not bottom-justified")
            counts.append(c)
        if counts[0] != self.d:
            raise MalformedMatrix("first column must be all ones")
        for j, c in enumerate(counts, 1):
            if j > 1 and c > counts[j - 2]:
                raise MalformedMatrix("column one-counts must weakly decrease")
            if self.m * c < self.d * (self.m - j + 1):
                raise MalformedMatrix(f"column {j} crosses the diagonal")

    def column_counts(self) -> tuple[int, ...]:
        return tuple(sum(self.rows[i][j] for i in range(self.d)) for j in range(self.m))

    def to_json(self) -> dict:
        return {"d": self.d, "m": self.m, "rows": [list(r) for r in self.rows]}


@dataclass(frozen=True)
class ExtendedMatrix:
    """The d x (d+m) image of a Dyck matrix under phi: ``(identity | signed D)``."""

    d: int
    m: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", _as_rows(self.rows))
        if len(self.rows) != self.d or any(len(r) != self.d + self.m for r in self.rows):
            raise MalformedMatrix(f"expected a {self.d}x{self.d + self.m} matrix")

    @property
    def n(self) -> int:
        return self.d + self.m

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j - 1] for row in self.rows)

    def to_json(self) -> dict:
        return {"d": self.d, "m": self.m, "rows": [list(r) for r in self.rows]}


def path_to_matrix(path: DyckPath) -> DyckMatrix:
    counts = [path.d - h for h in path.heights()]
    rows = [[1 if i >= path.d - counts[j] else 0 for j in range(path.m)] for i in range(path.d)]
    return DyckMatrix(path.d, path.m, rows)


def matrix_to_path(matrix: DyckMatrix) -> DyckPath:
    steps: list[str] = []
    y = 0
    for c in matrix.column_counts():
        h = matrix.d - c
        steps.append(NORTH * (h - y))
        steps.append(EAST)
        y = h
    steps.append(NORTH * (matrix.d - y))
    return DyckPath(matrix.m, matrix.d, "".join(steps))


def phi_rows(matrix: Sequence[Sequence[int]]) -> list[list[int]]:
    """phi applied entrywise to an arbitrary d x m integer matrix.

    Row ``i`` of the image (top to bottom) is ``e_i`` followed by
    ``(-1)^(d-i)`` times row ``d-i+1`` of the input.
    """
    d = len(matrix)
    m = len(matrix[0]) if d else 0
    out = []
    for i in range(1, d + 1):
        sign = -1 if (d - i) % 2 else 1
        ident = [1 if k == i else 0 for k in range(1, d + 1)]
        out.append(ident + [sign * matrix[d - i][j] for j in range(m)])
    return out


def phi(matrix: DyckMatrix) -> ExtendedMatrix:
    return ExtendedMatrix(matrix.d, matrix.m, phi_rows(matrix.rows))


# ------------------------------------------------------- exact linear algebra


def det_exact(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant by Bareiss fraction-free elimination."""
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise InvalidArgument("determinant of a non-square matrix")
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def minor(matrix: Sequence[Sequence[int]], rows: Iterable[int], cols: Iterable[int]) -> int:
    """Minor on 1-based row and column index sets (taken in increasing order)."""
    rs, cs = sorted(rows), sorted(cols)
    if len(rs) != len(cs):
        raise InvalidArgument("minor needs as many rows as columns")
    return det_exact([[matrix[r - 1][c - 1] for c in cs] for r in rs])


def rank_exact(matrix: Sequence[Sequence[int]]) -> int:
    rows = [[Fraction(v) for v in row] for row in matrix]
    rank, ncols = 0, len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / rows[rank][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


# ------------------------------------------------------------- positroids


@dataclass(frozen=True)
class Positroid:
    """Rank-d matroid on [n] given by its bases (sorted tuples)."""

    n: int
    d: int
    bases: frozenset[Subset]

    def __post_init__(self) -> None:
        object.__setattr__(self, "bases", frozenset(tuple(sorted(b)) for b in self.bases))
        if not self.bases:
            raise InvalidArgument("a matroid needs at least one basis")
        for b in self.bases:
            if len(b) != self.d or len(set(b)) != self.d:
                raise InvalidArgument(f"basis {b} does not have {self.d} elements")
            if b[0] < 1 or b[-1] > self.n:
                raise InvalidArgument(f"basis {b} is not a subset of [{self.n}]")

    def sorted_bases(self) -> list[Subset]:
        return sorted(self.bases, key=colex_key)

    def __contains__(self, subset: Iterable[int]) -> bool:
        return tuple(sorted(subset)) in self.bases

    def satisfies_exchange(self) -> bool:
        """Brute-force check of the basis-exchange axiom."""
        for b1 in self.bases:
            for b2 in self.bases:
                s2 = set(b2)
                for x in set(b1) - s2:
                    rest = set(b1) - {x}
                    if not any(tuple(sorted(rest | {y})) in self.bases for y in s2 - set(b1)):
                        return False
        return True

    def to_json(self) -> dict:
        return {"n": self.n, "d": self.d, "bases": [list(b) for b in self.sorted_bases()]}


def bases_from_matrix(matrix: Sequence[Sequence[int]] | ExtendedMatrix) -> Positroid:
    rows = matrix.rows if isinstance(matrix, ExtendedMatrix) else _as_rows(matrix)
    d = len(rows)
    if d == 0:
        raise InvalidArgument("empty matrix")
    n = len(rows[0])
    if rank_exact(rows) != d:
        raise RankError(f"matrix does not have full row rank {d}")
    bases = [S for S in combinations(range(1, n + 1), d) if minor(rows, range(1, d + 1), S)]
    return Positroid(n, d, frozenset(bases))


def positroid_of_path(path: DyckPath) -> Positroid:
    return bases_from_matrix(phi(path_to_matrix(path)))


def is_connected(positroid: Positroid) -> bool:
    parent = list(range(positroid.n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    ground = set(range(1, positroid.n + 1))
    for basis in positroid.bases:
        inside = set(basis)
        for b in inside:
            rest = inside - {b}
            for b2 in ground - inside:
                if tuple(sorted(rest | {b2})) in positroid.bases:
                    parent[find(b)] = find(b2)
    return len({find(x) for x in ground}) == 1


# --------------------------------------------------------- column profile


@dataclass(frozen=True)
class ColumnProfile:
    """Weights, principal indices and missing weights of a phi-image.

    ``weights[j - 1]`` is the lowest nonzero row of column ``j``.
    """

    d: int
    m: int
    weights: tuple[int, ...]
    principal: tuple[int, ...]
    complement: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.d + self.m

    def weight(self, j: int) -> int:
        return self.weights[j - 1]


def column_profile(matrix: ExtendedMatrix) -> ColumnProfile:
    d, n = matrix.d, matrix.n
    weights = []
    for j in range(1, n + 1):
        col = matrix.column(j)
        support = [i for i, v in enumerate(col, 1) if v]
        if not support:
            raise MalformedMatrix(f"column {j} is zero")
        if j > d and support != list(range(1, len(support) + 1)):
            raise MalformedMatrix(f"support of column {j} is not a top segment")
        weights.append(support[-1])
    if weights[:d] != list(range(1, d + 1)):
        raise MalformedMatrix("first d columns must be the identity")
    principal = tuple(j for j in range(d + 1, n + 1) if matrix.column(j) != matrix.column(j - 1))
    used = set(weights[d:])
    complement = tuple(i for i in range(1, d + 1) if i not in used)
    return ColumnProfile(d, matrix.m, tuple(weights), principal, complement)


def profile_of_path(path: DyckPath) -> ColumnProfile:
    return column_profile(phi(path_to_matrix(path)))


# ----------------------------------------------------- minor identities


def minor_correspondence_holds(matrix: Sequence[Sequence[int]]) -> bool:
    """Check every minor of ``matrix`` against the matching maximal minor of its phi-image."""
    d = len(matrix)
    m = len(matrix[0]) if d else 0
    image = phi_rows(matrix)
    for size in range(0, min(d, m) + 1):
        for rows in combinations(range(1, d + 1), size):
            left_out = [i for i in range(1, d + 1) if i not in rows]
            base = [d + 1 - i for i in left_out]
            for cols in combinations(range(1, m + 1), size):
                lhs = minor(matrix, rows, cols)
                rhs = minor(image, range(1, d + 1), base + [d + j for j in cols])
                if lhs != rhs:
                    return False
    return True


def is_young_binary(matrix: Sequence[Sequence[int]]) -> bool:
    """Binary square matrix whose zeros form a Young diagram in the upper-right corner."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        return False
    prev = n
    for row in matrix:
        if any(v not in (0, 1) for v in row):
            return False
        ones = sum(row)
        if list(row) != [1] * ones + [0] * (n - ones):
            return False
        zeros = n - ones
        if zeros > prev:
            return False
        prev = zeros
    return True


def young_binary_tnn_holds(matrix: Sequence[Sequence[int]]) -> bool:
    if not is_young_binary(matrix):
        raise InvalidArgument("zeros do not form an upper-right Young diagram")
    n = len(matrix)
    for size in range(1, n + 1):
        for rows in combinations(range(1, n + 1), size):
            for cols in combinations(range(1, n + 1), size):
                if minor(matrix, rows, cols) < 0:
                    return False
    return True


COUNT_METHODS = ("formula", "bizley", "enumerate")


def count_paths(m: int, d: int, method: str = "all") -> dict[str, int]:
    """Cat(m, d) by one method, or by every applicable method with ``"all"``.

    ``formula`` needs coprime m and d. ``all`` skips it otherwise and raises
    ``InconsistencyError`` if the methods disagree.
    """
    _check_dims(m, d)
    if method not in COUNT_METHODS + ("all",):
        raise InvalidArgument(f"unknown counting method {method!r}")
    methods = COUNT_METHODS if method == "all" else (method,)
    g = math.gcd(m, d)
    out: dict[str, int] = {}
    for name in methods:
        if name == "formula":
            if method == "all" and g != 1:
                continue
            out[name] = count_formula(m, d)
        elif name == "bizley":
            out[name] = count_bizley(m // g, d // g, g)[-1]
        else:
            out[name] = len(enumerate_paths(m, d))
    if len(set(out.values())) > 1:
        raise InconsistencyError(f"counting methods disagree: {out}")
    return out
