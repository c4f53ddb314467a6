"""Exact two-phase simplex over the rationals with Bland's rule."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InconsistencyError, InvalidArgument

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

Row = list[Fraction]


@dataclass(frozen=True)
class LPResult:
    status: str
    value: Fraction | None = None
    witness: tuple[Fraction, ...] | None = None


def _pivot(rows: list[Row], basis: list[int], r: int, c: int) -> None:
    pivot_row = rows[r]
    p = pivot_row[c]
    if p != 1:
        rows[r] = pivot_row = [x / p if x else x for x in pivot_row]
    for i, row in enumerate(rows):
        if i != r:
            f = row[c]
            if f:
                rows[i] = [a - f * b if b else a for a, b in zip(row, pivot_row)]
    basis[r] = c


def _minimize(rows: list[Row], basis: list[int], cost: Sequence[Fraction], ncols: int) -> str:
    """Run simplex iterations in place; columns >= ncols are ignored."""
    obj = list(cost[:ncols]) + [Fraction(0)] * (len(rows[0]) - ncols) if rows else list(cost[:ncols])
    for i, row in enumerate(rows):
        cb = cost[basis[i]]
        if cb:
            obj = [o - cb * r if r else o for o, r in zip(obj, row)]
    while True:
        entering = next((j for j in range(ncols) if obj[j] < 0), None)
        if entering is None:
            return OPTIMAL
        best, leave = None, None
        for i, row in enumerate(rows):
            a = row[entering]
            if a > 0:
                ratio = row[-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            return UNBOUNDED
        _pivot(rows, basis, leave, entering)
        f = obj[entering]
        if f:
            obj = [o - f * r if r else o for o, r in zip(obj, rows[leave])]


def solve_lp(
    objective: Sequence,
    eq: Sequence[tuple[Sequence, object]] = (),
    ub: Sequence[tuple[Sequence, object]] = (),
    nonneg: Sequence[bool] | None = None,
) -> LPResult:
    """Maximize ``objective . x`` subject to ``a . x = b`` and ``a . x <= b``.

    Variables flagged in ``nonneg`` are bounded below by zero, the rest are free.
    """
    n = len(objective)
    if nonneg is None:
        nonneg = [False] * n
    for a, _ in list(eq) + list(ub):
        if len(a) != n:
            raise InvalidArgument("constraint length does not match the objective")
    # column layout: one column per nonneg var, two per free var, then slacks
    cols: list[tuple[int, int]] = []
    for j in range(n):
        cols.append((j, 1))
        if not nonneg[j]:
            cols.append((j, -1))
    nstruct = len(cols)
    nslack = len(ub)
    rows: list[Row] = []
    basis: list[int] = []
    artificial_rows = []
    all_rows = [(a, b, None) for a, b in eq] + [(a, b, k) for k, (a, b) in enumerate(ub)]
    nart = 0
    specs = []
    for a, b, slack in all_rows:
        coeffs = [Fraction(a[j]) * s for j, s in cols]
        slack_part = [Fraction(0)] * nslack
        if slack is not None:
            slack_part[slack] = Fraction(1)
        rhs = Fraction(b)
        if rhs < 0:
            coeffs = [-x for x in coeffs]
            slack_part = [-x for x in slack_part]
            rhs = -rhs
        needs_art = slack is None or slack_part[slack] < 0
        specs.append((coeffs + slack_part, rhs, slack, needs_art))
        nart += needs_art
    width = nstruct + nslack + nart
    art = 0
    for coeffs, rhs, slack, needs_art in specs:
        row = coeffs + [Fraction(0)] * nart + [rhs]
        if needs_art:
            col = nstruct + nslack + art
            row[col] = Fraction(1)
            basis.append(col)
            artificial_rows.append(len(rows))
            art += 1
        else:
            basis.append(nstruct + slack)
        rows.append(row)

    first_art = nstruct + nslack
    if nart:
        cost1 = [Fraction(0)] * first_art + [Fraction(1)] * nart
        status = _minimize(rows, basis, cost1, width)
        if status != OPTIMAL:
            raise InconsistencyError("phase one cannot be unbounded")
        if any(row[-1] for i, row in enumerate(rows) if basis[i] >= first_art):
            return LPResult(INFEASIBLE)
        # drive zero-level artificials out of the basis, dropping redundant rows
        i = 0
        while i < len(rows):
            if basis[i] >= first_art:
                col = next((j for j in range(first_art) if rows[i][j] != 0), None)
                if col is None:
                    del rows[i]
                    del basis[i]
                    continue
                _pivot(rows, basis, i, col)
            i += 1
    for k in range(len(rows)):
        rows[k] = rows[k][:first_art] + [rows[k][-1]]

    cost2 = [-Fraction(objective[j]) * s for j, s in cols] + [Fraction(0)] * nslack
    status = _minimize(rows, basis, cost2, first_art)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    y = [Fraction(0)] * first_art
    for i, row in enumerate(rows):
        y[basis[i]] = row[-1]
    x = [Fraction(0)] * n
    for k, (j, s) in enumerate(cols):
        x[j] += s * y[k]
    value = sum((Fraction(objective[j]) * x[j] for j in range(n)), Fraction(0))
    return LPResult(OPTIMAL, value, tuple(x))
