from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from positroid_lab.errors import InvalidArgument
from positroid_lab.lp import INFEASIBLE, OPTIMAL, UNBOUNDED, solve_lp


def test_simplex_vertex():
    res = solve_lp([1, 0, 0], eq=[((1, 1, 1), 1)], nonneg=[True] * 3)
    assert res.status == OPTIMAL and res.value == 1
    assert res.witness == (1, 0, 0)


def test_infeasible():
    res = solve_lp([1], ub=[((1,), -1), ((-1,), 0)])
    assert res.status == INFEASIBLE


def test_unbounded():
    assert solve_lp([1, 1], ub=[((1, -1), 0)], nonneg=[True, True]).status == UNBOUNDED


def test_free_variables_go_negative():
    res = solve_lp([-1], ub=[((-1,), 3)])
    assert res.status == OPTIMAL and res.value == 3 and res.witness == (-3,)


def test_fractional_optimum():
    res = solve_lp([1, 1], ub=[((2, 1), 1), ((1, 2), 1)], nonneg=[True, True])
    assert res.value == Fraction(2, 3)
    assert res.witness == (Fraction(1, 3), Fraction(1, 3))


def test_redundant_equalities():
    res = solve_lp([1, 2], eq=[((1, 1), 1), ((2, 2), 2)], nonneg=[True, True])
    assert res.value == 2


def test_degenerate_cycle_prone_problem():
    # Beale's example cycles under the textbook rule; Bland's rule terminates
    c = [Fraction(3, 4), -150, Fraction(1, 50), -6]
    ub = [
        ((Fraction(1, 4), -60, Fraction(-1, 25), 9), 0),
        ((Fraction(1, 2), -90, Fraction(-1, 50), 3), 0),
        ((0, 0, 1, 0), 1),
    ]
    res = solve_lp(c, ub=ub, nonneg=[True] * 4)
    assert res.status == OPTIMAL and res.value == Fraction(1, 20)


def test_dimension_mismatch():
    with pytest.raises(InvalidArgument):
        solve_lp([1, 2], ub=[((1,), 1)])


@given(
    st.lists(st.integers(-5, 5), min_size=3, max_size=3),
    st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=1, max_size=4),
)
def test_witness_is_feasible_and_exact(c, rows):
    ub = [(r, 4) for r in rows] + [((1, 1, 1), 6)]
    res = solve_lp(c, ub=ub, nonneg=[True] * 3)
    assert res.status in (OPTIMAL, UNBOUNDED)
    if res.status == OPTIMAL:
        x = res.witness
        assert all(v >= 0 for v in x)
        assert all(sum(a * v for a, v in zip(r, x)) <= b for r, b in ub)
        assert sum(a * v for a, v in zip(c, x)) == res.value
        # a brute-force check against the vertices of the box keeps the optimum honest
        assert res.value >= max(
            (sum(a * v for a, v in zip(c, p)) for p in _grid(3) if all(
                sum(a * v for a, v in zip(r, p)) <= b for r, b in ub)),
            default=res.value,
        )


def _grid(n):
    from itertools import product

    return [p for p in product(range(7), repeat=n)]
