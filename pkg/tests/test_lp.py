from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.optimize import linprog

from cutdim.errors import DimensionMismatchError
from cutdim.lp import LinearProgram, LPStatus, lp_solve

small = st.integers(-3, 3)


@st.composite
def programs(draw):
    nv = draw(st.integers(1, 5))
    m = draw(st.integers(0, 3))
    c = draw(st.lists(small, min_size=nv, max_size=nv))
    A = draw(st.lists(st.lists(small, min_size=nv, max_size=nv), min_size=m, max_size=m))
    b = draw(st.lists(small, min_size=m, max_size=m))
    ub = draw(st.lists(st.one_of(st.none(), st.integers(0, 4)), min_size=nv, max_size=nv))
    return LinearProgram.of(c, A, b, ub)


def scipy_solve(lp):
    kw = {}
    if lp.A:
        kw = dict(A_eq=np.array(lp.A, dtype=float), b_eq=np.array(lp.b, dtype=float))
    bounds = [(None, None if u is None else float(u)) for u in lp.ub]
    return linprog(-np.array(lp.c, dtype=float), bounds=bounds, method="highs", **kw)


def check_certificates(lp, res):
    if res.status is LPStatus.OPTIMAL:
        x = res.x
        assert all(sum(a * xi for a, xi in zip(row, x)) == bi for row, bi in zip(lp.A, lp.b))
        assert all(u is None or xi <= u for xi, u in zip(x, lp.ub))
        assert sum(ci * xi for ci, xi in zip(lp.c, x)) == res.value
        # weak duality with equality
        dual = sum(bi * vi for bi, vi in zip(lp.b, res.v)) + sum(u * s for u, s in zip(lp.ub, res.s) if u is not None)
        assert dual == res.value
    elif res.status is LPStatus.UNBOUNDED:
        assert all(sum(a * r for a, r in zip(row, res.ray)) == 0 for row in lp.A)
        assert all(u is None or r <= 0 for r, u in zip(res.ray, lp.ub))
        assert sum(ci * r for ci, r in zip(lp.c, res.ray)) > 0
    else:
        y = res.farkas
        cols = [[row[j] for row in lp.A] for j in range(lp.num_vars)]
        for col, u in zip(cols, lp.ub):
            dot = sum(a * yi for a, yi in zip(col, y))
            assert dot == 0 if u is None else dot <= 0
        bound = sum(bi * yi for bi, yi in zip(lp.b, y))
        bound -= sum(u * sum(a * yi for a, yi in zip(col, y)) for col, u in zip(cols, lp.ub) if u is not None)
        assert bound < 0


@settings(max_examples=200)
@given(programs())
def test_against_scipy(lp):
    res = lp_solve(lp)
    ref = scipy_solve(lp)
    expected = {0: LPStatus.OPTIMAL, 2: LPStatus.INFEASIBLE, 3: LPStatus.UNBOUNDED}[ref.status]
    assert res.status is expected
    if expected is LPStatus.OPTIMAL:
        assert float(res.value) == pytest.approx(-ref.fun, abs=1e-7)
    check_certificates(lp, res)


def test_upper_bounds_bind_without_equalities():
    w = [3, 1, 2, 5]
    res = lp_solve(LinearProgram.of([1, 0, 1, 1], [], [], w))
    assert res.status is LPStatus.OPTIMAL and res.value == 10
    assert [res.x[j] for j in (0, 2, 3)] == [3, 2, 5]


def test_infeasible_system():
    res = lp_solve(LinearProgram.of([1, 1], [[1, 1], [1, 1]], [1, 2], [None, None]))
    assert res.status is LPStatus.INFEASIBLE
    check_certificates(LinearProgram.of([1, 1], [[1, 1], [1, 1]], [1, 2], [None, None]), res)


def test_unbounded_free_variable():
    lp = LinearProgram.of([1, 0], [[0, 1]], [1], [None, None])
    res = lp_solve(lp)
    assert res.status is LPStatus.UNBOUNDED
    check_certificates(lp, res)


def test_degenerate_and_redundant_rows():
    lp = LinearProgram.of([1, 1, 1], [[1, -1, 0], [2, -2, 0], [0, 1, -1]], [0, 0, 0], [1, 1, 1])
    res = lp_solve(lp)
    assert res.status is LPStatus.OPTIMAL and res.value == 3
    check_certificates(lp, res)


def test_exact_rational_value():
    lp = LinearProgram.of([1, 1], [[3, 7]], [1], [None, Fraction(1, 3)])
    res = lp_solve(lp)
    # x1 = (1 - 7 x2) / 3 gives value 1/3 - 4 x2 / 3, which grows as x2 falls
    assert res.status is LPStatus.UNBOUNDED
    lp = LinearProgram.of([1, -1], [[3, 7]], [1], [Fraction(1, 3), None])
    res = lp_solve(lp)
    assert res.status is LPStatus.OPTIMAL and res.value == Fraction(1, 3)


def test_dimension_checks():
    with pytest.raises(DimensionMismatchError):
        LinearProgram.of([1, 2], [[1]], [0], [None, None])
    with pytest.raises(DimensionMismatchError):
        LinearProgram.of([1, 2], [[1, 1]], [], [None, None])
