from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from cutdim.approx import base_x
from cutdim.cuts import cut_rows, enumerate_cuts
from cutdim.constructors import complete
from cutdim.errors import DimensionMismatchError
from cutdim.graph import Shore
from cutdim.linalg import (
    RationalMatrix,
    identity,
    in_rowspace,
    is_sdd_row,
    is_sdd_row_rect,
    nullspace_basis,
    rank,
    rref,
    rref_with_pivots,
)

from oracles import sympy_rank

rat = st.builds(Fraction, st.integers(-4, 4), st.integers(1, 3))
rat_matrices = st.tuples(st.integers(1, 5), st.integers(1, 5)).flatmap(
    lambda rc: st.lists(st.lists(rat, min_size=rc[1], max_size=rc[1]), min_size=rc[0], max_size=rc[0])
)


def to_sympy(rows):
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in rows])


@pytest.mark.parametrize("n", range(1, 7))
def test_identity_rank(n):
    assert rank(identity(n)) == n


def test_base_matrix_ranks():
    X = base_x()
    assert rank(X) == 6
    assert rank(X[:4]) == 4
    top, pivots = rref_with_pivots(X[:4])
    assert pivots == [0, 1, 2, 3]
    assert [list(r) for r in top] == [
        [1, 0, 0, 0, 0, -1],
        [0, 1, 0, 0, -1, 0],
        [0, 0, 1, 0, 1, 1],
        [0, 0, 0, 1, 1, 1],
    ]


@given(rat_matrices)
def test_rank_and_rref_against_sympy(rows):
    assert rank(rows) == sympy_rank(rows)
    R = rref(rows)
    assert to_sympy([list(r) for r in R]) == to_sympy(rows).rref()[0]


@given(rat_matrices)
def test_nullspace_against_sympy(rows):
    basis = nullspace_basis(rows)
    M = RationalMatrix.of(rows)
    assert len(basis) == len(to_sympy(rows).nullspace())
    for u in basis:
        assert not any(M.matvec(u))
    if basis:
        assert rank(basis) == len(basis)


def test_nullspace_of_full_column_rank_is_empty():
    assert nullspace_basis(base_x()) == []


def test_in_rowspace_examples():
    K4 = complete(4)
    shores = enumerate_cuts(K4)
    rows = cut_rows(K4, shores)
    ok, coeffs = in_rowspace(rows[0], rows)
    assert ok and RationalMatrix.of(rows).rmatvec(coeffs) == rows[0]

    stars = cut_rows(K4, [Shore.of([v], 4) for v in range(4)])
    pair = cut_rows(K4, [Shore.of([1, 2], 4)])[0]
    # sympy: the star rows together with this pair row have rank 5, so it is outside
    assert sympy_rank(stars + [pair]) == 5
    assert in_rowspace(pair, stars) == (False, None)
    # the three pair cuts do sum into the star span: half the sum of all stars
    total = [sum(c) for c in zip(*cut_rows(K4, [Shore.of(s, 4) for s in ([1, 2], [1, 3], [2, 3])]))]
    ok, coeffs = in_rowspace(total, stars)
    assert ok and coeffs == [Fraction(1)] * 4


@given(rat_matrices, st.data())
def test_in_rowspace_witness(rows, data):
    M = RationalMatrix.of(rows)
    c = data.draw(st.lists(rat, min_size=M.rows, max_size=M.rows))
    v = M.rmatvec(c)
    ok, coeffs = in_rowspace(v, M)
    assert ok and M.rmatvec(coeffs) == v
    with pytest.raises(DimensionMismatchError):
        in_rowspace(v + [0], M)


def test_in_rowspace_with_no_rows():
    empty = RationalMatrix.of([], cols=3)
    assert in_rowspace([0, 0, 0], empty) == (True, [])
    assert in_rowspace([0, 1, 0], empty) == (False, None)


def test_sdd_examples():
    assert is_sdd_row([[2, 0], [0, 2]], 0) and is_sdd_row([[2, 0], [0, 2]], 1)
    assert not is_sdd_row([[1, -1], [-1, 1]], 0)
    assert is_sdd_row([[2, -1, 0], [0, 1, 0], [0, 0, 1]], 0)
    assert is_sdd_row_rect([2, -1, 0], 0)
    with pytest.raises(DimensionMismatchError):
        is_sdd_row([[1, 0, 0]], 0)


@given(st.integers(2, 5).flatmap(lambda n: st.lists(st.lists(rat, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_sdd_rows_bound_kernel_vectors(rows):
    # a kernel vector never attains its max modulus on a strictly dominant row
    n = len(rows)
    for u in nullspace_basis(rows):
        top = max(abs(x) for x in u)
        for i in range(n):
            if is_sdd_row(rows, i):
                assert abs(u[i]) < top


def test_matrix_helpers():
    M = RationalMatrix.of([[1, 2], [3, 4]])
    assert M.transpose() == RationalMatrix.of([[1, 3], [2, 4]])
    assert (M - M) == RationalMatrix.of([[0, 0], [0, 0]])
    assert M.select(rows=[1], cols=[0]) == RationalMatrix.of([[3]])
    assert M.matvec([1, 1]) == [3, 7] and M.rmatvec([1, 1]) == [4, 6]
    with pytest.raises(DimensionMismatchError):
        RationalMatrix.of([[1, 2], [3]])
