import json
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.optimize import linprog

from cutdim.adversary import (
    alpha,
    cut_matrix,
    find_fooling,
    query_matrix_from_json_obj,
    query_matrix_to_json,
    random_query_matrix,
    verify_fooling,
)
from cutdim.approx import base_x
from cutdim.constructors import (
    K4_CUT_MASKS,
    K4_EDGE_SLOTS,
    complete,
    k4_union,
    k4_union_cut_shores,
    merge_construction,
)
from cutdim.cuts import all_cut_weights, cut_rows, mincuts
from cutdim.errors import DimensionMismatchError, MalformedInputError
from cutdim.graph import Graph, Shore, char_vector
from cutdim.linalg import RationalMatrix, in_rowspace, rank

from oracles import weight_vectors


def scipy_alpha(w, A, s):
    kw = {}
    if A:
        kw = dict(A_eq=np.array(A, dtype=float), b_eq=np.zeros(len(A)))
    r = linprog(-np.array(s, dtype=float), bounds=[(None, float(x)) for x in w], method="highs", **kw)
    return -r.fun


def test_alpha_with_no_queries_is_cut_weight():
    G = merge_construction(5).graph
    for S in (Shore.of([1], 5), Shore.of([1, 3], 5)):
        cert = alpha(G.w, RationalMatrix.of([], cols=10), S)
        assert cert.value == sum(a * b for a, b in zip(char_vector(G, S).full, G.w))


def test_alpha_zero_when_row_is_queried():
    G = complete(4)
    S = Shore.of([1, 2], 4)
    cert = alpha(G.w, [char_vector(G, S).full], S)
    assert cert.value == 0 and not any(cert.u) and cert.v == (1,)


def test_alpha_for_pair_cut_against_star_queries():
    # the pair cut lies outside the star span, so it can be hidden completely
    G = complete(4)
    stars = cut_rows(G, [Shore.of([v], 4) for v in range(4)], full=True)
    S = Shore.of([1, 2], 4)
    cert = alpha(G.w, stars, S)
    assert cert.value == 4 == scipy_alpha(G.w, stars, char_vector(G, S).full)
    for v in range(4):
        assert alpha(G.w, stars, Shore.of([v], 4)).value == 0


@settings(max_examples=80)
@given(weight_vectors(2, 5), st.data())
def test_alpha_against_scipy_and_duality(nw, data):
    n, w = nw
    G = Graph(n, tuple(w))
    slots = len(w)
    m = data.draw(st.integers(0, slots))
    A = data.draw(st.lists(st.lists(st.integers(-2, 2), min_size=slots, max_size=slots), min_size=m, max_size=m))
    S = Shore(data.draw(st.integers(1, (1 << n) - 2)), n)
    s = char_vector(G, S).full
    cert = alpha(w, A or RationalMatrix.of([], cols=slots), S)
    assert float(cert.value) == pytest.approx(scipy_alpha(w, A, s), abs=1e-7)
    assert 0 <= cert.value <= sum(a * b for a, b in zip(s, w))
    M = RationalMatrix.of(A, slots)
    assert sum(a * b for a, b in zip(s, cert.z)) == cert.value == sum(a * b for a, b in zip(cert.u, w))
    assert list(cert.u) == [a - b for a, b in zip(s, M.rmatvec(cert.v))] and min(cert.u, default=0) >= 0


@settings(max_examples=60)
@given(weight_vectors(2, 5), st.data())
def test_alpha_on_random_nonnegative_objectives_is_bounded(nw, data):
    n, w = nw
    slots = len(w)
    A = data.draw(st.lists(st.lists(st.integers(-2, 2), min_size=slots, max_size=slots), min_size=0, max_size=slots))
    s = data.draw(st.lists(st.integers(0, 3), min_size=slots, max_size=slots))
    cert = alpha(w, A or RationalMatrix.of([], cols=slots), s)
    assert cert.value <= sum(a * b for a, b in zip(s, w))


def test_no_fooling_when_all_cuts_are_queried():
    for G in (complete(4), merge_construction(5).graph, k4_union(2)):
        assert find_fooling(G, cut_matrix(G)) is None


@pytest.mark.parametrize("k", [1, 2])
def test_k4_union_is_fooled_below_6k_queries(k):
    G = k4_union(k)
    rng = random.Random(k)
    pool = cut_rows(G, k4_union_cut_shores(k), full=True)
    for _ in range(3):
        A = random_query_matrix(pool, 6 * k - 1, rng)
        pair = find_fooling(G, A)
        assert pair is not None and pair.margin > 0
        verify_fooling(G, A, pair)
        assert A.matvec(list(G.w)) == A.matvec(list(pair.g_prime.w))
        assert mincuts(pair.g_prime).lam < mincuts(G).lam


@pytest.mark.parametrize("n", [4, 5, 6])
def test_merge_construction_fooled_by_deficient_mincut_span(n):
    G = merge_construction(n).graph
    pool = cut_rows(G, mincuts(G).mincuts, full=True)
    rng = random.Random(n)
    for _ in range(3):
        A = random_query_matrix(pool, 2 * n - 4, rng)
        pair = find_fooling(G, A)
        assert pair is not None
        assert pair.cut in mincuts(G).mincuts


@settings(max_examples=40)
@given(weight_vectors(3, 5, positive=True), st.data())
def test_soundness_on_complete_graphs(nw, data):
    # a minimum cut whose vector is missed by the query rowspace can be hidden
    n, w = nw
    G = Graph(n, tuple(w))
    ms = list(mincuts(G).mincuts)
    pool = cut_rows(G, ms, full=True)
    r = rank(pool)
    target = data.draw(st.integers(0, max(r - 1, 0)))
    A = random_query_matrix(pool, target, random.Random(data.draw(st.integers(0, 999)))) if target else RationalMatrix.of([], cols=len(w))
    missed = [S for S, row in zip(ms, pool) if not in_rowspace(row, A)[0]]
    assert missed
    for S in missed:
        assert alpha(w, A, S).value > 0
    assert find_fooling(G, A) is not None


def test_cut_matrix_matches_fixed_k4_matrix():
    M = cut_matrix(complete(4))
    assert M.rows == 7
    canon = [2 * (k + 1) for k in range(M.rows)]
    permuted = [[M[canon.index(m)][s] for s in K4_EDGE_SLOTS] for m in K4_CUT_MASKS]
    assert permuted == base_x()


@given(weight_vectors(2, 7))
def test_cut_matrix_times_weights(nw):
    n, w = nw
    G = Graph(n, tuple(w))
    M = cut_matrix(G)
    assert M.rows == 2 ** (n - 1) - 1
    assert M.matvec(list(G.w)) == all_cut_weights(G)


def test_query_json_roundtrip_and_errors():
    A = RationalMatrix.of([[1, Fraction(-1, 2)], [0, 3]])
    assert query_matrix_from_json_obj(json.loads(query_matrix_to_json(A))) == A
    for bad in ([], {"rows": 3}, {"rows": [1]}, {"rows": [[1], [1, 2]]}, {"rows": [["0.5"]]}):
        with pytest.raises(MalformedInputError):
            query_matrix_from_json_obj(bad)
    with pytest.raises(DimensionMismatchError):
        find_fooling(complete(4), [[1, 2]])
