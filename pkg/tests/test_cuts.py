from fractions import Fraction
from math import comb

import pytest
from hypothesis import given

from cutdim.constructors import complete, cycle, cycle_plus_eps, fixture_fig2, fixture_fig8, k4_union
from cutdim.cuts import (
    all_cut_weights,
    cdim_alpha,
    cut_dimension,
    enumerate_cuts,
    mincuts,
    near_mincuts,
)
from cutdim.errors import CapExceededError, InvalidParameterError
from cutdim.graph import Graph, Shore

from oracles import brute_cdim, brute_cut_weights, brute_mincuts, nx_lambda, weight_vectors


@pytest.mark.parametrize("n,count", [(2, 1), (4, 7), (5, 15)])
def test_enumerate_counts(n, count):
    shores = enumerate_cuts(complete(n))
    assert len(shores) == count == 2 ** (n - 1) - 1
    assert len(set(shores)) == count and all(s.is_canonical for s in shores)


def test_mincut_examples():
    r = mincuts(cycle(5))
    assert r.lam == 2 and len(r.mincuts) == 10
    r = mincuts(k4_union(1))
    assert r.lam == 3 and sorted(r.mincuts) == sorted(Shore.of([v], 4) for v in range(4))
    r = mincuts(fixture_fig8())
    expected = {Shore.of([v], 8) for v in range(8)}
    expected |= {Shore.of(s, 8) for s in ([0, 1], [2, 3], [4, 5], [6, 7], [0, 1, 2, 3])}
    assert r.lam == 4 and set(r.mincuts) == expected


@pytest.mark.parametrize("G,value", [(fixture_fig8(), 11), (fixture_fig2(), 7), (Graph(2, (Fraction(1),)), 1)])
def test_cdim_examples(G, value):
    assert cut_dimension(G) == value


@pytest.mark.parametrize("n", range(3, 10))
def test_cycle_cdim(n):
    assert cut_dimension(cycle(n)) == n


def test_cdim_alpha_examples():
    for n in range(3, 7):
        G = complete(n)
        assert cdim_alpha(G, 1) == cut_dimension(G)
        assert cdim_alpha(G, 2) == comb(n, 2)
    assert cdim_alpha(cycle_plus_eps(5, Fraction(3, 2)), Fraction(3, 2)) == 10


def test_cap_and_alpha_errors():
    with pytest.raises(CapExceededError):
        enumerate_cuts(complete(6), cap=5)
    with pytest.raises(CapExceededError):
        mincuts(complete(6), cap=5)
    with pytest.raises(InvalidParameterError):
        near_mincuts(cycle(4), Fraction(1, 2))
    with pytest.raises(InvalidParameterError):
        cdim_alpha(cycle(4), 0)


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv("CUTDIM_CAP", "4")
    with pytest.raises(CapExceededError):
        mincuts(cycle(5))
    assert mincuts(cycle(4)).lam == 2


@given(weight_vectors(max_n=7))
def test_cut_weights_and_mincuts_against_brute_force(nw):
    n, w = nw
    G = Graph(n, tuple(w))
    ref = brute_cut_weights(n, w)
    assert [ref[frozenset(s.members)] for s in enumerate_cuts(G)] == all_cut_weights(G)
    lam, ms = brute_mincuts(n, w)
    r = mincuts(G)
    assert r.lam == lam and {frozenset(s.members) for s in r.mincuts} == ms


@given(weight_vectors(max_n=6))
def test_cdim_against_sympy(nw):
    n, w = nw
    assert cut_dimension(Graph(n, tuple(w))) == brute_cdim(n, w)


@given(weight_vectors(min_n=3, max_n=7, positive=True))
def test_lambda_against_networkx(nw):
    n, w = nw
    assert float(mincuts(Graph(n, tuple(w))).lam) == pytest.approx(nx_lambda(n, w))


@given(weight_vectors(min_n=3, max_n=6))
def test_cdim_alpha_monotone(nw):
    n, w = nw
    G = Graph(n, tuple(w))
    dims = [cdim_alpha(G, a) for a in (1, Fraction(5, 4), Fraction(3, 2), 2, 3)]
    assert dims == sorted(dims)
    assert dims[0] == cut_dimension(G)
    assert dims[-1] <= len(G.support)


def test_report_json():
    obj = mincuts(cycle(3)).to_json_obj()
    assert obj == {"lambda": "2", "mincuts": [[1], [2], [1, 2]], "all_cuts_count": 3}
    obj = near_mincuts(cycle(4), 2).to_json_obj()
    assert obj["alpha"] == "2" and len(obj["cuts"]) == 7
