from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from cutdim.constructors import complete, cycle, fixture_fig8, k4_union
from cutdim.errors import InvalidEdgeError, InvalidShoreError, MalformedInputError
from cutdim.graph import (
    Graph,
    Shore,
    char_vector,
    cut_weight,
    edge_index,
    format_rational,
    num_slots,
    parse_rational,
)

from oracles import weight_vectors


@pytest.mark.parametrize("i,j,n,slot", [(0, 1, 4, 0), (2, 3, 4, 5), (0, 3, 4, 2)])
def test_edge_index_examples(i, j, n, slot):
    assert edge_index(i, j, n) == slot


@pytest.mark.parametrize("n", range(2, 10))
def test_edge_index_is_lexicographic_bijection(n):
    assert [edge_index(i, j, n) for i, j in combinations(range(n), 2)] == list(range(num_slots(n)))


@pytest.mark.parametrize("i,j", [(1, 1), (2, 1), (-1, 2), (0, 4)])
def test_edge_index_rejects_bad_pairs(i, j):
    with pytest.raises(InvalidEdgeError):
        edge_index(i, j, 4)


def test_cut_weight_examples():
    assert cut_weight(cycle(4), Shore.of([1], 4)) == 2
    assert cut_weight(k4_union(1), Shore.of([1], 4)) == 3
    assert cut_weight(fixture_fig8(), Shore.of([0, 1], 8)) == 4


def test_char_vector_examples():
    v = char_vector(complete(3, Fraction(1, 2)), Shore.of([1], 3))
    assert v.full == (1, 0, 1)
    c4 = cycle(4)
    assert sum(char_vector(c4, Shore.of([1, 2], 4)).restricted) == 2


def test_shore_canonicalization_and_errors():
    assert Shore.of([0, 1], 4) == Shore.of([2, 3], 4)
    assert Shore.of([0, 1], 4).is_canonical
    with pytest.raises(InvalidShoreError):
        Shore.of([0, 1, 2, 3], 4)
    with pytest.raises(InvalidShoreError):
        Shore.of([], 4)
    with pytest.raises(InvalidShoreError):
        Shore.of([5], 4)
    assert Shore.of([1], 4).is_star() and Shore.of([1, 2, 3], 4).is_star()
    assert not Shore.of([1, 2], 4).is_star()


@given(weight_vectors(), st.data())
def test_shore_symmetry_and_inner_product(nw, data):
    n, w = nw
    G = Graph(n, tuple(w))
    mask = data.draw(st.integers(1, (1 << n) - 2))
    X = Shore(mask, n)
    Xc = X.complement()
    assert char_vector(G, X) == char_vector(G, Xc)
    assert cut_weight(G, X) == cut_weight(G, Xc)
    full = char_vector(G, X).full
    assert cut_weight(G, X) == sum(a * b for a, b in zip(full, G.w))
    restricted = char_vector(G, X).restricted
    assert list(restricted) == [f for f, x in zip(full, G.w) if x > 0]


@given(weight_vectors(positive=True), st.data())
def test_complete_graph_restricted_equals_full(nw, data):
    n, w = nw
    G = Graph(n, tuple(w))
    X = Shore(data.draw(st.integers(1, (1 << n) - 2)), n)
    v = char_vector(G, X)
    assert v.full == v.restricted


@given(weight_vectors())
def test_json_roundtrip(nw):
    n, w = nw
    G = Graph(n, tuple(w))
    assert Graph.from_json(G.to_json()) == G
    assert Graph.from_json_obj({"graph": G.to_json_obj()}) == G


def test_graph_validation():
    with pytest.raises(InvalidEdgeError):
        Graph(3, (1, 1))
    with pytest.raises(InvalidEdgeError):
        Graph(2, (-1,))
    with pytest.raises(InvalidEdgeError):
        Graph(1, ())
    with pytest.raises(InvalidEdgeError):
        Graph.from_edges(3, [(1, 1, 1)])


def test_from_edges_accumulates_parallel_edges():
    assert Graph.from_edges(2, [(0, 1, 1), (1, 0, 1)]).w == (Fraction(2),)


@pytest.mark.parametrize(
    "bad",
    [
        "not json",
        '{"n": 3}',
        '{"n": 1, "edges": []}',
        '{"n": 3, "edges": [[0, 1]]}',
        '{"n": 3, "edges": [[0, 5, "1"]]}',
        '{"n": 3, "edges": [[0, 1, "0.5"]]}',
        '{"n": 3, "edges": [[0, 1, 0.5]]}',
        '{"n": 3, "edges": [[0, 1, "-1"]]}',
        '{"n": true, "edges": []}',
    ],
)
def test_malformed_json(bad):
    with pytest.raises(MalformedInputError):
        Graph.from_json(bad)


def test_parse_and_format_rational():
    assert parse_rational("3/6") == Fraction(1, 2)
    assert parse_rational(4) == 4
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(-1, 3)) == "-1/3"
    for bad in ("1.5", "1e3", "", True, 0.5, "1/0", None):
        with pytest.raises(MalformedInputError):
            parse_rational(bad)


def test_relabel_and_dot():
    G = Graph.from_edges(3, [(0, 1, 1), (1, 2, 2)])
    H = G.relabel([2, 0, 1])
    assert H.weight(2, 0) == 1 and H.weight(0, 1) == 2
    with pytest.raises(InvalidEdgeError):
        G.relabel([0, 0, 1])
    assert '0 -- 1 [label="1"]' in G.to_dot()
