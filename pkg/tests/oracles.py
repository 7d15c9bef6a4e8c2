"""Reference computations that share no code with the library."""

from fractions import Fraction
from itertools import combinations

import networkx as nx
import sympy
from hypothesis import strategies as st


def pairs(n):
    return list(combinations(range(n), 2))


def brute_cut_weights(n, w):
    """Weight of every shore excluding vertex 0, keyed by frozenset."""
    out = {}
    for size in range(1, n):
        for shore in combinations(range(1, n), size):
            s = set(shore)
            out[frozenset(s)] = sum((x for (i, j), x in zip(pairs(n), w) if (i in s) != (j in s)), Fraction(0))
    return out


def brute_mincuts(n, w):
    cw = brute_cut_weights(n, w)
    lam = min(cw.values())
    return lam, {s for s, x in cw.items() if x == lam}


def brute_chi(n, w, shore, restricted=True):
    row = [int((i in shore) != (j in shore)) for i, j in pairs(n)]
    if restricted:
        row = [r for r, x in zip(row, w) if x > 0]
    return row


def sympy_rank(rows):
    if not rows or not rows[0]:
        return 0
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) if isinstance(x, Fraction) else x for x in r] for r in rows]).rank()


def brute_cdim(n, w):
    _, ms = brute_mincuts(n, w)
    return sympy_rank([brute_chi(n, w, s) for s in ms])


def nx_lambda(n, w):
    """Stoer-Wagner on a float copy; only used where weights are small dyadics."""
    G = nx.Graph()
    G.add_nodes_from(range(n))
    for (i, j), x in zip(pairs(n), w):
        if x > 0:
            G.add_edge(i, j, weight=float(x))
    if not nx.is_connected(G):
        return 0.0
    return nx.stoer_wagner(G)[0]


small_rationals = st.builds(Fraction, st.integers(0, 6), st.integers(1, 4))


@st.composite
def weight_vectors(draw, min_n=2, max_n=7, positive=False):
    n = draw(st.integers(min_n, max_n))
    elem = st.builds(Fraction, st.integers(1, 6), st.integers(1, 4)) if positive else small_rationals
    w = draw(st.lists(elem, min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    return n, w
