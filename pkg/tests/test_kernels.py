from fractions import Fraction

from hypothesis import given, strategies as st

from cutdim import _backend, _pykernels

from oracles import brute_cut_weights, pairs, sympy_rank

int_matrices = st.integers(1, 6).flatmap(
    lambda c: st.lists(st.lists(st.integers(-5, 5), min_size=c, max_size=c), min_size=1, max_size=7)
)


@given(st.integers(2, 8).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(0, 9), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))))
def test_cut_weights_match_brute_force_on_all_backends(nw):
    n, w = nw
    ref = brute_cut_weights(n, [Fraction(x) for x in w])
    for impl in _backend.available_backends().values():
        got = impl.cut_weights(n, w)
        for k, x in enumerate(got):
            shore = frozenset(v for v in range(n) if (2 * (k + 1)) >> v & 1)
            assert x == ref[shore]


@given(int_matrices)
def test_rank_matches_sympy_on_all_backends(rows):
    expect = sympy_rank(rows)
    for impl in _backend.available_backends().values():
        assert impl.rank_int(rows) == expect


def test_rank_handles_overflowing_entries(backend):
    big = 1 << 61
    rows = [[big, big + 1, 3], [big + 1, big + 2, 5], [1, 1, 1]]
    assert _backend.rank_int(rows) == sympy_rank(rows)
    huge = [[1 << 70, 1], [1, 1 << 70]]
    assert _backend.rank_int(huge) == 2
    # growth of minors during elimination, not just the inputs
    hilbert_like = [[(1 << 40) // (i + j + 1) for j in range(6)] for i in range(6)]
    assert _backend.rank_int(hilbert_like) == sympy_rank(hilbert_like)


def test_crossing_matrix_agrees_and_allows_repeated_columns(backend):
    n = 5
    masks = [2, 6, 14, 30, 10]
    cols = [0, 3, 3, 9, 5]
    got = _backend.crossing_matrix(n, masks, cols)
    P = pairs(n)
    assert got == [[(m >> P[c][0] ^ m >> P[c][1]) & 1 for c in cols] for m in masks]
    assert got == _pykernels.crossing_matrix(n, masks, cols)


def test_int64_guard_routes_large_weights_to_python(backend):
    w = [1 << 62, 1, 1]
    assert _backend.cut_weights(3, w) == _pykernels.cut_weights(3, w)


def test_empty_and_zero_rank(backend):
    assert _backend.rank_int([]) == 0
    assert _backend.rank_int([[0, 0], [0, 0]]) == 0
    assert _backend.rank_int([[]]) == 0


def test_backend_name():
    assert _backend.BACKEND in _backend.available_backends()
