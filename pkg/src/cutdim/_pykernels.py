"""Pure-Python implementations of the hot kernels.

Same signatures as the compiled ``_ckernels`` module.  Everything works on
Python integers, so nothing here can overflow.
"""

from __future__ import annotations

NAME = "python"


def cut_weights(n: int, w: list[int]) -> list[int]:
    """Weights of all canonical cuts of an integer-weighted graph.

    Entry ``m - 1`` holds the weight of the shore whose bitmask is ``m << 1``
    (vertex 0 never belongs to a canonical shore).  Shores are visited in
    Gray-code order so each step flips one vertex and costs O(n).
    """
    adj = [[0] * n for _ in range(n)]
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            adj[i][j] = adj[j][i] = w[k]
            k += 1
    deg = [sum(row) for row in adj]
    inside = [0] * n  # inside[u] = weight from u into the current shore
    member = [False] * n
    total = (1 << (n - 1)) - 1
    out = [0] * total
    cut = 0
    for step in range(1, total + 1):
        v = (step & -step).bit_length()  # flipped bit b -> vertex b + 1
        row = adj[v]
        if member[v]:
            member[v] = False
            for u in range(n):
                inside[u] -= row[u]
            cut -= deg[v] - 2 * inside[v]
        else:
            cut += deg[v] - 2 * inside[v]
            member[v] = True
            for u in range(n):
                inside[u] += row[u]
        gray = step ^ (step >> 1)
        out[gray - 1] = cut
    return out


def crossing_matrix(n: int, masks: list[int], cols: list[int]) -> list[list[int]]:
    """0/1 rows: entry (r, c) is 1 iff slot ``cols[c]`` crosses ``masks[r]``."""
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            pairs.append((i, j))
    sel = [pairs[c] for c in cols]
    return [[(m >> i ^ m >> j) & 1 for i, j in sel] for m in masks]


def rank_int(rows: list[list[int]]) -> int:
    """Exact rank of an integer matrix by fraction-free (Bareiss) elimination."""
    if not rows:
        return 0
    a = [list(r) for r in rows if any(r)]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        # smallest nonzero pivot keeps the minors growing slowly
        best = -1
        for i in range(r, nrows):
            x = a[i][c]
            if x and (best < 0 or abs(x) < abs(a[best][c])):
                best = i
        if best < 0:
            continue
        a[r], a[best] = a[best], a[r]
        piv_row = a[r]
        p = piv_row[c]
        for i in range(r + 1, nrows):
            row = a[i]
            f = row[c]
            if f:
                for j in range(c + 1, ncols):
                    row[j] = (p * row[j] - f * piv_row[j]) // prev
            else:
                for j in range(c + 1, ncols):
                    row[j] = (p * row[j]) // prev
            row[c] = 0
        prev = p
        r += 1
    return r
