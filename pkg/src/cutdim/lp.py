"""Exact two-phase simplex over the rationals.

Problems have the form

    maximize   c.x
    subject to A x = b,  x_j <= ub_j  (ub_j None means x_j is free below and above)

which is the shape of the adversary LP.  Internally bounded variables become
``y = ub - x >= 0`` and free ones ``x = p - q``, and the standard form is solved
with Bland's rule so degenerate pivots cannot cycle.

The dual returned alongside an optimum is ``min b.v + ub.s`` with
``s = c - A^T v``, ``s >= 0`` on bounded columns and ``s = 0`` on free ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatchError, InvariantViolation

Q = Fraction


@dataclass(frozen=True)
class LinearProgram:
    c: tuple[Fraction, ...]
    A: tuple[tuple[Fraction, ...], ...]
    b: tuple[Fraction, ...]
    ub: tuple[Fraction | None, ...]

    @classmethod
    def of(cls, c: Sequence, A: Sequence[Sequence], b: Sequence, ub: Sequence) -> "LinearProgram":
        c = tuple(Q(x) for x in c)
        A = tuple(tuple(Q(x) for x in row) for row in A)
        b = tuple(Q(x) for x in b)
        ub = tuple(None if x is None else Q(x) for x in ub)
        if len(ub) != len(c) or len(b) != len(A) or any(len(row) != len(c) for row in A):
            raise DimensionMismatchError("inconsistent LP dimensions")
        return cls(c, A, b, ub)

    @property
    def num_vars(self) -> int:
        return len(self.c)


class LPStatus(str, Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    """Outcome of :func:`lp_solve`.

    ``OPTIMAL``: ``x``, ``value``, dual ``v`` and reduced costs ``s``.
    ``UNBOUNDED``: feasible ``x`` and a ray ``ray`` with ``A ray = 0``,
    ``ray_j <= 0`` on bounded columns and ``c.ray > 0``.
    ``INFEASIBLE``: ``farkas`` vector ``y`` with ``A_j.y <= 0`` for bounded
    ``j``, ``A_j.y = 0`` for free ``j`` and ``b.y - sum(ub_j A_j.y) < 0``.
    """

    status: LPStatus
    value: Fraction | None = None
    x: tuple[Fraction, ...] | None = None
    v: tuple[Fraction, ...] | None = None
    s: tuple[Fraction, ...] | None = None
    ray: tuple[Fraction, ...] | None = None
    farkas: tuple[Fraction, ...] | None = None


def _pivot(T: list[list[Fraction]], r: int, col: int) -> None:
    row = T[r]
    inv = 1 / row[col]
    if inv != 1:
        T[r] = row = [x * inv for x in row]
    for i, other in enumerate(T):
        if i != r:
            f = other[col]
            if f:
                T[i] = [a - f * p for a, p in zip(other, row)]


def _run(T, basis, obj, allowed) -> int | None:
    """Bland's-rule simplex on tableau rows ``T`` with reduced-cost row ``obj``.

    ``obj[j]`` is the reduced cost of column ``j`` (positive means improving)
    and ``obj[-1]`` the negated objective value.  Returns None at optimum or
    the entering column of an unbounded ray.
    """
    m = len(T)
    while True:
        enter = next((j for j in allowed if obj[j] > 0), None)
        if enter is None:
            return None
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return enter
        r = best[1]
        rows = T + [obj]
        _pivot(rows, r, enter)
        T[:] = rows[:-1]
        obj[:] = rows[-1]
        basis[r] = enter


def _solve_square(M: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve a nonsingular square system exactly."""
    k = len(M)
    aug = [list(row) + [r] for row, r in zip(M, rhs)]
    for c in range(k):
        p = next(i for i in range(c, k) if aug[i][c])
        aug[c], aug[p] = aug[p], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(k):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
    return [row[-1] for row in aug]


def lp_solve(lp: LinearProgram) -> LPResult:
    nvar = lp.num_vars
    m = len(lp.A)
    # column layout of the standard form: one column per bounded var, two per free var
    cols: list[tuple[int, int]] = []  # (original var, sign)
    for j, u in enumerate(lp.ub):
        if u is None:
            cols += [(j, 1), (j, -1)]
        else:
            cols.append((j, -1))
    N = len(cols)
    shift = [sum((lp.A[i][j] * u for j, u in enumerate(lp.ub) if u is not None), Q(0)) for i in range(m)]
    rhs = [lp.b[i] - shift[i] for i in range(m)]
    flip = [1 if r >= 0 else -1 for r in rhs]
    Astd = [[flip[i] * sgn * lp.A[i][j] for j, sgn in cols] for i in range(m)]
    cstd = [sgn * lp.c[j] for j, sgn in cols]

    # phase 1: artificials N..N+m-1
    T = [Astd[i] + [Q(int(k == i)) for k in range(m)] + [flip[i] * rhs[i]] for i in range(m)]
    basis = [N + i for i in range(m)]
    obj = [sum((T[i][j] for i in range(m)), Q(0)) for j in range(N)] + [Q(0)] * m
    obj.append(sum((T[i][-1] for i in range(m)), Q(0)))
    _run(T, basis, obj, range(N))
    if obj[-1] != 0:
        # phase-1 duals give the Farkas certificate: y = c_B B^{-1} for cost -1 on artificials
        y = [flip[i] * (-obj[N + i] - 1) for i in range(m)]
        return LPResult(LPStatus.INFEASIBLE, farkas=tuple(y))
    # drive zero-level artificials out of the basis; rows where that fails are redundant
    keep = []
    for i in range(m):
        if basis[i] >= N:
            col = next((j for j in range(N) if T[i][j] != 0), None)
            if col is None:
                continue
            rows = T + [obj]
            _pivot(rows, i, col)
            T[:] = rows[:-1]
            basis[i] = col
        keep.append(i)
    T = [T[i][:N] + [T[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]
    kept_rows = keep

    # phase 2
    obj = list(cstd) + [Q(0)]
    for i, bv in enumerate(basis):
        f = obj[bv]
        if f:
            obj = [a - f * t for a, t in zip(obj, T[i])]
    enter = _run(T, basis, obj, range(N))
    xstd = [Q(0)] * N
    for i, bv in enumerate(basis):
        xstd[bv] = T[i][-1]
    x = _recover(lp, cols, xstd)
    if enter is not None:
        dstd = [Q(0)] * N
        dstd[enter] = Q(1)
        for i, bv in enumerate(basis):
            dstd[bv] = -T[i][enter]
        ray = [Q(0)] * nvar
        for (j, sgn), d in zip(cols, dstd):
            ray[j] += sgn * d
        return LPResult(LPStatus.UNBOUNDED, x=tuple(x), ray=tuple(ray))

    # dual: solve B^T pi = c_B on the kept rows, then undo the row sign flips
    B = [[Astd[r][bv] for r in kept_rows] for bv in basis]
    pi_kept = _solve_square(B, [cstd[bv] for bv in basis]) if basis else []
    v = [Q(0)] * m
    for r, p in zip(kept_rows, pi_kept):
        v[r] = flip[r] * p
    s = [lp.c[j] - sum((lp.A[i][j] * v[i] for i in range(m)), Q(0)) for j in range(nvar)]
    value = sum((a * b for a, b in zip(lp.c, x)), Q(0))
    result = LPResult(LPStatus.OPTIMAL, value=value, x=tuple(x), v=tuple(v), s=tuple(s))
    _check_optimal(lp, result)
    return result


def _recover(lp: LinearProgram, cols, xstd) -> list[Fraction]:
    x = [Q(0) if u is None else u for u in lp.ub]
    for (j, sgn), val in zip(cols, xstd):
        x[j] += sgn * val
    return x


def _check_optimal(lp: LinearProgram, res: LPResult) -> None:
    x, v, s = res.x, res.v, res.s
    for i, row in enumerate(lp.A):
        if sum((a * b for a, b in zip(row, x)), Q(0)) != lp.b[i]:
            raise InvariantViolation("simplex returned an infeasible point")
    for j, u in enumerate(lp.ub):
        if u is not None and (x[j] > u or s[j] < 0):
            raise InvariantViolation("simplex primal or dual bound violated")
        if u is None and s[j] != 0:
            raise InvariantViolation("dual constraint on a free column violated")
    dual = sum((a * b for a, b in zip(lp.b, v)), Q(0)) + sum(
        (u * sj for u, sj in zip(lp.ub, s) if u is not None), Q(0)
    )
    if dual != res.value:
        raise InvariantViolation(f"duality gap: primal {res.value}, dual {dual}")
