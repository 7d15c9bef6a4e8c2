"""Certificates for the l1-approximate cut dimension.

Computing the approximate rank itself is a min-rank problem with no known
algorithm; what lives here is checking.  Given a perturbation ``P`` we verify
it is admissible (nonnegative, weighted row mass within budget) and compute
the rank of ``M - P``.  For unions of K4 blocks the elimination argument that
reduces every admissible perturbation to a strictly diagonally dominant core
is carried out step by step and cross-checked against a direct rank.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .constructors import K4_EDGE_SLOTS, K4_CUT_MASKS, K4_MINCUT_ROWS
from .cuts import cut_dimension
from .errors import DimensionMismatchError, InvariantViolation, PreconditionError
from .graph import Graph, slot_pairs
from .linalg import RationalMatrix, rank, rref

Q = Fraction


@dataclass(frozen=True)
class PerturbationInstance:
    M: RationalMatrix
    w: tuple[Fraction, ...]
    c: tuple[Fraction, ...]
    P: RationalMatrix

    @classmethod
    def of(cls, M, w, c, P) -> "PerturbationInstance":
        M = RationalMatrix.of(M)
        P = RationalMatrix.of(P)
        w = tuple(Q(x) for x in w)
        c = tuple(Q(x) for x in c)
        if (M.rows, M.cols) != (P.rows, P.cols) or len(w) != M.cols or len(c) != M.rows:
            raise DimensionMismatchError("perturbation instance dimensions are inconsistent")
        return cls(M, w, c, P)

    @property
    def approximant(self) -> RationalMatrix:
        return self.M - self.P


@dataclass(frozen=True)
class PerturbationReport:
    valid: bool
    slack: tuple[Fraction, ...]
    negative_entries: tuple[tuple[int, int], ...]
    rank: int

    def to_json_obj(self) -> dict:
        from .graph import format_rational

        return {
            "valid": self.valid,
            "slack": [format_rational(x) for x in self.slack],
            "negative_entries": [list(p) for p in self.negative_entries],
            "rank": self.rank,
        }


def perturbation_valid(inst: PerturbationInstance) -> PerturbationReport:
    """Exact admissibility check with per-row slack ``c(i) - sum_j |w(j) P(i, j)|``."""
    neg = tuple((i, j) for i, row in enumerate(inst.P) for j, x in enumerate(row) if x < 0)
    slack = tuple(
        ci - sum((abs(wj * x) for wj, x in zip(inst.w, row)), Q(0)) for ci, row in zip(inst.c, inst.P)
    )
    valid = not neg and all(s >= 0 for s in slack)
    return PerturbationReport(valid, slack, neg, rank(inst.approximant))


def cdim_lower_via_mincuts(G: Graph, cap: int | None = None) -> int:
    """Lower bound on the approximate cut dimension: minimum-cut rows have zero budget."""
    return cut_dimension(G, cap)


# --- rank of the perturbed 3k x 2k block -----------------------------------


def lem2k_base(k: int) -> list[list[Fraction]]:
    """``[2 I_{2k}; -2 I_k (x) [1, 1]]``."""
    top = [[Q(2 if i == j else 0) for j in range(2 * k)] for i in range(2 * k)]
    bottom = [[Q(-2 if j // 2 == i else 0) for j in range(2 * k)] for i in range(k)]
    return top + bottom


def swap_pairs(M: Sequence[Sequence]) -> list[list[Fraction]]:
    """Swap columns ``2j`` and ``2j+1`` for every ``j`` (an involution)."""
    out = []
    for row in M:
        r = list(row)
        for j in range(0, len(r) - 1, 2):
            r[j], r[j + 1] = r[j + 1], r[j]
        out.append(r)
    return out


def lem2k_conditions(k: int, A1, A2) -> list[str]:
    """Reasons (if any) that ``(A1, A2)`` are not an admissible block perturbation."""
    problems = []
    for name, A in (("A1", A1), ("A2", A2)):
        if len(A) != 3 * k or any(len(r) != 2 * k for r in A):
            problems.append(f"{name} must be {3 * k}x{2 * k}")
            return problems
        if any(x < 0 for r in A for x in r):
            problems.append(f"{name} has a negative entry")
    for i, r in enumerate(A2):
        if any(r[2 * j] != r[2 * j + 1] for j in range(k)):
            problems.append(f"A2 row {i} breaks the partner property")
    for i, (r1, r2) in enumerate(zip(A1, A2)):
        if sum(r1) + sum(r2) / 2 > 1:
            problems.append(f"row {i} of A1 + A2/2 sums to more than 1")
    return problems


def check_lem2k(k: int, A1, A2) -> bool:
    """``rank(B + A1 - A2) == 2k`` for admissible ``A1, A2``; inadmissible input raises."""
    A1 = [[Q(x) for x in r] for r in A1]
    A2 = [[Q(x) for x in r] for r in A2]
    problems = lem2k_conditions(k, A1, A2)
    if problems:
        raise PreconditionError("; ".join(problems))
    B = lem2k_base(k)
    Z = [[b + a1 - a2 for b, a1, a2 in zip(rb, r1, r2)] for rb, r1, r2 in zip(B, A1, A2)]
    return rank(Z) == 2 * k


def full_rows(k: int, A1, A2) -> list[int]:
    """Type-I rows that are not strictly diagonally dominant in ``B + A1 - A2``."""
    return [i for i in range(2 * k) if not any(A1[i]) and sum(A2[i]) == 2]


# --- K4 unions ------------------------------------------------------------


def base_x() -> list[list[int]]:
    """Cut vectors of the seven distinguished K4 cuts in the fixed K4 edge order."""
    pairs = slot_pairs(4)
    return [[(m >> pairs[s][0] ^ m >> pairs[s][1]) & 1 for s in K4_EDGE_SLOTS] for m in K4_CUT_MASKS]


def x_k(k: int) -> list[list[Fraction]]:
    """Block-diagonal ``I_k (x) X``."""
    X = base_x()
    out = []
    for i in range(k):
        for row in X:
            out.append([Q(row[j - 6 * i]) if 6 * i <= j < 6 * i + 6 else Q(0) for j in range(6 * k)])
    return out


def _is_mincut_row(r: int) -> bool:
    return r % 7 < K4_MINCUT_ROWS


def k4_perturbation_problems(k: int, A) -> list[str]:
    problems = []
    if len(A) != 7 * k or any(len(r) != 6 * k for r in A):
        return [f"perturbation must be {7 * k}x{6 * k}"]
    for r, row in enumerate(A):
        if any(x < 0 for x in row):
            problems.append(f"row {r} has a negative entry")
        if _is_mincut_row(r) and any(row):
            problems.append(f"row {r} is a minimum-cut row and must stay unperturbed")
        if not _is_mincut_row(r) and sum(row) > 1:
            problems.append(f"row {r} has mass above its budget of 1")
    return problems


def k4_instance(k: int, A) -> PerturbationInstance:
    """The perturbation instance of ``X^(k)`` with unit weights and budgets ``(0,0,0,0,1,1,1)``."""
    c = [Q(0) if _is_mincut_row(r) else Q(1) for r in range(7 * k)]
    return PerturbationInstance.of(x_k(k), [1] * (6 * k), c, A)


@dataclass(frozen=True)
class K4RankReport:
    k: int
    pipeline_rank: int
    direct_rank: int
    core: tuple[tuple[Fraction, ...], ...]
    core_a1: tuple[tuple[Fraction, ...], ...]
    core_a2: tuple[tuple[Fraction, ...], ...]

    @property
    def ok(self) -> bool:
        return self.pipeline_rank == self.direct_rank == 6 * self.k


_X_PRIME_TOP = [[1, 0, 0, 0, 0, -1], [0, 1, 0, 0, -1, 0], [0, 0, 1, 0, 1, 1], [0, 0, 0, 1, 1, 1]]


def k4_union_reduction(k: int, A) -> K4RankReport:
    """Carry out the elimination on ``X^(k) - A`` and extract the ``3k x 2k`` core.

    Steps, each applied to the full matrix with exact arithmetic:
    Gauss-Jordan on the four minimum-cut rows of each block; per block the
    column operations ``c5 += c2 - c3 - c4`` and ``c6 += c1 - c3 - c4``; row
    operations clearing the first four columns of each block with the unit
    rows; negating and swapping the last two columns of each block.  The
    result must be a unit part on the ``4k`` minimum-cut rows plus a core of
    the form ``B + A1' - A2'`` whose admissibility is checked.
    """
    A = [[Q(x) for x in r] for r in A]
    problems = k4_perturbation_problems(k, A)
    if problems:
        raise PreconditionError("; ".join(problems))
    X = x_k(k)
    M = [[a - b for a, b in zip(rx, ra)] for rx, ra in zip(X, A)]
    ncols = 6 * k

    for i in range(k):
        rows = list(range(7 * i, 7 * i + 4))
        reduced = rref([M[r] for r in rows])
        for r, new in zip(rows, reduced):
            M[r] = list(new)
        for r, expect in zip(rows, _X_PRIME_TOP):
            if M[r][6 * i : 6 * i + 6] != [Q(x) for x in expect]:
                raise InvariantViolation("unexpected reduced form of the minimum-cut rows")

    for i in range(k):
        c1, c2, c3, c4, c5, c6 = range(6 * i, 6 * i + 6)
        for row in M:
            row[c5] += row[c2] - row[c3] - row[c4]
            row[c6] += row[c1] - row[c3] - row[c4]

    for i in range(k):
        for j in range(4):
            unit, col = M[7 * i + j], 6 * i + j
            if any(x != (1 if t == col else 0) for t, x in enumerate(unit)):
                raise InvariantViolation("minimum-cut row is not a unit vector after column operations")
            for r in range(7 * k):
                if r != 7 * i + j and M[r][col]:
                    f = M[r][col]
                    M[r] = [a - f * b for a, b in zip(M[r], unit)]

    for i in range(k):
        c5, c6 = 6 * i + 4, 6 * i + 5
        for row in M:
            row[c5], row[c6] = -row[c6], -row[c5]

    type_one = [r for i in range(k) for r in (7 * i + 4, 7 * i + 5)]
    type_two = [7 * i + 6 for i in range(k)]
    core_cols = [c for i in range(k) for c in (6 * i + 4, 6 * i + 5)]
    for r in type_one + type_two:
        if any(M[r][c] for c in range(ncols) if c not in core_cols):
            raise InvariantViolation("non-core entry survived the elimination")

    core = [[M[r][c] for c in core_cols] for r in type_one + type_two]
    # the same core predicted from the perturbation blocks: A1' = A1 + A3 swapped, A2' = A2 + A2 swapped
    a1p, a2p = [], []
    for r in type_one + type_two:
        row1, row2 = [], []
        for i in range(k):
            b = 6 * i
            a1 = A[r][b : b + 2]
            a2 = A[r][b + 2 : b + 4]
            a3 = A[r][b + 4 : b + 6]
            row1 += [a1[0] + a3[1], a1[1] + a3[0]]
            row2 += [a2[0] + a2[1], a2[0] + a2[1]]
        a1p.append(row1)
        a2p.append(row2)
    B = lem2k_base(k)
    predicted = [[b + x - y for b, x, y in zip(rb, r1, r2)] for rb, r1, r2 in zip(B, a1p, a2p)]
    if predicted != core:
        raise InvariantViolation("reduced core differs from B + A1' - A2'")
    problems = lem2k_conditions(k, a1p, a2p)
    if problems:
        raise InvariantViolation("reduced core is not an admissible block perturbation: " + "; ".join(problems))
    pipeline = 4 * k + rank(core)
    direct = rank([[a - b for a, b in zip(rx, ra)] for rx, ra in zip(X, A)])
    return K4RankReport(
        k,
        pipeline,
        direct,
        tuple(map(tuple, core)),
        tuple(map(tuple, a1p)),
        tuple(map(tuple, a2p)),
    )


def check_k4_union_rank(k: int, A) -> bool:
    """``rank(X^(k) - A) == 6k`` by the reduction and by a direct rank; both must agree."""
    rep = k4_union_reduction(k, A)
    if rep.pipeline_rank != rep.direct_rank:
        raise InvariantViolation(f"pipeline rank {rep.pipeline_rank} != direct rank {rep.direct_rank}")
    return rep.ok


# --- samplers ---------------------------------------------------------------


def _split(total: Fraction, parts: int, rng: random.Random, max_den: int) -> list[Fraction]:
    """Random nonnegative grid values summing to at most ``total``."""
    out = []
    left = total
    for _ in range(parts):
        if left <= 0:
            out.append(Q(0))
            continue
        den = rng.randint(1, max_den)
        x = Q(rng.randint(0, int(left * den)), den)
        out.append(x)
        left -= x
    rng.shuffle(out)
    return out


def random_lem2k(k: int, rng: random.Random, max_den: int = 8) -> tuple[list[list[Fraction]], list[list[Fraction]]]:
    A1, A2 = [], []
    for _ in range(3 * k):
        budget = Q(rng.randint(0, max_den), max_den)
        share = Q(rng.randint(0, max_den), max_den) * budget
        a1 = _split(share, 2 * k, rng, max_den)
        # A2/2 spends the rest; each partner pair gets equal entries
        pairs = _split(budget - sum(a1), k, rng, max_den)
        a2 = [x for p in pairs for x in (p, p)]
        A1.append(a1)
        A2.append(a2)
    return A1, A2


def boundary_lem2k(k: int) -> list[tuple[list[list[Fraction]], list[list[Fraction]]]]:
    """Hand-picked extreme cases: zero, full type-I rows, saturated type-II rows."""
    zero = [[Q(0)] * (2 * k) for _ in range(3 * k)]
    cases = [(zero, zero)]
    for target in range(k):
        # every type-I row full, all its A2 mass on one partner pair
        A2 = [[Q(1) if j // 2 == (i // 2 + target) % k else Q(0) for j in range(2 * k)] for i in range(2 * k)]
        A2 += [[Q(0)] * (2 * k) for _ in range(k)]
        cases.append((zero, A2))
        # type-II rows saturated through A1 on their own columns
        A1 = [[Q(0)] * (2 * k) for _ in range(2 * k)]
        A1 += [[Q(1, 2) if j // 2 == i else Q(0) for j in range(2 * k)] for i in range(k)]
        cases.append((A1, A2))
    # full rows spread over all pairs
    A2 = [[Q(1, k)] * (2 * k) for _ in range(2 * k)] + [[Q(1, k)] * (2 * k) for _ in range(k)]
    cases.append((zero, A2))
    return cases


def random_k4_perturbation(k: int, rng: random.Random, max_den: int = 8) -> list[list[Fraction]]:
    A = []
    for r in range(7 * k):
        if _is_mincut_row(r):
            A.append([Q(0)] * (6 * k))
        else:
            budget = Q(rng.randint(0, max_den), max_den)
            if rng.random() < 0.3:
                budget = Q(1)
            A.append(_split(budget, 6 * k, rng, max_den))
    return A


def boundary_k4_perturbations(k: int) -> list[list[list[Fraction]]]:
    """Saturated rows: each weight-4 row spends its whole unit on one column, in turn."""
    cases = [[[Q(0)] * (6 * k) for _ in range(7 * k)]]
    for col in range(6 * k):
        A = []
        for r in range(7 * k):
            row = [Q(0)] * (6 * k)
            if not _is_mincut_row(r):
                row[(col + r) % (6 * k)] = Q(1)
            A.append(row)
        cases.append(A)
    # unit mass spread over the row's own block
    A = []
    for r in range(7 * k):
        row = [Q(0)] * (6 * k)
        if not _is_mincut_row(r):
            b = 6 * (r // 7)
            for j in range(6):
                row[b + j] = Q(1, 6)
        A.append(row)
    cases.append(A)
    return cases
