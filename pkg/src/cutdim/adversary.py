"""Linear-query adversary: the l1 distance LP and fooling graphs.

A query matrix ``A`` (rows are linear queries over all ``C(n, 2)`` slots)
cannot tell ``w`` from ``w - z`` when ``A z = 0``.  For a cut ``S`` the LP

    maximize <chi(S), z>  subject to  z <= w,  A z = 0

measures how far the weight of ``S`` can be pushed down unnoticed.  If it
exceeds ``w(S) - lambda`` the perturbed graph has a smaller minimum cut while
answering every query identically.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cuts import _check_cap, all_cut_weights, mincuts
from .errors import DimensionMismatchError, InvariantViolation, MalformedInputError
from .graph import Graph, Shore, format_rational, num_slots, parse_rational, slot_pairs
from .linalg import RationalMatrix, rank
from .lp import LinearProgram, LPStatus, lp_solve


def _chi(shore: Shore) -> list[int]:
    m = shore.mask
    return [(m >> i ^ m >> j) & 1 for i, j in slot_pairs(shore.n)]


@dataclass(frozen=True)
class AlphaCertificate:
    value: Fraction
    z: tuple[Fraction, ...]
    v: tuple[Fraction, ...]
    u: tuple[Fraction, ...]

    def to_json_obj(self) -> dict:
        fmt = lambda xs: [format_rational(x) for x in xs]
        return {"alpha": format_rational(self.value), "z": fmt(self.z), "v": fmt(self.v), "u": fmt(self.u)}


def alpha(w: Sequence, A, S) -> AlphaCertificate:
    """Exact optimum of the distance LP with a matching dual certificate.

    ``S`` is a :class:`Shore` or any nonnegative vector over the slots.  The
    certificate satisfies ``A z = 0``, ``z <= w``, ``u = S - A^T v >= 0`` and
    ``<S, z> = <u, w>``; each is rechecked before returning.
    """
    w = [Fraction(x) for x in (w.w if isinstance(w, Graph) else w)]
    A = RationalMatrix.of(A, len(w))
    s = [Fraction(x) for x in (_chi(S) if isinstance(S, Shore) else S)]
    if A.cols != len(w) or len(s) != len(w):
        raise DimensionMismatchError(f"query matrix has {A.cols} columns, weights have {len(w)} slots")
    res = lp_solve(LinearProgram.of(s, A.entries, [0] * A.rows, w))
    if res.status != LPStatus.OPTIMAL:
        raise InvariantViolation(f"distance LP reported {res.status.value}; it is always bounded and feasible")
    cert = AlphaCertificate(res.value, res.x, res.v, res.s)
    verify_alpha(w, A, s, cert)
    return cert


def verify_alpha(w, A: RationalMatrix, s, cert: AlphaCertificate) -> None:
    if any(x for x in A.matvec(cert.z)):
        raise InvariantViolation("A z != 0")
    if any(zi > wi for zi, wi in zip(cert.z, w)):
        raise InvariantViolation("z exceeds w")
    atv = A.rmatvec(cert.v)
    if [a - b for a, b in zip(s, atv)] != list(cert.u) or any(x < 0 for x in cert.u):
        raise InvariantViolation("dual slack is not S - A^T v >= 0")
    primal = sum((a * b for a, b in zip(s, cert.z)), Fraction(0))
    dual = sum((a * b for a, b in zip(cert.u, w)), Fraction(0))
    if primal != cert.value or dual != cert.value:
        raise InvariantViolation(f"strong duality fails: {primal} vs {dual}")


@dataclass(frozen=True)
class FoolingPair:
    cut: Shore
    z: tuple[Fraction, ...]
    g_prime: Graph
    margin: Fraction
    certificate: AlphaCertificate

    def to_json_obj(self) -> dict:
        return {
            "cut": list(self.cut.members),
            "margin": format_rational(self.margin),
            "z": [format_rational(x) for x in self.z],
            "g_prime": self.g_prime.to_json_obj(),
            "certificate": self.certificate.to_json_obj(),
        }


def find_fooling(G: Graph, A, cap: int | None = None) -> FoolingPair | None:
    """First cut, by increasing weight then shore, whose weight can be hidden below lambda."""
    _check_cap(G.n, cap)
    A = RationalMatrix.of(A, num_slots(G.n))
    if A.cols != num_slots(G.n):
        raise DimensionMismatchError(f"query matrix has {A.cols} columns, graph has {num_slots(G.n)} slots")
    weights = all_cut_weights(G, cap)
    lam = min(weights)
    order = sorted(range(len(weights)), key=lambda k: (weights[k], k))
    for k in order:
        slack = weights[k] - lam
        if slack >= weights[k]:
            # alpha <= w(S) always, so nothing to find here or later
            break
        S = Shore(2 * (k + 1), G.n)
        cert = alpha(G.w, A, S)
        if cert.value > slack:
            g_prime = Graph(G.n, tuple(a - b for a, b in zip(G.w, cert.z)))
            pair = FoolingPair(S, cert.z, g_prime, cert.value - slack, cert)
            verify_fooling(G, A, pair, cap)
            return pair
    return None


def verify_fooling(G: Graph, A, pair: FoolingPair, cap: int | None = None) -> None:
    """Independent recheck: same answers to every query, strictly smaller mincut."""
    A = RationalMatrix.of(A, num_slots(G.n))
    if A.matvec(list(G.w)) != A.matvec(list(pair.g_prime.w)):
        raise InvariantViolation("perturbed graph answers some query differently")
    if any(x < 0 for x in pair.g_prime.w):
        raise InvariantViolation("perturbed graph has a negative weight")
    if pair.margin <= 0:
        raise InvariantViolation("fooling margin is not positive")
    if not mincuts(pair.g_prime, cap).lam < mincuts(G, cap).lam:
        raise InvariantViolation("perturbed graph does not have a smaller minimum cut")


def cut_matrix(G: Graph, cap: int | None = None) -> RationalMatrix:
    """All cut vectors over every slot, one row per canonical shore."""
    _check_cap(G.n, cap)
    n = G.n
    rows = [_chi(Shore(m, n)) for m in range(2, 1 << n, 2)]
    return RationalMatrix.of(rows, num_slots(n))


def random_rational(rng: random.Random, max_den: int = 8, span: int = 4) -> Fraction:
    return Fraction(rng.randint(-span * max_den, span * max_den), rng.randint(1, max_den))


def random_query_matrix(
    pool: Sequence[Sequence], target_rank: int, rng: random.Random, max_den: int = 8, max_tries: int = 1000
) -> RationalMatrix:
    """``target_rank`` random rational combinations of ``pool`` rows with exactly that rank."""
    pool = [list(map(Fraction, r)) for r in pool]
    cols = len(pool[0])
    for _ in range(max_tries):
        rows = []
        for _ in range(target_rank):
            row = [Fraction(0)] * cols
            for r in pool:
                c = random_rational(rng, max_den)
                if c:
                    row = [a + c * b for a, b in zip(row, r)]
            rows.append(row)
        M = RationalMatrix.of(rows, cols)
        if rank(M) == target_rank:
            return M
    raise InvariantViolation(f"could not sample a rank-{target_rank} query matrix from the pool")


def query_matrix_to_json(A: RationalMatrix) -> str:
    return json.dumps({"rows": [[format_rational(x) for x in row] for row in A.entries]})


def query_matrix_from_json_obj(obj) -> RationalMatrix:
    if not isinstance(obj, dict) or not isinstance(obj.get("rows"), list):
        raise MalformedInputError('query matrix JSON needs a "rows" list')
    rows = obj["rows"]
    if any(not isinstance(r, list) for r in rows):
        raise MalformedInputError("each query row must be a list")
    if rows and len({len(r) for r in rows}) != 1:
        raise MalformedInputError("query rows have different lengths")
    return RationalMatrix.of([[parse_rational(x) for x in r] for r in rows], len(rows[0]) if rows else 0)
