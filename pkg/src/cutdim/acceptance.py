"""The eleven end-to-end acceptance checks.

Each check returns a :class:`CriterionResult`; nothing here raises on a
failed expectation, so one broken criterion does not hide the others.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable

from . import adversary, approx, constructors as C, graphops, laminar
from .cuts import cdim_alpha, cut_dimension, cut_rows, mincuts, span_dimension
from .errors import CutDimError
from .graph import Graph, Shore, slot_pairs

SEED = 20240611


@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number:2d}. {self.title}: {self.detail}"


# --- shared random sweep ----------------------------------------------------


def random_connected_graph(n: int, rng: random.Random) -> Graph:
    """Random spanning tree plus random extra edges, small rational weights.

    Weights come from a coarse grid so ties (and hence many mincuts) are
    common.  About one graph in six is complete.
    """
    order = list(range(n))
    rng.shuffle(order)
    present = set()
    for k in range(1, n):
        a, b = order[k], order[rng.randrange(k)]
        present.add((min(a, b), max(a, b)))
    density = 1.0 if rng.random() < 1 / 6 else rng.random()
    for p in slot_pairs(n):
        if rng.random() < density:
            present.add(p)
    grid = [Fraction(1), Fraction(1), Fraction(2), Fraction(1, 2), Fraction(3, 2), Fraction(3)]
    w = tuple(rng.choice(grid) if p in present else Fraction(0) for p in slot_pairs(n))
    return Graph(n, w)


def random_cluster_cycle(n: int, rng: random.Random) -> Graph:
    """Clusters on a ring, joined by total weight 1 between neighbours.

    Inside a cluster every vertex is tied in with weight at least 3, so the
    minimum cuts are the arcs of consecutive clusters and they cross
    one another whenever there are at least four clusters.
    """
    order = list(range(n))
    rng.shuffle(order)
    m = rng.randint(min(4, n), n)
    cuts = sorted(rng.sample(range(1, n), m - 1))
    groups = [order[a:b] for a, b in zip([0] + cuts, cuts + [n])]
    edges = []
    for g in groups:
        for k in range(1, len(g)):
            edges.append((g[k], g[rng.randrange(k)], 3))
            if rng.random() < 0.5:
                edges.append((g[k], g[rng.randrange(k)], Fraction(1, 2)))
    for a, b in zip(groups, groups[1:] + groups[:1]):
        if rng.random() < 0.5:
            edges.append((rng.choice(a), rng.choice(b), 1))
        else:
            edges.append((rng.choice(a), rng.choice(b), Fraction(1, 2)))
            edges.append((rng.choice(a), rng.choice(b), Fraction(1, 2)))
    return Graph.from_edges(n, edges)


@lru_cache(maxsize=None)
def sweep(per_n: int = 200, seed: int = SEED) -> tuple[Graph, ...]:
    """Seeded connected graphs for n = 3..9; one in four is a cluster ring."""
    rng = random.Random(seed)
    out = []
    for n in range(3, 10):
        for t in range(per_n):
            out.append(random_cluster_cycle(n, rng) if t % 4 == 3 else random_connected_graph(n, rng))
    return tuple(out)


def _timed(number: int, title: str, body: Callable[[], tuple[bool, str]]) -> CriterionResult:
    t0 = time.perf_counter()
    try:
        ok, detail = body()
    except CutDimError as exc:  # includes InvariantViolation
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return CriterionResult(number, title, ok, detail, time.perf_counter() - t0)


# --- criteria -------------------------------------------------------------


def criterion_1() -> tuple[bool, str]:
    g8, g2 = C.fixture_fig8(), C.fixture_fig2()
    r8, r2 = mincuts(g8), mincuts(g2)
    expected = {Shore.of([v], 8) for v in range(8)} | {
        Shore.of(s, 8) for s in ([0, 1], [2, 3], [4, 5], [6, 7], [0, 1, 2, 3])
    }
    d8, d2 = cut_dimension(g8), cut_dimension(g2)
    ok = d8 == 11 and r8.lam == 4 and set(r8.mincuts) == expected and d2 == 7 and r2.lam == 4
    return ok, f"fig8 cdim={d8} lambda={r8.lam} mincuts={len(r8.mincuts)}; fig2 cdim={d2} lambda={r2.lam}"


def criterion_2() -> tuple[bool, str]:
    got = {n: cut_dimension(C.cycle(n)) for n in range(2, 13)}
    ok = got[2] == 1 and all(got[n] == n for n in range(3, 13))
    return ok, "cdim(C_n) for n=2..12: " + ",".join(str(got[n]) for n in range(2, 13))


def criterion_3() -> tuple[bool, str]:
    bad = 0
    graphs = sweep()
    for G in graphs:
        rep = mincuts(G)
        if span_dimension(G, rep.mincuts) > 2 * G.n - 3 or len(rep.mincuts) > comb(G.n, 2):
            bad += 1
    return bad == 0, f"{len(graphs)} graphs, {bad} violations"


def criterion_4() -> tuple[bool, str]:
    bad, total = 0, 0
    for n in range(3, 10):
        for s in range(50):
            fam = laminar.random_maximal_cross_free(n, SEED + 1000 * n + s)
            rep = C.explicit_from_family(fam, n)  # self-checks lambda, M(G) = L, cdim
            rows = cut_rows(rep.graph, fam, full=True)
            aw = [sum((r * x for r, x in zip(row, rep.graph.w)), Fraction(0)) for row in rows]
            total += 1
            if any(x != 1 for x in aw) or rep.expected_cdim != 2 * n - 3:
                bad += 1
    return bad == 0, f"{total} families, {bad} failures"


def criterion_5() -> tuple[bool, str]:
    bad = []
    for n in range(2, 11):
        rep = C.merge_construction(n)
        G = rep.graph
        mc = set(mincuts(G).mincuts)
        stars = {Shore.of([v], n) for v in range(n)}
        if cut_dimension(G) != 2 * n - 3 or mincuts(G).lam != 1 or not stars <= mc:
            bad.append(n)
    return not bad, "n=2..10 ok" if not bad else f"failed for n={bad}"


def criterion_6() -> tuple[bool, str]:
    notes = []
    ok = True
    for n in range(4, 10):
        G = C.merge_construction(n).graph
        rep = graphops.verify_crossless_decomposition(G, Shore.of([n - 2, n - 1], n))
        if not (rep.equality and rep.cdim == 2 * n - 3):
            ok = False
            notes.append(f"n={n} {rep.to_json_obj()}")
    g8 = C.fixture_fig8()
    Z = Shore.of([0, 1, 2, 3], 8)
    rep = graphops.verify_crossless_decomposition(g8, Z)
    strict = rep.cdim == 11 and rep.bound == 13
    sides = (cut_dimension(rep.separation.g0), cut_dimension(rep.separation.g1))
    ok = ok and strict and sides == (7, 7) and not rep.connected
    notes.append(f"fig8: {rep.cdim} < {rep.bound}, sides cdim {sides}")
    return ok, "; ".join(notes)


def criterion_7() -> tuple[bool, str]:
    quad_pairs = quad_bad = span_bad = lam_bad = complete = 0
    for G in sweep():
        rep = mincuts(G)
        ms = rep.mincuts
        for a in range(len(ms)):
            for b in range(a + 1, len(ms)):
                if laminar.cross(ms[a].mask, ms[b].mask, G.n):
                    quad_pairs += 1
                    if not graphops.quadrangle_holds(G, ms[a], ms[b]):
                        quad_bad += 1
        sub = laminar.maximal_cross_free_subset(list(ms), "mincuts-only", G.n)
        if span_dimension(G, sub) != span_dimension(G, ms):
            span_bad += 1
        if G.is_complete():
            complete += 1
            if not laminar.is_laminar(laminar.beach(ms, G.n)):
                lam_bad += 1
    ok = quad_bad == 0 and span_bad == 0 and lam_bad == 0 and complete > 0
    return ok, (
        f"{quad_pairs} crossing pairs ({quad_bad} bad), spanning-rank failures {span_bad}, "
        f"{complete} complete graphs ({lam_bad} non-laminar beaches)"
    )


def criterion_8(trials: int = 100) -> tuple[bool, str]:
    notes = []
    ok = True
    for k in (1, 2):
        G = C.k4_union(k)
        n = G.n
        rng = random.Random(SEED + k)
        distinguished = cut_rows(G, C.k4_union_cut_shores(k), full=True)
        all_rows = cut_rows(G, [Shore(m, n) for m in range(2, 1 << n, 2)], full=True)
        found = 0
        for t in range(trials):
            if t % 2 == 0:
                pool = distinguished
            else:
                pool = rng.sample(all_rows, min(len(all_rows), 6 * k + 2))
            A = adversary.random_query_matrix(pool, 6 * k - 1, rng)
            pair = adversary.find_fooling(G, A)
            if pair is None:
                continue
            # independent recheck of indistinguishability and the smaller mincut
            same = A.matvec(list(G.w)) == A.matvec(list(pair.g_prime.w))
            if same and mincuts(pair.g_prime).lam < 3 and all(x >= 0 for x in pair.g_prime.w):
                found += 1
        ok = ok and found == trials
        notes.append(f"k={k}: {found}/{trials} fooled")
    return ok, "; ".join(notes)


def criterion_9(random_lem: int = 500, random_k4: int = 200) -> tuple[bool, str]:
    lem_total = lem_bad = 0
    for k in range(1, 5):
        rng = random.Random(SEED + 10 * k)
        cases = approx.boundary_lem2k(k) + [approx.random_lem2k(k, rng) for _ in range(random_lem)]
        for A1, A2 in cases:
            lem_total += 1
            if not approx.check_lem2k(k, A1, A2):
                lem_bad += 1
    k4_total = k4_bad = 0
    for k in (1, 2):
        rng = random.Random(SEED + 100 * k)
        cases = approx.boundary_k4_perturbations(k) + [
            approx.random_k4_perturbation(k, rng) for _ in range(random_k4)
        ]
        for A in cases:
            k4_total += 1
            rep = approx.k4_union_reduction(k, A)
            if not (rep.ok and approx.perturbation_valid(approx.k4_instance(k, A)).valid):
                k4_bad += 1
    ok = lem_bad == 0 and k4_bad == 0
    return ok, f"block rank {lem_total - lem_bad}/{lem_total}; K4-union rank {k4_total - k4_bad}/{k4_total}"


def criterion_10() -> tuple[bool, str]:
    kn = {n: cdim_alpha(C.complete(n), 2) for n in range(4, 8)}
    ce = {n: cdim_alpha(C.cycle_plus_eps(n, Fraction(3, 2)), Fraction(3, 2)) for n in range(4, 9)}
    same = sum(1 for G in sweep() if cdim_alpha(G, 1) != cut_dimension(G))
    ok = all(v == comb(n, 2) for n, v in kn.items()) and all(v == comb(n, 2) for n, v in ce.items()) and same == 0
    return ok, f"K_n: {kn}; cycle+eps: {ce}; alpha=1 mismatches: {same}"


def criterion_11(per_n: int = 100) -> tuple[bool, str]:
    over = maxbad = fams = 0
    for n in range(2, 13):
        rng = random.Random(SEED + n)
        for _ in range(per_n):
            F = laminar.random_arborescence_family(n, rng, complement_free=True)
            fams += 1
            if not (F.is_proper and F.is_complement_free and laminar.is_laminar(F)) or len(F) > max(2 * n - 3, 0):
                over += 1
            G = laminar.random_arborescence_family(n, rng, complement_free=False)
            if not (G.is_proper and laminar.is_laminar(G)) or len(G) > 2 * n - 2:
                over += 1
        for s in range(10):
            fam = laminar.random_maximal_cross_free(n, SEED + 7 * n + s)
            cuts = [Shore(m, n) for m in range(2, 1 << n, 2)]
            random.Random(s).shuffle(cuts)
            greedy = laminar.maximal_cross_free_subset(cuts, "mincuts-only", n)
            for family in (fam, greedy):
                if len(family) != 2 * n - 3 or not laminar.is_maximal_cross_free(family, n):
                    maxbad += 1
    ok = over == 0 and maxbad == 0
    return ok, f"{fams} complement-free families, {over} size violations, {maxbad} bad maximal families"


CRITERIA: list[tuple[int, str, Callable[[], tuple[bool, str]]]] = [
    (1, "figure fixtures", criterion_1),
    (2, "cycle law", criterion_2),
    (3, "upper-bound sweep", criterion_3),
    (4, "explicit construction", criterion_4),
    (5, "merge construction", criterion_5),
    (6, "decomposition laws", criterion_6),
    (7, "structural checks", criterion_7),
    (8, "adversary soundness", criterion_8),
    (9, "l1 certificates", criterion_9),
    (10, "alpha-near dimension", criterion_10),
    (11, "laminar bounds", criterion_11),
]


def run_criterion(number: int) -> CriterionResult:
    for num, title, body in CRITERIA:
        if num == number:
            return _timed(num, title, body)
    raise KeyError(number)


def run_all(echo: Callable[[str], None] | None = None) -> list[CriterionResult]:
    out = []
    for num, title, body in CRITERIA:
        res = _timed(num, title, body)
        if echo:
            echo(res.line())
        out.append(res)
    return out
