"""Graph families with known cut dimension, each verified by enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .cuts import mincuts, span_dimension
from .errors import InvalidParameterError, InvariantViolation, PreconditionError
from .graph import Graph, Shore, format_rational, num_slots, slot_pairs
from .graphops import merge
from .laminar import is_maximal_cross_free


@dataclass(frozen=True)
class ConstructionReport:
    graph: Graph
    expected_lambda: Fraction
    expected_cdim: int
    provenance: str
    family: tuple[Shore, ...] | None = None

    def to_json_obj(self) -> dict:
        out = {
            "graph": self.graph.to_json_obj(),
            "expected_lambda": format_rational(self.expected_lambda),
            "expected_cdim": self.expected_cdim,
            "provenance": self.provenance,
        }
        if self.family is not None:
            out["family"] = [list(s.members) for s in self.family]
        return out


def _verified(report: ConstructionReport, cap: int | None = None) -> ConstructionReport:
    got = mincuts(report.graph, cap)
    cdim = span_dimension(report.graph, got.mincuts)
    if got.lam != report.expected_lambda or cdim != report.expected_cdim:
        raise InvariantViolation(
            f"{report.provenance}: expected lambda={report.expected_lambda}, cdim={report.expected_cdim}; "
            f"got lambda={got.lam}, cdim={cdim}"
        )
    if report.family is not None and set(got.mincuts) != set(report.family):
        raise InvariantViolation(f"{report.provenance}: minimum cuts differ from the input family")
    return report


def cycle(n: int) -> Graph:
    """Unit cycle ``0-1-...-(n-1)-0``; for ``n = 2`` a single edge of weight 2."""
    if n < 2:
        raise InvalidParameterError("cycle needs n >= 2")
    return Graph.from_edges(n, [(i, (i + 1) % n, 1) for i in range(n)])


def complete(n: int, weight=1) -> Graph:
    weight = Fraction(weight)
    if weight <= 0:
        raise InvalidParameterError("weight must be positive")
    if n < 2:
        raise InvalidParameterError("complete graph needs n >= 2")
    return Graph(n, (weight,) * num_slots(n))


def explicit_from_family(family: Sequence[Shore], n: int | None = None, cap: int | None = None) -> ConstructionReport:
    """Complete graph whose minimum cuts are exactly a maximal cross-free family.

    Edge ``e`` gets weight ``2 ** (1 - z(e))`` where ``z(e)`` counts the family
    cuts containing ``e``.
    """
    family = [s.canonical() for s in family]
    if n is None:
        if not family:
            raise PreconditionError("n is required for an empty family")
        n = family[0].n
    if len(set(family)) != len(family) or len(family) != 2 * n - 3:
        raise PreconditionError(f"need {2 * n - 3} distinct cuts, got {len(family)}")
    if not is_maximal_cross_free(family, n):
        raise PreconditionError("family is not a maximal cross-free family")
    w = []
    for i, j in slot_pairs(n):
        z = sum(1 for s in family if (s.mask >> i ^ s.mask >> j) & 1)
        w.append(Fraction(2) ** (1 - z))
    G = Graph(n, tuple(w))
    return _verified(
        ConstructionReport(G, Fraction(1), 2 * n - 3, "explicit-from-family", tuple(sorted(family))), cap
    )


def _merge_graph(n: int) -> Graph:
    if n == 2:
        return Graph(2, (Fraction(1),))
    base = complete(3, Fraction(1, 2))
    G = base
    for _ in range(4, n + 1):
        G = merge(G, 0, base, 0)
    return G


def merge_construction(n: int, cap: int | None = None) -> ConstructionReport:
    """Complete graph with ``cdim = 2n - 3``, grown by merging triangles.

    ``G(n)`` merges ``G(n-1)`` (unfolded at its vertex 0) with the triangle of
    weight-1/2 edges (unfolded at its vertex 0).  The new cut is the shore
    ``{n-2, n-1}``.
    """
    if n < 2:
        raise InvalidParameterError("merge construction needs n >= 2")
    G = _merge_graph(n)
    rep = _verified(ConstructionReport(G, Fraction(1), 2 * n - 3, "merge-construction"), cap)
    return rep


# K4 on (v, a, b, c) = (0, 1, 2, 3).  Edges in the order ab, ac, va, bc, vb, vc
# map to these library slots.
K4_EDGE_SLOTS = (3, 4, 0, 5, 1, 2)
# Shores {a}, {b}, {c}, {a,b,c}, {a,b}, {a,c}, {b,c}.
K4_CUT_MASKS = (0b0010, 0b0100, 0b1000, 0b1110, 0b0110, 0b1010, 0b1100)
K4_MINCUT_ROWS = 4


def k4_union(k: int) -> Graph:
    """``k`` unit K4 blocks sharing the hub vertex 0; block ``i`` uses ``3i+1..3i+3``."""
    if k < 1:
        raise InvalidParameterError("k4_union needs k >= 1")
    edges = []
    for i in range(k):
        a, b, c = 3 * i + 1, 3 * i + 2, 3 * i + 3
        edges += [(0, a, 1), (0, b, 1), (0, c, 1), (a, b, 1), (a, c, 1), (b, c, 1)]
    return Graph.from_edges(3 * k + 1, edges)


def k4_union_edge_order(k: int) -> list[int]:
    """Library slot of the ``6i + j``-th edge in block-major K4 order."""
    from .graph import edge_index

    n = 3 * k + 1
    local = [(1, 2), (1, 3), (0, 1), (2, 3), (0, 2), (0, 3)]
    out = []
    for i in range(k):
        name = lambda v: 0 if v == 0 else 3 * i + v
        for p, q in local:
            out.append(edge_index(name(p), name(q), n))
    return out


def k4_union_cut_shores(k: int) -> list[Shore]:
    """The ``7k`` distinguished cuts, block by block in the fixed K4 order."""
    n = 3 * k + 1
    out = []
    for i in range(k):
        for m in K4_CUT_MASKS:
            out.append(Shore(m << (3 * i), n))
    return out


def cycle_plus_eps(n: int, alpha) -> Graph:
    """Unit cycle with every chord at ``eps = 2(alpha - 1) / C(n, 2)``."""
    alpha = Fraction(alpha)
    if alpha <= 1:
        raise InvalidParameterError("alpha must exceed 1")
    if n < 3:
        raise InvalidParameterError("cycle_plus_eps needs n >= 3")
    eps = 2 * (alpha - 1) / comb(n, 2)
    cyc = {(min(i, (i + 1) % n), max(i, (i + 1) % n)) for i in range(n)}
    return Graph(n, tuple(Fraction(1) if p in cyc else eps for p in slot_pairs(n)))


def _from_labels(n: int, heavy, light) -> Graph:
    edges = [(p - 1, q - 1, 2) for p, q in heavy] + [(p - 1, q - 1, 1) for p, q in light]
    return Graph.from_edges(n, edges)


def fixture_fig8() -> Graph:
    """Eight vertices, four weight-2 pairs joined by unit edges; cdim 11."""
    return _from_labels(
        8,
        [(1, 2), (3, 4), (5, 6), (7, 8)],
        [(1, 3), (1, 7), (2, 4), (2, 6), (3, 5), (4, 8), (5, 7), (6, 8)],
    )


def fixture_fig2() -> Graph:
    """Five vertices, two weight-2 pairs plus a hub; cdim 7."""
    return _from_labels(5, [(1, 2), (3, 4)], [(1, 3), (1, 5), (2, 4), (2, 5), (3, 5), (4, 5)])


CONSTRUCTORS = ("cycle", "complete", "explicit", "merge", "k4-union", "cycle-eps", "fig8", "fig2")
