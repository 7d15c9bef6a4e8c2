"""Direct union, separation and merge, plus the decomposition laws as checks."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .cuts import cut_dimension, mincuts, span_dimension
from .errors import InvalidEdgeError, InvariantViolation, PreconditionError
from .graph import Graph, Shore, char_vector, slot_pairs
from .laminar import cross


def _check_vertex(G: Graph, v: int, what: str) -> None:
    if not isinstance(v, int) or not 0 <= v < G.n:
        raise InvalidEdgeError(f"{what}={v!r} is not a vertex of a graph on {G.n} vertices")


def direct_union(G0: Graph, v0: int, G1: Graph, v1: int) -> Graph:
    """Fuse ``v0`` of ``G0`` with ``v1`` of ``G1``.

    The fused vertex becomes 0, followed by the other vertices of ``G0`` and
    then those of ``G1``, each in their original order.
    """
    _check_vertex(G0, v0, "v0")
    _check_vertex(G1, v1, "v1")
    n = G0.n + G1.n - 1
    map0 = {v0: 0}
    for v in range(G0.n):
        if v != v0:
            map0[v] = len(map0)
    map1 = {v1: 0}
    nxt = G0.n
    for v in range(G1.n):
        if v != v1:
            map1[v] = nxt
            nxt += 1
    edges = [(map0[i], map0[j], x) for i, j, x in G0.edges()]
    edges += [(map1[i], map1[j], x) for i, j, x in G1.edges()]
    return Graph.from_edges(n, edges)


@dataclass(frozen=True)
class SeparationPair:
    """Both contracted graphs of a separation.

    ``mapping[u] = (side, local_index)`` for every original vertex.  The
    contracted copy of side 1 sits in ``g0`` at index ``v1`` and vice versa.
    """

    g0: Graph
    g1: Graph
    mapping: tuple[tuple[int, int], ...]
    v0: int
    v1: int

    def to_json_obj(self) -> dict:
        return {
            "g0": self.g0.to_json_obj(),
            "g1": self.g1.to_json_obj(),
            "mapping": [list(p) for p in self.mapping],
            "v0": self.v0,
            "v1": self.v1,
        }


def separation(G: Graph, X0: Shore) -> SeparationPair:
    """Contract each shore of ``X0`` into a single vertex on the other side."""
    if X0.n != G.n:
        raise PreconditionError(f"shore is over {X0.n} vertices, graph has {G.n}")
    sides = ([v for v in range(G.n) if X0.mask >> v & 1], [v for v in range(G.n) if not X0.mask >> v & 1])
    if len(sides[0]) < 1 or len(sides[1]) < 1:
        raise PreconditionError("cannot separate along a trivial shore")
    mapping = [None] * G.n
    for b in (0, 1):
        for k, v in enumerate(sides[b]):
            mapping[v] = (b, k)
    graphs = []
    for b in (0, 1):
        own, other = sides[b], sides[1 - b]
        hub = len(own)
        edges = []
        for a in range(len(own)):
            for c in range(a + 1, len(own)):
                edges.append((a, c, G.weight(own[a], own[c])))
            edges.append((a, hub, sum((G.weight(own[a], y) for y in other), Fraction(0))))
        graphs.append(Graph.from_edges(hub + 1, edges))
    return SeparationPair(graphs[0], graphs[1], tuple(mapping), v0=len(sides[1]), v1=len(sides[0]))


def merge(G0: Graph, v1: int, G1: Graph, v0: int) -> Graph:
    """Inverse of separation: unfold the star at ``v1`` in ``G0`` and at ``v0`` in ``G1``.

    Vertices are laid out as ``G0`` minus ``v1`` then ``G1`` minus ``v0``;
    cross weights are products of the two star weights.
    """
    _check_vertex(G0, v1, "v1")
    _check_vertex(G1, v0, "v0")
    left = [v for v in range(G0.n) if v != v1]
    right = [v for v in range(G1.n) if v != v0]
    n = len(left) + len(right)
    if n < 2:
        raise PreconditionError("merge would produce fewer than 2 vertices")
    off = len(left)
    edges = []
    for a in range(len(left)):
        for c in range(a + 1, len(left)):
            edges.append((a, c, G0.weight(left[a], left[c])))
    for a in range(len(right)):
        for c in range(a + 1, len(right)):
            edges.append((off + a, off + c, G1.weight(right[a], right[c])))
    for a, x in enumerate(left):
        wx = G0.weight(x, v1)
        if wx:
            for c, y in enumerate(right):
                edges.append((a, off + c, wx * G1.weight(v0, y)))
    return Graph.from_edges(n, edges)


def merge_cut(G0: Graph, G1: Graph) -> Shore:
    """The cut of ``merge(G0, ., G1, .)`` separating the two inputs."""
    n = G0.n + G1.n - 2
    return Shore.of(range(G0.n - 1, n), n)


# --- predicates ----------------------------------------------------------


def is_crossless(G: Graph, S: Shore, cap: int | None = None) -> bool:
    """No other minimum cut crosses ``S``."""
    report = mincuts(G, cap)
    return not any(cross(S.mask, T.mask, G.n) for T in report.mincuts)


def cut_graph_connected(G: Graph, S: Shore) -> bool:
    """Whether the positive-weight edges of the cut form a connected graph.

    The vertex set is the set of endpoints of cut edges; an empty cut counts
    as disconnected.
    """
    m = S.mask
    cut_edges = [(i, j) for i, j, _ in G.edges() if (m >> i ^ m >> j) & 1]
    if not cut_edges:
        return False
    parent = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in cut_edges:
        parent[find(i)] = find(j)
    return len({find(v) for v in parent}) == 1


def quadrangle_holds(G: Graph, X: Shore, Y: Shore) -> bool:
    """Both uncrossing identities for a crossing pair, over the edges of ``G``.

    ``chi(X) + chi(Y) = chi(X & Y) + chi(X | Y) = chi(X - Y) + chi(Y - X)``
    and no positive edge runs between ``X - Y`` and ``Y - X``.
    """
    x, y = X.mask, Y.mask
    if not cross(x, y, G.n):
        raise PreconditionError("quadrangle check needs crossing shores")
    vec = lambda m: char_vector(G, Shore(m, G.n)).restricted
    lhs = [a + b for a, b in zip(vec(x), vec(y))]
    meet_join = [a + b for a, b in zip(vec(x & y), vec(x | y))]
    diffs = [a + b for a, b in zip(vec(x & ~y), vec(y & ~x))]
    a_side, b_side = x & ~y, y & ~x
    between = any(
        ((a_side >> i & 1) and (b_side >> j & 1)) or ((a_side >> j & 1) and (b_side >> i & 1))
        for i, j, _ in G.edges()
    )
    return lhs == meet_join == diffs and not between


# --- decomposition laws ----------------------------------------------------


@dataclass(frozen=True)
class DecompositionReport:
    cdim: int
    cdim_g0: int
    cdim_g1: int
    span_m0: int
    span_m1: int
    connected: bool
    separation: SeparationPair

    @property
    def bound(self) -> int:
        return self.cdim_g0 + self.cdim_g1 - 1

    @property
    def equality(self) -> bool:
        return self.cdim == self.bound

    def to_json_obj(self) -> dict:
        return {
            "cdim": self.cdim,
            "cdim_g0": self.cdim_g0,
            "cdim_g1": self.cdim_g1,
            "span_m0": self.span_m0,
            "span_m1": self.span_m1,
            "connected": self.connected,
            "bound": self.bound,
            "equality": self.equality,
        }


def _inside_slots(n: int, mask: int) -> set[int]:
    return {k for k, (i, j) in enumerate(slot_pairs(n)) if mask >> i & 1 and mask >> j & 1}


def verify_crossless_decomposition(G: Graph, Z: Shore, cap: int | None = None) -> DecompositionReport:
    """Separate along a crossless non-star mincut and check the dimension laws.

    Raises :class:`PreconditionError` if ``Z`` is not such a cut and
    :class:`InvariantViolation` if a law fails.
    """
    report = mincuts(G, cap)
    Z = Z.canonical()
    if Z not in report.mincuts:
        raise PreconditionError("Z is not a minimum cut")
    if Z.is_star():
        raise PreconditionError("Z is a star cut")
    if any(cross(Z.mask, T.mask, G.n) for T in report.mincuts):
        raise PreconditionError("Z is crossed by another minimum cut")
    sep = separation(G, Z)
    full = (1 << G.n) - 1
    support = set(G.support)
    spans = []
    for b, side in ((0, Z.mask), (1, full ^ Z.mask)):
        other_inside = _inside_slots(G.n, full ^ side) & support
        members = [
            S
            for S in report.mincuts
            if not any((S.mask >> i ^ S.mask >> j) & 1 for k, (i, j) in enumerate(slot_pairs(G.n)) if k in other_inside)
        ]
        spans.append(span_dimension(G, members))
    rep = DecompositionReport(
        cdim=span_dimension(G, report.mincuts),
        cdim_g0=cut_dimension(sep.g0, cap),
        cdim_g1=cut_dimension(sep.g1, cap),
        span_m0=spans[0],
        span_m1=spans[1],
        connected=cut_graph_connected(G, Z),
        separation=sep,
    )
    if rep.span_m0 != rep.cdim_g0 or rep.span_m1 != rep.cdim_g1:
        raise InvariantViolation(f"side span differs from side cut dimension: {rep.to_json_obj()}")
    if rep.cdim > rep.bound:
        raise InvariantViolation(f"cdim exceeds cdim(G0)+cdim(G1)-1: {rep.to_json_obj()}")
    if rep.connected and not rep.equality:
        raise InvariantViolation(f"connected cut without equality: {rep.to_json_obj()}")
    return rep


class MincutStructure(str, Enum):
    ALL_STAR = "all-star"
    CYCLE_CASE = "cycle-case"
    HAS_CROSSLESS_NONSTAR = "has-crossless-nonstar"


def is_uniform_cycle(G: Graph) -> bool:
    """Support is one Hamiltonian cycle with a single common weight."""
    edges = G.edges()
    if len({x for _, _, x in edges}) != 1:
        return False
    if G.n == 2:
        return len(edges) == 1
    if len(edges) != G.n:
        return False
    adj = {v: [] for v in range(G.n)}
    for i, j, _ in edges:
        adj[i].append(j)
        adj[j].append(i)
    if any(len(a) != 2 for a in adj.values()):
        return False
    prev, cur, steps = None, 0, 0
    while True:
        nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
        prev, cur = cur, nxt
        steps += 1
        if cur == 0:
            return steps == G.n


def classify_mincut_structure(G: Graph, cap: int | None = None) -> MincutStructure:
    report = mincuts(G, cap)
    nonstar = [S for S in report.mincuts if not S.is_star()]
    if not nonstar:
        return MincutStructure.ALL_STAR
    for S in nonstar:
        if not any(cross(S.mask, T.mask, G.n) for T in nonstar):
            return MincutStructure.HAS_CROSSLESS_NONSTAR
    if report.lam == 0:
        raise PreconditionError("structure classification needs a connected graph")
    if not is_uniform_cycle(G):
        raise InvariantViolation("every non-star mincut is crossed, yet the graph is not a uniform cycle")
    return MincutStructure.CYCLE_CASE
