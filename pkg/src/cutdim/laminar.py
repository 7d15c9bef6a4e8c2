"""Crossing and overlap predicates, laminar families and their arborescences.

Sets over the universe ``{0..n-1}`` are handled as int bitmasks internally;
public functions also accept :class:`Shore` objects or iterables of vertices.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InvariantViolation, NotLaminarError, PreconditionError
from .graph import Shore


def to_mask(x) -> int:
    if isinstance(x, Shore):
        return x.mask
    if isinstance(x, int):
        return x
    m = 0
    for v in x:
        m |= 1 << v
    return m


def mask_members(m: int) -> tuple[int, ...]:
    out = []
    v = 0
    while m:
        if m & 1:
            out.append(v)
        m >>= 1
        v += 1
    return tuple(out)


def _low(m: int) -> int:
    return (m & -m).bit_length() - 1


def overlap(X, Y, n: int | None = None) -> bool:
    """``X & Y``, ``Y - X`` and ``X - Y`` all nonempty."""
    x, y = to_mask(X), to_mask(Y)
    return bool(x & y) and bool(y & ~x) and bool(x & ~y)


def cross(X, Y, n: int) -> bool:
    """Overlap plus a nonempty common complement."""
    x, y = to_mask(X), to_mask(Y)
    full = (1 << n) - 1
    return overlap(x, y) and bool(full & ~x & ~y)


@dataclass(frozen=True)
class SetFamily:
    n: int
    members: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.members)) != len(self.members):
            raise PreconditionError("set family contains duplicates")

    @classmethod
    def of(cls, sets: Iterable, n: int) -> "SetFamily":
        return cls(n, tuple(to_mask(s) for s in sets))

    def sets(self) -> list[frozenset[int]]:
        return [frozenset(mask_members(m)) for m in self.members]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    @property
    def is_proper(self) -> bool:
        full = (1 << self.n) - 1
        return all(m != 0 and m != full for m in self.members)

    @property
    def is_complement_free(self) -> bool:
        full = (1 << self.n) - 1
        ms = set(self.members)
        return not any((full ^ m) in ms for m in ms)

    def to_json_obj(self) -> dict:
        return {"n": self.n, "sets": [list(mask_members(m)) for m in self.members]}


def beach(cuts: Sequence, n: int | None = None) -> SetFamily:
    """Replace each cut by its shore avoiding vertex 0."""
    cuts = list(cuts)
    if n is None:
        n = cuts[0].n if cuts else 0
    full = (1 << n) - 1
    out = []
    for c in cuts:
        m = to_mask(c)
        out.append(m ^ full if m & 1 else m)
    return SetFamily(n, tuple(out))


def is_laminar(F) -> bool:
    ms = list(F.members if isinstance(F, SetFamily) else (to_mask(x) for x in F))
    return not any(overlap(ms[i], ms[j]) for i in range(len(ms)) for j in range(i + 1, len(ms)))


def is_cross_free(cuts: Sequence, n: int) -> bool:
    ms = [to_mask(c) for c in cuts]
    return not any(cross(ms[i], ms[j], n) for i in range(len(ms)) for j in range(i + 1, len(ms)))


def _all_canonical(n: int) -> list[Shore]:
    return [Shore(m, n) for m in range(2, 1 << n, 2)]


def maximal_cross_free_subset(cuts: Sequence[Shore], within: str = "mincuts-only", n: int | None = None) -> list[Shore]:
    """Greedy maximal cross-free subset.

    ``within="mincuts-only"`` extends only with the given cuts, so the result
    is maximal inside that list.  ``within="all-cuts"`` then keeps extending
    with every cut of the complete graph on ``n`` vertices, giving a family
    that is maximal among all cuts.
    """
    cuts = list(cuts)
    if n is None:
        if not cuts:
            raise PreconditionError("n is required when no cuts are given")
        n = cuts[0].n
    if within not in ("mincuts-only", "all-cuts"):
        raise PreconditionError(f"unknown mode {within!r}")
    if len({c.canonical() for c in cuts}) != len(cuts):
        raise PreconditionError("input cuts must be distinct")
    pool = [c.canonical() for c in cuts]
    if within == "all-cuts":
        seen = set(pool)
        pool += [s for s in _all_canonical(n) if s not in seen]
    chosen: list[Shore] = []
    masks: list[int] = []
    changed = True
    while changed:
        changed = False
        for s in pool:
            if s in chosen:
                continue
            if not any(cross(s.mask, m, n) for m in masks):
                chosen.append(s)
                masks.append(s.mask)
                changed = True
    return chosen


def is_maximal_cross_free(cuts: Sequence, n: int, among: Sequence | None = None) -> bool:
    """Cross-free, and every other cut of ``among`` (default: all cuts) crosses a member."""
    full = (1 << n) - 1
    ms = {to_mask(c) ^ full if to_mask(c) & 1 else to_mask(c) for c in cuts}
    if not is_cross_free(list(ms), n):
        return False
    pool = _all_canonical(n) if among is None else [c.canonical() if isinstance(c, Shore) else c for c in among]
    for s in pool:
        m = to_mask(s)
        if m in ms:
            continue
        if not any(cross(m, x, n) for x in ms):
            return False
    return True


# --- tree representations -------------------------------------------------


@dataclass
class ArborescenceRep:
    """Rooted out-tree plus a partial map from universe elements to nodes."""

    num_nodes: int
    edges: list[tuple[int, int]]
    root: int
    labels: dict[int, int]
    universe: int = 0
    children: dict[int, list[int]] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        kids: dict[int, list[int]] = {v: [] for v in range(self.num_nodes)}
        indeg = [0] * self.num_nodes
        for a, b in self.edges:
            kids[a].append(b)
            indeg[b] += 1
        if len(self.edges) != self.num_nodes - 1 or indeg[self.root] != 0:
            raise InvariantViolation("not an arborescence")
        if any(d != 1 for v, d in enumerate(indeg) if v != self.root):
            raise InvariantViolation("not an arborescence")
        self.children = kids
        # reachability from the root rules out cycles
        seen, stack = {self.root}, [self.root]
        while stack:
            for c in kids[stack.pop()]:
                seen.add(c)
                stack.append(c)
        if len(seen) != self.num_nodes:
            raise InvariantViolation("arborescence is disconnected")

    def out_degree(self, v: int) -> int:
        return len(self.children[v])

    def node_labels(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {v: [] for v in range(self.num_nodes)}
        for s, v in sorted(self.labels.items()):
            out[v].append(s)
        return out

    def leaves(self) -> list[int]:
        return [v for v in range(self.num_nodes) if not self.children[v]]

    def to_json_obj(self) -> dict:
        return {
            "nodes": self.num_nodes,
            "root": self.root,
            "edges": [list(e) for e in self.edges],
            "labels": {str(s): v for s, v in sorted(self.labels.items())},
        }

    def to_dot(self, name: str = "T") -> str:
        lab = self.node_labels()
        lines = [f"digraph {name} {{"]
        for v in range(self.num_nodes):
            text = ",".join(map(str, lab[v]))
            shape = "doublecircle" if v == self.root else "circle"
            lines.append(f'  n{v} [label="{text}", shape={shape}];')
        for a, b in self.edges:
            lines.append(f"  n{a} -> n{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def tree_representation(F: SetFamily) -> ArborescenceRep:
    """Faithful arborescence for a laminar family.

    Each set gets a node whose parent is the node of the smallest strictly
    larger set containing it (or the root).  Every element is labelled at the
    node of the smallest set containing it, or at the root.
    """
    if not is_laminar(F):
        raise NotLaminarError("family is not laminar")
    ms = list(F.members)
    order = sorted(range(len(ms)), key=lambda k: (-bin(ms[k]).count("1"), ms[k]))
    parent: dict[int, int | None] = {}
    for pos, k in enumerate(order):
        best = None
        for k2 in order[:pos]:
            m2 = ms[k2]
            if ms[k] and (ms[k] & m2) == ms[k] and m2 != ms[k]:
                best = k2  # later in order means smaller, so the last hit wins
        parent[k] = best
    kids: dict[int | None, list[int]] = {None: []}
    for k in range(len(ms)):
        kids[k] = []
    for k in order:
        kids[parent[k]].append(k)
    for key in kids:
        kids[key].sort(key=lambda k: (_low(ms[k]) if ms[k] else 1 << 30, ms[k]))
    # preorder numbering, root = 0
    node_of: dict[int, int] = {}
    edges: list[tuple[int, int]] = []
    counter = 1
    stack: list[tuple[int | None, int]] = [(None, 0)]
    while stack:
        key, node = stack.pop()
        for k in kids[key]:
            node_of[k] = counter
            edges.append((node, counter))
            counter += 1
        for k in reversed(kids[key]):
            stack.append((k, node_of[k]))
    labels: dict[int, int] = {}
    for s in range(F.n):
        best_k = None
        for k in order:
            if ms[k] >> s & 1:
                best_k = k
        labels[s] = 0 if best_k is None else node_of[best_k]
    return ArborescenceRep(counter, edges, 0, labels, F.n)


def family_from_tree(rep: ArborescenceRep, n: int | None = None) -> SetFamily:
    """Read off ``S_e`` (labels below the head of ``e``) for every edge."""
    n = rep.universe if n is None else n
    return SetFamily(n, tuple(family_from_tree_list(rep, n)))


def family_from_tree_list(rep: ArborescenceRep, n: int | None = None) -> list[int]:
    n = rep.universe if n is None else n
    lab = rep.node_labels()
    out = []
    for _, b in rep.edges:
        m, stack = 0, [b]
        while stack:
            u = stack.pop()
            for s in lab[u]:
                m |= 1 << s
            stack.extend(rep.children[u])
        out.append(m)
    return out


# --- random generation ------------------------------------------------------


def random_maximal_cross_free(n: int, seed: int) -> list[Shore]:
    """Random maximal cross-free cut family on ``n`` vertices.

    Samples a random full binary tree over the leaves ``1..n-1`` by repeatedly
    merging two random clusters; the ``2n - 3`` clusters are the beach of the
    family (vertex 0 sits at the root).
    """
    if n < 2:
        raise PreconditionError("need n >= 2")
    rng = random.Random(seed)
    clusters = [1 << v for v in range(1, n)]
    family = list(clusters)
    while len(clusters) > 1:
        a, b = rng.sample(range(len(clusters)), 2)
        merged = clusters[a] | clusters[b]
        clusters = [c for k, c in enumerate(clusters) if k not in (a, b)] + [merged]
        family.append(merged)
    # the final cluster {1..n-1} is the star cut at vertex 0
    return sorted(Shore(m, n) for m in family)


def random_arborescence_family(n: int, rng: random.Random, complement_free: bool = True) -> SetFamily:
    """Laminar family read off a random arborescence with random labels.

    With ``complement_free`` vertex 0 is pinned to the root, so no set contains
    it; the result is then proper, laminar and complement free.  Otherwise the
    family is only guaranteed proper and laminar.
    """
    nodes = rng.randint(2, 2 * n + 1)
    edges = [(rng.randrange(v), v) for v in range(1, nodes)]
    labels = {s: rng.randrange(nodes) for s in range(n)}
    if complement_free:
        labels[0] = 0
    rep = ArborescenceRep(nodes, edges, 0, labels, n)
    full = (1 << n) - 1
    seen: list[int] = []
    for m in family_from_tree_list(rep, n):
        if m and m != full and m not in seen:
            seen.append(m)
    return SetFamily(n, tuple(seen))


# --- uncrossing -----------------------------------------------------------


@dataclass(frozen=True)
class UncrossReport:
    intersection: int
    union: int
    overlap_x: int
    overlap_intersection: int
    overlap_union: int

    @property
    def decreased(self) -> bool:
        return self.overlap_intersection < self.overlap_x and self.overlap_union < self.overlap_x


def overlap_count(X, family: Iterable) -> int:
    x = to_mask(X)
    return sum(1 for y in family if overlap(x, to_mask(y)))


def uncross(X, Y, n: int, family: SetFamily | Sequence | None = None) -> UncrossReport:
    """Replace overlapping ``X, Y`` by ``X & Y`` and ``X | Y``.

    When ``family`` is laminar and contains ``Y``, both combinations overlap
    strictly fewer members of ``family`` than ``X`` does; this is checked and
    a violation raises :class:`InvariantViolation`.
    """
    x, y = to_mask(X), to_mask(Y)
    if not overlap(x, y):
        raise PreconditionError("uncross needs overlapping sets")
    fam = [] if family is None else [to_mask(f) for f in family]
    rep = UncrossReport(
        x & y, x | y, overlap_count(x, fam), overlap_count(x & y, fam), overlap_count(x | y, fam)
    )
    if family is not None and y in fam and is_laminar(fam) and not rep.decreased:
        raise InvariantViolation(f"uncrossing did not reduce overlaps: {rep}")
    return rep
