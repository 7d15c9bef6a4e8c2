"""Exact-rational weighted graphs on vertices ``0..n-1``.

Edge slots are the ``C(n, 2)`` unordered pairs in lexicographic order, so the
weight function is a plain vector indexed by slot.  A cut is described by a
:class:`Shore`, the side that does not contain vertex 0.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InvalidEdgeError, InvalidShoreError, MalformedInputError


def num_slots(n: int) -> int:
    return n * (n - 1) // 2


def edge_index(i: int, j: int, n: int) -> int:
    """Position of the pair ``{i, j}`` (with ``i < j``) in lexicographic slot order."""
    if not (0 <= i < j < n):
        raise InvalidEdgeError(f"invalid edge ({i}, {j}) for n={n}")
    # slots before row i: sum_{r<i} (n-1-r)
    return i * (2 * n - i - 1) // 2 + (j - i - 1)


@lru_cache(maxsize=64)
def slot_pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(combinations(range(n), 2))


def parse_rational(value) -> Fraction:
    """Parse ``"p/q"``, an integer string or a JSON integer into a Fraction.

    Decimal notation is rejected: serialized weights must stay exact.
    """
    if isinstance(value, bool):
        raise MalformedInputError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if not isinstance(value, str):
        raise MalformedInputError(f"rationals must be 'p/q' strings, got {value!r}")
    text = value.strip()
    if not text or any(ch in text for ch in ".eE"):
        raise MalformedInputError(f"not a decimal-free rational: {value!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise MalformedInputError(f"not a rational: {value!r}") from exc


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Shore:
    """One side of a cut, stored as a vertex bitmask.

    Instances built through :meth:`of` are canonical: they never contain
    vertex 0, so each cut has exactly one Shore.
    """

    mask: int
    n: int

    def __post_init__(self):
        full = (1 << self.n) - 1
        if self.mask <= 0 or self.mask >= full or self.mask & ~full:
            raise InvalidShoreError(f"shore mask {self.mask:#b} is trivial for n={self.n}")

    @classmethod
    def of(cls, vertices: Iterable[int], n: int) -> "Shore":
        mask = 0
        for v in vertices:
            if not 0 <= v < n:
                raise InvalidShoreError(f"vertex {v} out of range for n={n}")
            mask |= 1 << v
        full = (1 << n) - 1
        if mask & 1:
            mask ^= full
        return cls(mask, n)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if self.mask >> v & 1)

    @property
    def is_canonical(self) -> bool:
        return not self.mask & 1

    def complement(self) -> "Shore":
        return Shore(self.mask ^ ((1 << self.n) - 1), self.n)

    def canonical(self) -> "Shore":
        return self.complement() if self.mask & 1 else self

    def is_star(self) -> bool:
        size = bin(self.mask).count("1")
        return size == 1 or size == self.n - 1

    def __lt__(self, other: "Shore") -> bool:
        return (self.n, self.mask) < (other.n, other.mask)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __repr__(self) -> str:
        return f"Shore({set(self.members) or '{}'}, n={self.n})"


@dataclass(frozen=True)
class CutVector:
    full: tuple[int, ...]
    restricted: tuple[int, ...]


@dataclass(frozen=True)
class Graph:
    n: int
    w: tuple[Fraction, ...]

    def __post_init__(self):
        if self.n < 2:
            raise InvalidEdgeError("graphs need at least 2 vertices")
        if len(self.w) != num_slots(self.n):
            raise InvalidEdgeError(
                f"weight vector has length {len(self.w)}, expected {num_slots(self.n)}"
            )
        w = tuple(Fraction(x) for x in self.w)
        if any(x < 0 for x in w):
            raise InvalidEdgeError("edge weights must be nonnegative")
        object.__setattr__(self, "w", w)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int, object]]) -> "Graph":
        """Build from ``(i, j, weight)`` triples; unlisted slots get weight 0.

        Repeated pairs accumulate, which is how parallel edges collapse.
        """
        w = [Fraction(0)] * num_slots(n)
        for i, j, x in edges:
            if i == j:
                raise InvalidEdgeError(f"self-loop at {i}")
            a, b = min(i, j), max(i, j)
            w[edge_index(a, b, n)] += parse_rational(x) if isinstance(x, str) else Fraction(x)
        return cls(n, tuple(w))

    def weight(self, i: int, j: int) -> Fraction:
        if i == j:
            raise InvalidEdgeError(f"self-loop at {i}")
        a, b = min(i, j), max(i, j)
        return self.w[edge_index(a, b, self.n)]

    def edges(self) -> list[tuple[int, int, Fraction]]:
        return [(i, j, x) for (i, j), x in zip(slot_pairs(self.n), self.w) if x > 0]

    @property
    def support(self) -> tuple[int, ...]:
        """Slot indices carrying positive weight (the graph's edge set)."""
        return tuple(k for k, x in enumerate(self.w) if x > 0)

    def is_complete(self) -> bool:
        return all(x > 0 for x in self.w)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise InvalidEdgeError("relabel needs a permutation of the vertices")
        w = [Fraction(0)] * num_slots(self.n)
        for (i, j), x in zip(slot_pairs(self.n), self.w):
            a, b = sorted((perm[i], perm[j]))
            w[edge_index(a, b, self.n)] = x
        return Graph(self.n, tuple(w))

    # --- serialization ---------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "edges": [[i, j, format_rational(x)] for i, j, x in self.edges()],
        }

    @classmethod
    def from_json_obj(cls, obj) -> "Graph":
        if isinstance(obj, dict) and "graph" in obj and "n" not in obj:
            obj = obj["graph"]
        if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
            raise MalformedInputError('graph JSON needs keys "n" and "edges"')
        n = obj["n"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 2:
            raise MalformedInputError(f'"n" must be an integer >= 2, got {n!r}')
        triples = []
        for item in obj["edges"]:
            if not isinstance(item, list) or len(item) != 3:
                raise MalformedInputError(f"edge entries are [i, j, \"p/q\"], got {item!r}")
            i, j, x = item
            if not all(isinstance(v, int) and not isinstance(v, bool) for v in (i, j)):
                raise MalformedInputError(f"edge endpoints must be integers: {item!r}")
            if not (0 <= i < n and 0 <= j < n) or i == j:
                raise MalformedInputError(f"edge endpoints out of range: {item!r}")
            x = parse_rational(x)
            if x < 0:
                raise MalformedInputError(f"negative weight: {item!r}")
            triples.append((i, j, x))
        return cls.from_edges(n, triples)

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedInputError(f"invalid JSON: {exc}") from exc
        return cls.from_json_obj(obj)

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines += [f"  {v};" for v in range(self.n)]
        for i, j, x in self.edges():
            lines.append(f'  {i} -- {j} [label="{format_rational(x)}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def cut_weight(G: Graph, X: Shore) -> Fraction:
    """Total weight of the edges with exactly one endpoint in ``X``."""
    _check_shore(G, X)
    m = X.mask
    return sum(
        (x for (i, j), x in zip(slot_pairs(G.n), G.w) if (m >> i ^ m >> j) & 1),
        Fraction(0),
    )


def crossing_slots(n: int, mask: int) -> list[int]:
    return [k for k, (i, j) in enumerate(slot_pairs(n)) if (mask >> i ^ mask >> j) & 1]


def char_vector(G: Graph, X: Shore) -> CutVector:
    _check_shore(G, X)
    m = X.mask
    full = tuple((m >> i ^ m >> j) & 1 for i, j in slot_pairs(G.n))
    restricted = tuple(full[k] for k in G.support)
    return CutVector(full, restricted)


def _check_shore(G: Graph, X: Shore) -> None:
    if X.n != G.n:
        raise InvalidShoreError(f"shore is over {X.n} vertices, graph has {G.n}")
