"""Exhaustive cut enumeration, minimum cuts, near-minimum cuts and cut dimension.

Every graph here is small enough to list all ``2^(n-1) - 1`` cuts.  Shores are
always canonical (vertex 0 excluded) and reported in increasing bitmask order.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import _backend
from .errors import CapExceededError, InvalidParameterError
from .graph import Graph, Shore, num_slots

DEFAULT_CAP = 16


def default_cap() -> int:
    env = os.environ.get("CUTDIM_CAP")
    if env:
        try:
            return int(env)
        except ValueError:
            raise InvalidParameterError(f"CUTDIM_CAP must be an integer, got {env!r}") from None
    return DEFAULT_CAP


def _check_cap(n: int, cap: int | None) -> None:
    limit = default_cap() if cap is None else cap
    if n > limit:
        raise CapExceededError(
            f"n={n} exceeds the enumeration cap {limit} ({2 ** (n - 1) - 1} cuts); raise --cap to override"
        )


def _masks(n: int) -> range:
    return range(2, 1 << n, 2)


@dataclass(frozen=True)
class MincutReport:
    lam: Fraction
    mincuts: tuple[Shore, ...]
    all_cuts_count: int

    def to_json_obj(self) -> dict:
        from .graph import format_rational

        return {
            "lambda": format_rational(self.lam),
            "mincuts": [list(s.members) for s in self.mincuts],
            "all_cuts_count": self.all_cuts_count,
        }


@dataclass(frozen=True)
class AlphaReport:
    alpha: Fraction
    lam: Fraction
    cuts: tuple[Shore, ...]

    def to_json_obj(self) -> dict:
        from .graph import format_rational

        return {
            "alpha": format_rational(self.alpha),
            "lambda": format_rational(self.lam),
            "cuts": [list(s.members) for s in self.cuts],
        }


def enumerate_cuts(G: Graph, cap: int | None = None) -> list[Shore]:
    _check_cap(G.n, cap)
    return [Shore(m, G.n) for m in _masks(G.n)]


def all_cut_weights(G: Graph, cap: int | None = None) -> list[Fraction]:
    """Weights of all canonical cuts, aligned with :func:`enumerate_cuts`."""
    _check_cap(G.n, cap)
    d = lcm(*(x.denominator for x in G.w))
    ints = [x.numerator * (d // x.denominator) for x in G.w]
    return [Fraction(c, d) for c in _backend.cut_weights(G.n, ints)]


def mincuts(G: Graph, cap: int | None = None) -> MincutReport:
    weights = all_cut_weights(G, cap)
    lam = min(weights)
    cuts = tuple(Shore(2 * (k + 1), G.n) for k, x in enumerate(weights) if x == lam)
    return MincutReport(lam, cuts, len(weights))


def near_mincuts(G: Graph, alpha, cap: int | None = None) -> AlphaReport:
    alpha = Fraction(alpha)
    if alpha < 1:
        raise InvalidParameterError(f"alpha must be >= 1, got {alpha}")
    weights = all_cut_weights(G, cap)
    lam = min(weights)
    bound = alpha * lam
    cuts = tuple(Shore(2 * (k + 1), G.n) for k, x in enumerate(weights) if x <= bound)
    return AlphaReport(alpha, lam, cuts)


def cut_rows(G: Graph, shores, full: bool = False) -> list[list[int]]:
    """0/1 characteristic rows, over all slots or over positive-weight edges."""
    cols = list(range(num_slots(G.n))) if full else list(G.support)
    return _backend.crossing_matrix(G.n, [s.mask for s in shores], cols)


def span_dimension(G: Graph, shores, full: bool = False) -> int:
    shores = list(shores)
    if not shores:
        return 0
    rows = cut_rows(G, shores, full)
    if not rows[0]:
        return 0
    return _backend.rank_int(rows)


def cut_dimension(G: Graph, cap: int | None = None, full: bool = False) -> int:
    """Dimension of the span of the minimum cuts' characteristic vectors."""
    return span_dimension(G, mincuts(G, cap).mincuts, full)


def cdim_alpha(G: Graph, alpha, cap: int | None = None, full: bool = False) -> int:
    """Dimension of the span of all cuts of weight at most ``alpha * lambda``."""
    return span_dimension(G, near_mincuts(G, alpha, cap).cuts, full)
