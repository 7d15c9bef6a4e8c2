"""Dense exact linear algebra over the rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from . import _backend
from .errors import DimensionMismatchError, InvalidParameterError


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionMismatchError("matrix is not rectangular")

    @classmethod
    def of(cls, data, cols: int | None = None) -> "RationalMatrix":
        """Build from any nested sequence (or pass a RationalMatrix through)."""
        if isinstance(data, RationalMatrix):
            if data.rows == 0 and cols is not None:
                return cls(0, cols, ())
            return data
        entries = tuple(tuple(Fraction(x) for x in row) for row in data)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        return cls(len(entries), cols, entries)

    def __getitem__(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        other = RationalMatrix.of(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatchError("shape mismatch in subtraction")
        return RationalMatrix(
            self.rows,
            self.cols,
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)),
        )

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else ())

    def select(self, rows: Sequence[int] | None = None, cols: Sequence[int] | None = None) -> "RationalMatrix":
        rs = range(self.rows) if rows is None else rows
        cs = range(self.cols) if cols is None else cols
        return RationalMatrix(len(rs), len(cs), tuple(tuple(self.entries[i][j] for j in cs) for i in rs))

    def matvec(self, v: Sequence) -> list[Fraction]:
        if len(v) != self.cols:
            raise DimensionMismatchError(f"vector of length {len(v)} for {self.cols} columns")
        return [sum((a * b for a, b in zip(row, v) if a), Fraction(0)) for row in self.entries]

    def rmatvec(self, v: Sequence) -> list[Fraction]:
        """``M^T v``."""
        if len(v) != self.rows:
            raise DimensionMismatchError(f"vector of length {len(v)} for {self.rows} rows")
        out = [Fraction(0)] * self.cols
        for coef, row in zip(v, self.entries):
            if coef:
                for j, a in enumerate(row):
                    if a:
                        out[j] += coef * a
        return out

    def pretty(self) -> str:
        cells = [[str(x) for x in row] for row in self.entries]
        if not cells:
            return f"[empty {self.rows}x{self.cols}]"
        width = max(len(c) for row in cells for c in row)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def identity(n: int) -> RationalMatrix:
    return RationalMatrix.of([[int(i == j) for j in range(n)] for i in range(n)], n)


def _integer_rows(M: RationalMatrix) -> list[list[int]]:
    out = []
    for row in M.entries:
        d = lcm(*(x.denominator for x in row)) if row else 1
        out.append([x.numerator * (d // x.denominator) for x in row])
    return out


def rank(M) -> int:
    """Exact rank; rows are scaled to integers and eliminated fraction-free."""
    M = RationalMatrix.of(M)
    if M.rows == 0 or M.cols == 0:
        return 0
    return _backend.rank_int(_integer_rows(M))


def _pivot_size(x: Fraction) -> int:
    return x.numerator.bit_length() + x.denominator.bit_length()


def _rref_rows(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """In-place Gauss-Jordan; returns the reduced rows and pivot columns."""
    m = len(rows)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        cands = [i for i in range(r, m) if rows[i][c]]
        if not cands:
            continue
        p = min(cands, key=lambda i: (_pivot_size(rows[i][c]), i))
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(M) -> RationalMatrix:
    M = RationalMatrix.of(M)
    rows, _ = _rref_rows([list(r) for r in M.entries], M.cols)
    return RationalMatrix.of(rows, M.cols)


def rref_with_pivots(M) -> tuple[RationalMatrix, list[int]]:
    M = RationalMatrix.of(M)
    rows, pivots = _rref_rows([list(r) for r in M.entries], M.cols)
    return RationalMatrix.of(rows, M.cols), pivots


def nullspace_basis(M) -> list[list[Fraction]]:
    """Basis of ``{u : M u = 0}``, one vector per free column."""
    M = RationalMatrix.of(M)
    rows, pivots = _rref_rows([list(r) for r in M.entries], M.cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(M.cols):
        if free in pivot_set:
            continue
        u = [Fraction(0)] * M.cols
        u[free] = Fraction(1)
        for r, pc in enumerate(pivots):
            u[pc] = -rows[r][free]
        basis.append(u)
    return basis


def in_rowspace(v: Sequence, M) -> tuple[bool, list[Fraction] | None]:
    """Decide whether ``v`` is a rational combination of the rows of ``M``.

    Returns ``(True, coeffs)`` with ``M^T coeffs == v`` exactly, or
    ``(False, None)``.
    """
    M = RationalMatrix.of(M)
    v = [Fraction(x) for x in v]
    if len(v) != M.cols:
        raise DimensionMismatchError(f"vector of length {len(v)} for {M.cols} columns")
    if M.rows == 0:
        return (not any(v), [] if not any(v) else None)
    # Solve M^T c = v: eliminate on the augmented system [M^T | v].
    aug = [[M.entries[i][j] for i in range(M.rows)] + [v[j]] for j in range(M.cols)]
    rows, pivots = _rref_rows(aug, M.rows + 1)
    if M.rows in pivots:
        return False, None
    coeffs = [Fraction(0)] * M.rows
    for r, pc in enumerate(pivots):
        coeffs[pc] = rows[r][M.rows]
    return True, coeffs


def is_sdd_row(M, i: int) -> bool:
    """Strict diagonal dominance of row ``i``: ``|M[i][i]| > sum_{j != i} |M[i][j]|``."""
    M = RationalMatrix.of(M)
    if M.rows != M.cols:
        raise DimensionMismatchError(f"diagonal dominance needs a square matrix, got {M.rows}x{M.cols}")
    if not 0 <= i < M.rows:
        raise InvalidParameterError(f"row {i} out of range")
    row = M.entries[i]
    return abs(row[i]) > sum(abs(x) for j, x in enumerate(row) if j != i)


def is_sdd_row_rect(row: Sequence, i: int) -> bool:
    """Diagonal dominance test for a single row of a possibly tall matrix."""
    return abs(row[i]) > sum(abs(x) for j, x in enumerate(row) if j != i)
