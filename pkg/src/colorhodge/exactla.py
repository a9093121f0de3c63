"""Exact linear algebra over the rationals.

Two elimination engines live here:

* ``rank`` / ``image_basis`` run fraction-free Bareiss elimination on a dense
  ``RationalMatrix`` after clearing denominators row by row.
* ``SparseEchelon`` reduces integer column vectors (dicts) one at a time by
  integer cross-multiplication with content removal. Boundary and projected
  boundary matrices are large and sparse, so homology goes through this path.

Both return exact ranks; the test-suite checks them against each other.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import InputError

SparseVector = dict[int, int]


class RationalMatrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Iterable], cols: int | None = None):
        rows = tuple(tuple(Fraction(x) for x in row) for row in data)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise InputError("ragged matrix rows")
        self.rows = len(rows)
        self.cols = cols
        self._data = rows

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RationalMatrix:
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, k: int) -> RationalMatrix:
        return cls([[int(i == j) for j in range(k)] for i in range(k)], k)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> RationalMatrix:
        return cls([[c[i] for c in columns] for i in range(rows)], len(columns))

    @classmethod
    def from_sparse(cls, rows: int, cols: int, entries: dict[tuple[int, int], object]) -> RationalMatrix:
        data = [[0] * cols for _ in range(rows)]
        for (i, j), v in entries.items():
            data[i][j] = v
        return cls(data, cols)

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self._data)

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def transpose(self) -> RationalMatrix:
        return RationalMatrix(zip(*self._data), self.rows) if self.rows else RationalMatrix([], 0)

    def scale(self, c) -> RationalMatrix:
        c = Fraction(c)
        return RationalMatrix(([x * c for x in r] for r in self._data), self.cols)

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        return multiply(self, other)

    def __eq__(self, other):
        return isinstance(other, RationalMatrix) and equals(self, other)

    def __hash__(self):
        return hash((self.rows, self.cols, self._data))

    def __repr__(self):
        return f"RationalMatrix({[[str(x) for x in r] for r in self._data]})"


def multiply(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    if a.cols != b.rows:
        raise InputError(f"cannot multiply {a.shape} by {b.shape}")
    bt = [b.column(j) for j in range(b.cols)]
    return RationalMatrix(
        ([sum((x * y for x, y in zip(a.row(i), col) if x and y), Fraction(0)) for col in bt]
         for i in range(a.rows)),
        b.cols,
    )


def trace(m: RationalMatrix) -> Fraction:
    if m.rows != m.cols:
        raise InputError("trace of a non-square matrix")
    return sum((m[i, i] for i in range(m.rows)), Fraction(0))


def equals(a: RationalMatrix, b: RationalMatrix) -> bool:
    return a.shape == b.shape and a._data == b._data


def _integer_rows(m: RationalMatrix) -> list[list[int]]:
    out = []
    for r in m._data:
        den = lcm(*(x.denominator for x in r)) if r else 1
        out.append([int(x * den) for x in r])
    return out


def _bareiss_pivots(rows: list[list[int]], ncols: int) -> list[int]:
    """Fraction-free row echelon in place; returns pivot columns in order.

    Pivot rule: first nonzero entry scanning columns left to right and rows
    top to bottom. Every entry after step k is a (k+1)-minor of the input,
    so the division by the previous pivot is exact.
    """
    nrows = len(rows)
    pivots: list[int] = []
    prev = 1
    pr = 0
    for c in range(ncols):
        if pr == nrows:
            break
        sel = next((i for i in range(pr, nrows) if rows[i][c]), None)
        if sel is None:
            continue
        rows[pr], rows[sel] = rows[sel], rows[pr]
        prow = rows[pr]
        p = prow[c]
        for i in range(pr + 1, nrows):
            row = rows[i]
            f = row[c]
            if f:
                rows[i] = [(p * x - f * y) // prev for x, y in zip(row, prow)]
            elif p != prev:
                rows[i] = [(p * x) // prev for x in row]
        prev = p
        pivots.append(c)
        pr += 1
    return pivots


def rank(m: RationalMatrix) -> int:
    """Exact rank by fraction-free elimination."""
    if m.rows == 0 or m.cols == 0:
        return 0
    return len(_bareiss_pivots(_integer_rows(m), m.cols))


def pivot_columns(m: RationalMatrix) -> list[int]:
    if m.rows == 0 or m.cols == 0:
        return []
    return _bareiss_pivots(_integer_rows(m), m.cols)


def image_basis(m: RationalMatrix) -> RationalMatrix:
    """Columns of ``m`` at the pivot positions; they span the column space."""
    piv = pivot_columns(m)
    return RationalMatrix.from_columns([m.column(j) for j in piv], m.rows)


def solve(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """The unique X with a @ X == b, for ``a`` of full column rank.

    Raises InputError when some column of ``b`` is outside the column space of
    ``a`` or when ``a`` has dependent columns.
    """
    if a.rows != b.rows:
        raise InputError(f"incompatible shapes {a.shape} and {b.shape}")
    k = a.cols
    aug = [list(ra) + list(rb) for ra, rb in zip(a._data, b._data)]
    width = k + b.cols
    pr = 0
    for c in range(k):
        sel = next((i for i in range(pr, a.rows) if aug[i][c]), None)
        if sel is None:
            raise InputError("coefficient matrix has dependent columns")
        aug[pr], aug[sel] = aug[sel], aug[pr]
        inv = 1 / aug[pr][c]
        aug[pr] = [x * inv for x in aug[pr]]
        prow = aug[pr]
        for i in range(a.rows):
            if i != pr and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], prow)]
        pr += 1
    for i in range(k, a.rows):
        if any(aug[i][k:width]):
            raise InputError("right-hand side is not in the column space")
    return RationalMatrix((aug[i][k:] for i in range(k)), b.cols)


# -- sparse integer engine ---------------------------------------------------


def primitive(v: SparseVector) -> SparseVector:
    """Divide out the content and make the leading entry positive."""
    if not v:
        return v
    g = 0
    for x in v.values():
        g = gcd(g, x)
        if g == 1:
            break
    lead = v[min(v)]
    if lead < 0:
        g = -g
    if g == 1:
        return v
    return {i: x // g for i, x in v.items()}


class SparseEchelon:
    """Incrementally maintained echelon basis of a span of integer vectors.

    Vectors are reduced against stored pivots keyed by their smallest
    nonzero index. ``add`` returns True when the vector was independent.
    """

    def __init__(self):
        self.pivots: dict[int, SparseVector] = {}

    def __len__(self):
        return len(self.pivots)

    def reduce(self, v: SparseVector) -> SparseVector:
        v = {i: x for i, x in v.items() if x}
        pivots = self.pivots
        while v:
            lead = min(v)
            p = pivots.get(lead)
            if p is None:
                break
            a = p[lead]
            b = v[lead]
            g = gcd(a, b)
            fa, fb = a // g, b // g
            if fa != 1:
                v = {i: x * fa for i, x in v.items()}
            for i, x in p.items():
                y = v.get(i, 0) - fb * x
                if y:
                    v[i] = y
                else:
                    v.pop(i, None)
            v = primitive(v)
        return v

    def add(self, v: SparseVector) -> bool:
        r = self.reduce(v)
        if not r:
            return False
        self.pivots[min(r)] = primitive(r)
        return True

    def contains(self, v: SparseVector) -> bool:
        return not self.reduce(v)


def sparse_rank(columns: Iterable[SparseVector]) -> int:
    ech = SparseEchelon()
    return sum(1 for col in columns if ech.add(col))


def sparse_pivot_columns(columns: Iterable[SparseVector]) -> list[int]:
    """Indices of columns independent of all earlier columns."""
    ech = SparseEchelon()
    return [j for j, col in enumerate(columns) if ech.add(col)]


def to_sparse_columns(m: RationalMatrix) -> list[SparseVector]:
    """Integer columns (denominators cleared per column) of a rational matrix."""
    cols = []
    for j in range(m.cols):
        col = m.column(j)
        den = lcm(*(x.denominator for x in col)) if col else 1
        cols.append({i: int(x * den) for i, x in enumerate(col) if x})
    return cols
