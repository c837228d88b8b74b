"""Small dense matrices over a scalar field, plus a Gauss-Jordan oracle.

The oracle exists to check the closed-form inverses; nothing on the main
inversion path calls it.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .scalar import EXACT, FLOAT, Field, Scalar


class SingularMatrixError(ArithmeticError):
    pass


def _coerce(c):
    if isinstance(c, int) and not isinstance(c, bool):
        return Fraction(c)
    return c


class Matrix:
    """Immutable row-major matrix."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: Sequence[Sequence]):
        rows = [tuple(_coerce(c) for c in r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix rows")
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", ncols)
        object.__setattr__(self, "entries", tuple(rows))

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, n: int, field: Field = EXACT) -> "Matrix":
        zero, one = field.zero, field.one
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field = EXACT) -> "Matrix":
        return cls([[field.zero] * cols for _ in range(rows)])

    @classmethod
    def diagonal(cls, values: Sequence) -> "Matrix":
        values = [_coerce(v) for v in values]
        n = len(values)
        return cls([[values[i] if i == j else values[i] * 0 for j in range(n)] for i in range(n)])

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def is_square(self):
        return self.rows == self.cols

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.entries)

    def tolist(self) -> list:
        return [list(r) for r in self.entries]

    def transpose(self) -> "Matrix":
        return Matrix([list(c) for c in zip(*self.entries)]) if self.rows else Matrix([])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        body = "; ".join(" ".join(str(c) for c in r) for r in self.entries)
        return f"Matrix({self.rows}x{self.cols}: {body})"

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
            cols = list(zip(*other.entries))
            return Matrix([[_dot(r, c) for c in cols] for r in self.entries])
        vec = list(other)
        if len(vec) != self.cols:
            raise ValueError(f"vector of length {len(vec)} for {self.cols} columns")
        return [_dot(r, vec) for r in self.entries]

    def scale_rows(self, factors: Sequence) -> "Matrix":
        return Matrix([[f * c for c in r] for f, r in zip(factors, self.entries)])

    def max_abs(self) -> float:
        return max((abs(float(c)) for r in self.entries for c in r), default=0.0)

    def first_difference(self, other: "Matrix", tol: float = 0.0):
        """``(i, j, self[i,j], other[i,j])`` for the first entry differing by more than ``tol``."""
        self._same_shape(other)
        for i, (r, s) in enumerate(zip(self.entries, other.entries)):
            for j, (a, b) in enumerate(zip(r, s)):
                if (a != b) if tol == 0 else abs(a - b) > tol:
                    return (i, j, a, b)
        return None


def _dot(a, b):
    it = iter(zip(a, b))
    try:
        x, y = next(it)
    except StopIteration:
        return Fraction(0)
    acc = x * y
    for x, y in it:
        acc += x * y
    return acc


def identity_residual(m: Matrix) -> float:
    """``max |m - I|``."""
    if not m.is_square:
        raise ValueError("identity residual needs a square matrix")
    return max(
        (abs(float(m[i, j]) - (1.0 if i == j else 0.0)) for i in range(m.rows) for j in range(m.cols)),
        default=0.0,
    )


def _eliminate(m: Matrix, rhs: list) -> list:
    """Gauss-Jordan on ``[m | rhs]``; ``rhs`` is a list of right-hand-side rows."""
    if not m.is_square:
        raise ValueError(f"matrix must be square, got {m.shape}")
    n = m.rows
    a = [list(r) + list(b) for r, b in zip(m.entries, rhs)]
    exact = all(not isinstance(c, float) for r in m.entries for c in r)
    for col in range(n):
        if exact:
            piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        else:
            piv = max(range(col, n), key=lambda r: abs(a[r][col]))
            if a[piv][col] == 0:
                piv = None
        if piv is None:
            raise SingularMatrixError(f"matrix is singular (no pivot in column {col})")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [c * inv for c in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def oracle_invert(m: Matrix) -> Matrix:
    n = m.rows
    exact = all(not isinstance(c, float) for r in m.entries for c in r)
    eye = Matrix.identity(n, EXACT if exact else FLOAT)
    return Matrix(_eliminate(m, [list(r) for r in eye.entries]))


def oracle_solve(m: Matrix, u: Sequence) -> list:
    if len(u) != m.rows:
        raise ValueError(f"right-hand side has length {len(u)}, expected {m.rows}")
    return [row[0] for row in _eliminate(m, [[_coerce(c)] for c in u])]


def determinant(m: Matrix) -> Scalar:
    """Exact determinant by elimination; used as an independent rank check."""
    if not m.is_square:
        raise ValueError("determinant of a non-square matrix")
    a = [list(r) for r in m.entries]
    n = m.rows
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return det * 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            if a[r][col] != 0:
                f = a[r][col] / a[col][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det
