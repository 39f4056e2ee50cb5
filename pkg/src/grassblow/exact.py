"""Exact rational matrices and a seeded sampler of small rationals.

Everything is built on :class:`fractions.Fraction`; no floating point is used
anywhere in the package.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ParameterError

Rational = Fraction


def as_fraction(x) -> Fraction:
    """Convert ints, Fractions and ``"a/b"`` strings; reject floats."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise ParameterError("booleans are not rational entries")
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise ParameterError(f"cannot use {type(x).__name__} as an exact rational")


def det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Determinant of a square matrix by fraction-exact Gaussian elimination."""
    size = len(rows)
    if size == 0:
        return Fraction(1)
    if size == 1:
        return rows[0][0]
    if size == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    a = [list(r) for r in rows]
    result = Fraction(1)
    for c in range(size):
        piv = next((r for r in range(c, size) if a[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            result = -result
        pivot_row = a[c]
        pv = pivot_row[c]
        result *= pv
        for r in range(c + 1, size):
            row = a[r]
            f = row[c]
            if f:
                f = f / pv
                for k in range(c + 1, size):
                    row[k] -= f * pivot_row[k]
    return result


def integer_det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by fraction-free (Bareiss) elimination."""
    size = len(rows)
    if size == 0:
        return 1
    if size <= 3:
        if size == 1:
            return rows[0][0]
        if size == 2:
            return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
        (a, b, c), (d, e, f), (g, h, i) = rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    a = [list(r) for r in rows]
    sign, prev = 1, 1
    for c in range(size - 1):
        piv = next((r for r in range(c, size) if a[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            sign = -sign
        pc = a[c]
        for r in range(c + 1, size):
            row = a[r]
            for k in range(c + 1, size):
                row[k] = (row[k] * pc[c] - row[c] * pc[k]) // prev
        prev = pc[c]
    return sign * a[-1][-1]


def integer_rows(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[int]], int]:
    """Scale each row to integers; returns (integer rows, product of the scale factors)."""
    out, scale = [], 1
    for row in rows:
        m = math.lcm(*(x.denominator for x in row)) if row else 1
        out.append([x.numerator * (m // x.denominator) for x in row])
        scale *= m
    return out, scale


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank of a (possibly non-square) rational matrix."""
    a = [list(r) for r in rows]
    if not a:
        return 0
    ncols = len(a[0])
    rk = 0
    for c in range(ncols):
        piv = next((r for r in range(rk, len(a)) if a[r][c] != 0), None)
        if piv is None:
            continue
        a[rk], a[piv] = a[piv], a[rk]
        pv = a[rk][c]
        for r in range(rk + 1, len(a)):
            f = a[r][c]
            if f:
                f = f / pv
                for k in range(c, ncols):
                    a[r][k] -= f * a[rk][k]
        rk += 1
        if rk == len(a):
            break
    return rk


def inverse(rows: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Inverse of a square matrix by Gauss-Jordan; raises on singular input."""
    size = len(rows)
    a = [list(r) + [Fraction(int(i == k)) for k in range(size)] for i, r in enumerate(rows)]
    for c in range(size):
        piv = next((r for r in range(c, size) if a[r][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[c], a[piv] = a[piv], a[c]
        pv = a[c][c]
        a[c] = [v / pv for v in a[c]]
        for r in range(size):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [v - f * w for v, w in zip(a[r], a[c])]
    return [row[size:] for row in a]


def matmul(x: Sequence[Sequence[Fraction]], y: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    cols = list(zip(*y))
    return [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols] for row in x]


class ExactMatrix:
    """Immutable matrix of Fractions.

    Column indices in the public API are 1-based, matching the usual
    numbering of Plücker indices; row/column access through ``rows`` is
    0-based like any nested tuple.
    """

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable]):
        data = tuple(tuple(as_fraction(x) for x in row) for row in rows)
        if not data:
            raise ParameterError("a matrix needs at least one row")
        width = len(data[0])
        if width == 0 or any(len(r) != width for r in data):
            raise ParameterError("ragged or empty rows")
        object.__setattr__(self, "rows", data)
        object.__setattr__(self, "nrows", len(data))
        object.__setattr__(self, "ncols", width)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "ExactMatrix":
        return cls([[0] * ncols for _ in range(nrows)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, rc: tuple[int, int]) -> Fraction:
        r, c = rc
        return self.rows[r][c]

    def __eq__(self, other) -> bool:
        return isinstance(other, ExactMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"ExactMatrix([{body}])"

    def column(self, c: int) -> tuple[Fraction, ...]:
        """Column ``c`` (1-based)."""
        return tuple(r[c - 1] for r in self.rows)

    def submatrix(self, cols: Sequence[int]) -> list[list[Fraction]]:
        """Rows restricted to the 1-based columns ``cols`` in the given order."""
        idx = [c - 1 for c in cols]
        return [[r[i] for i in idx] for r in self.rows]

    def rank(self) -> int:
        return rank(self.rows)

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.rows]


class RationalSampler:
    """Seeded source of small rationals: numerator in [-9, 9], denominator in [1, 9]."""

    def __init__(self, seed: int):
        self.seed = seed
        self._rng = random.Random(seed)

    def rational(self, nonzero: bool = False) -> Fraction:
        while True:
            num = self._rng.randint(-9, 9)
            if num or not nonzero:
                return Fraction(num, self._rng.randint(1, 9))

    def matrix(self, nrows: int, ncols: int) -> ExactMatrix:
        return ExactMatrix([[self.rational() for _ in range(ncols)] for _ in range(nrows)])

    def choice(self, seq):
        return self._rng.choice(seq)

    def randint(self, a: int, b: int) -> int:
        return self._rng.randint(a, b)
