"""Small exact dense linear algebra over the scalar fields.

Matrices are tuples of row tuples of :class:`~hopfconst.scalars.Scalar`.
"""

from __future__ import annotations

from typing import Sequence

from .errors import SingularMatrixError
from .scalars import Field, Scalar

Matrix = tuple[tuple[Scalar, ...], ...]


def matrix(field: Field, rows: Sequence[Sequence]) -> Matrix:
    m = tuple(tuple(field(x) for x in row) for row in rows)
    if m and any(len(r) != len(m[0]) for r in m):
        raise ValueError("ragged matrix")
    return m


def identity(field: Field, n: int) -> Matrix:
    one, zero = field.one, field.zero
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def diagonal(field: Field, entries: Sequence) -> Matrix:
    zero = field.zero
    n = len(entries)
    return tuple(
        tuple(field(entries[i]) if i == j else zero for j in range(n)) for i in range(n)
    )


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a)) if a else a


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if len(a[0]) != len(b):
        raise ValueError("shape mismatch in matmul")
    cols = transpose(b)
    out = []
    for row in a:
        out_row = []
        for col in cols:
            acc = None
            for x, y in zip(row, col):
                if x and y:
                    acc = x * y if acc is None else acc + x * y
            out_row.append(acc if acc is not None else row[0].field.zero)
        out.append(tuple(out_row))
    return tuple(out)


def matvec(a: Matrix, v: Sequence[Scalar]) -> tuple[Scalar, ...]:
    return tuple(_dot(row, v) for row in a)


def _dot(u, v) -> Scalar:
    acc = u[0].field.zero
    for x, y in zip(u, v):
        if x and y:
            acc = acc + x * y
    return acc


def kron(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(x * y for x in ra for y in rb) for ra in a for rb in b
    )


def is_symmetric(a: Matrix) -> bool:
    n = len(a)
    return all(a[i][j] == a[j][i] for i in range(n) for j in range(i + 1, n))


def _row_reduce(a: Matrix):
    """Row echelon form of a copy of ``a``; returns (rows, pivot columns)."""
    rows = [list(r) for r in a]
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(a: Matrix) -> int:
    if not a:
        return 0
    return len(_row_reduce(a)[1])


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("inverse of a non-square matrix")
    field = a[0][0].field
    ident = identity(field, n)
    aug = tuple(tuple(a[i]) + ident[i] for i in range(n))
    rows, pivots = _row_reduce(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return tuple(tuple(rows[i][n:]) for i in range(n))


def is_invertible(a: Matrix) -> bool:
    return rank(a) == len(a)


def format_matrix(a: Matrix) -> str:
    cells = [[x.pretty() for x in row] for row in a]
    width = max((len(c) for row in cells for c in row), default=1)
    return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)
