"""Exact integer and rational matrix helpers.

Matrices are lists of rows. Nothing here uses floating point.
"""

from fractions import Fraction
from typing import List, Optional, Sequence

from .errors import DimensionMismatchError

IntMatrix = List[List[int]]
Matrix = Sequence[Sequence[int]]


def identity(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(m: Matrix) -> IntMatrix:
    return [list(col) for col in zip(*m)] if m else []


def mat_mul(a: Matrix, b: Matrix) -> IntMatrix:
    if a and b and len(a[0]) != len(b):
        raise DimensionMismatchError(f"cannot multiply {len(a)}x{len(a[0])} by {len(b)}x{len(b[0])}")
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(m: Matrix, v: Sequence[int]) -> List[int]:
    return [sum(x * y for x, y in zip(row, v)) for row in m]


def congruence(gram: Matrix, u: Matrix) -> IntMatrix:
    """Return ``U^T G U``."""
    return mat_mul(transpose(u), mat_mul(gram, u))


def quadratic_value(gram: Matrix, v: Sequence[int]) -> int:
    """``v^T G v`` for an integer matrix."""
    total = 0
    for i, vi in enumerate(v):
        if vi:
            row = gram[i]
            total += vi * sum(row[j] * v[j] for j in range(len(v)))
    return total


def determinant(m: Matrix) -> int:
    """Bareiss fraction-free determinant of an integer matrix."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def psd_rank(m: Matrix) -> Optional[int]:
    """
    Rank of a symmetric matrix if it is positive semidefinite, else None.

    Symmetric elimination on diagonal pivots: a negative pivot, or a zero pivot
    with a nonzero row, certifies indefiniteness.
    """
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    rank = 0
    for k in range(n):
        pivot = a[k][k]
        if pivot < 0:
            return None
        if pivot == 0:
            if any(a[k][j] != 0 for j in range(k + 1, n)):
                return None
            continue
        rank += 1
        for i in range(k + 1, n):
            factor = a[i][k] / pivot
            if factor:
                for j in range(k, n):
                    a[i][j] -= factor * a[k][j]
    return rank


def is_positive_definite(m: Matrix) -> bool:
    return psd_rank(m) == len(m)


def ldl(m: Matrix) -> tuple:
    """
    Exact LDL^T of a positive-definite symmetric matrix.

    Returns ``(L, D)`` where ``L`` is unit lower triangular (as Fractions) and
    ``D`` the list of positive pivots.
    """
    n = len(m)
    lower = [[Fraction(0)] * n for _ in range(n)]
    diag: List[Fraction] = [Fraction(0)] * n
    for j in range(n):
        s = Fraction(m[j][j]) - sum(lower[j][k] ** 2 * diag[k] for k in range(j))
        if s <= 0:
            raise ValueError("matrix is not positive definite")
        diag[j] = s
        lower[j][j] = Fraction(1)
        for i in range(j + 1, n):
            t = Fraction(m[i][j]) - sum(lower[i][k] * lower[j][k] * diag[k] for k in range(j))
            lower[i][j] = t / s
    return lower, diag


def rational_inverse(m: Matrix) -> List[List[Fraction]]:
    """Gauss-Jordan inverse over the rationals."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def unimodular_inverse(u: Matrix) -> IntMatrix:
    """Integer inverse of a matrix with determinant +-1."""
    inv = rational_inverse(u)
    out = []
    for row in inv:
        if any(x.denominator != 1 for x in row):
            raise ValueError("matrix is not unimodular")
        out.append([int(x) for x in row])
    return out


def block_diagonal(a: Matrix, b: Matrix) -> IntMatrix:
    n, k = len(a), len(b)
    out = [[0] * (n + k) for _ in range(n + k)]
    for i in range(n):
        for j in range(n):
            out[i][j] = a[i][j]
    for i in range(k):
        for j in range(k):
            out[n + i][n + j] = b[i][j]
    return out
