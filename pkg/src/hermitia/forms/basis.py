"""Basis extraction from degenerate (redundantly generated) quadratic forms."""

from typing import Tuple

from sympy import Matrix
from sympy.core.intfunc import igcdex

from ..core.errors import FormError
from ..core.linalg import IntMatrix, identity
from .quadratic import QuadraticForm


def _to_ints(m: Matrix) -> IntMatrix:
    return [[int(m[i, j]) for j in range(m.cols)] for i in range(m.rows)]


def column_echelon(matrix: IntMatrix) -> Tuple[IntMatrix, IntMatrix, int]:
    """
    Unimodular column reduction ``M V`` to column echelon form.

    Each nonzero entry right of the pivot is cleared with the 2 x 2 unimodular
    block ``[[s, -b/g], [t, a/g]]`` built from ``s*a + t*b = g``.

    Returns:
        ``(M V, V, r)`` where the first ``r`` columns of ``M V`` are the nonzero ones
        and the trailing columns of ``V`` span the integer kernel of ``M``.
    """
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    if rows == 0 or cols == 0:
        return [list(row) for row in matrix], identity(cols), 0
    a = Matrix(matrix)
    k = Matrix.eye(cols)
    pivot = 0
    for i in range(rows):
        if pivot >= cols:
            break
        for c in range(pivot + 1, cols):
            b = int(a[i, c])
            if b == 0:
                continue
            x = int(a[i, pivot])
            s, t, g = igcdex(x, b)
            d = Matrix([[s, -b // g], [t, x // g]])
            for m in (a, k):
                block = Matrix.hstack(m.col(pivot), m.col(c)) * d
                m[:, pivot] = block.col(0)
                m[:, c] = block.col(1)
        if a[i, pivot] != 0:
            pivot += 1
    return _to_ints(a), _to_ints(k), pivot


def integer_kernel(matrix: IntMatrix) -> IntMatrix:
    """
    Saturated integer kernel basis of ``matrix`` as a list of column vectors.

    Its size always equals the dimension of the rational nullspace.
    """
    _, v, r = column_echelon(matrix)
    cols = len(v)
    kernel = [[v[i][j] for i in range(cols)] for j in range(r, cols)]
    if matrix and len(kernel) != len(Matrix(matrix).nullspace()):
        raise AssertionError("integer kernel disagrees with the rational nullspace")
    return kernel


def extract_basis(form: QuadraticForm) -> Tuple[QuadraticForm, IntMatrix]:
    """
    Nondegenerate form on the lattice spanned by a redundant generating set.

    Returns:
        ``(Q', T)`` with ``T`` an ``n x r`` integer matrix such that ``Q' = Q o T``;
        ``T`` completes with a kernel basis to a unimodular matrix, so ``Q`` and ``Q'``
        represent the same integers.

    Raises:
        FormError: if the form is not positive semidefinite
    """
    if not form.is_positive_semidefinite:
        raise FormError("basis extraction needs a positive semidefinite form")
    n = form.n
    if form.rank == n:
        return form, identity(n)
    _, v, r = column_echelon([list(row) for row in form.gram2])
    t = [row[:r] for row in v]
    return form.transform(t), t
