"""Greedy reduction of positive-definite forms plus signed-permutation canonicalization.

The result is a good representative, not a proven canonical form: two equivalent
forms may reduce differently, so equality of reduced forms is only ever used as a
shortcut before an isometry search.
"""

import itertools
from typing import List, Tuple

from ..core.errors import FormError
from ..core.linalg import IntMatrix, identity, mat_mul
from .quadratic import QuadraticForm, UnimodularMap


def _add_column(g: IntMatrix, u: IntMatrix, target: int, source: int, m: int) -> None:
    """Basis change ``e_target <- e_target + m e_source`` applied to Gram and transform."""
    n = len(g)
    for r in range(n):
        g[r][target] += m * g[r][source]
        u[r][target] += m * u[r][source]
    for c in range(n):
        g[target][c] += m * g[source][c]


def _swap(g: IntMatrix, u: IntMatrix, i: int, j: int) -> None:
    g[i], g[j] = g[j], g[i]
    for row in g:
        row[i], row[j] = row[j], row[i]
    for row in u:
        row[i], row[j] = row[j], row[i]


def _sort_diagonal(g: IntMatrix, u: IntMatrix) -> None:
    n = len(g)
    for i in range(n):
        best = min(range(i, n), key=lambda k: g[k][k])
        if g[best][best] < g[i][i]:
            _swap(g, u, i, best)


def _pair_pass(g: IntMatrix, u: IntMatrix) -> bool:
    """Reduce every basis vector against every not-longer one; True if anything changed."""
    n = len(g)
    changed = False
    for j in range(n):
        for i in range(n):
            if i == j or g[i][i] > g[j][j]:
                continue
            gii, gij = g[i][i], g[i][j]
            # nearest integer to gij / gii
            q = (2 * gij + gii) // (2 * gii)
            if q and q * (q * gii - 2 * gij) < 0:
                _add_column(g, u, j, i, -q)
                changed = True
    return changed


def _triple_pass(g: IntMatrix, u: IntMatrix) -> bool:
    """Try ``e_k <- e_k + s e_i + t e_j`` with signs ``s, t`` for every triple."""
    n = len(g)
    changed = False
    for k in range(n):
        for i, j in itertools.combinations([x for x in range(n) if x != k], 2):
            for s, t in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
                delta = (
                    g[i][i] + g[j][j]
                    + 2 * s * g[k][i] + 2 * t * g[k][j] + 2 * s * t * g[i][j]
                )
                if delta < 0:
                    _add_column(g, u, k, i, s)
                    _add_column(g, u, k, j, t)
                    changed = True
    return changed


def _off_key(c: int) -> int:
    """Order ``0, +1, -1, +2, -2, ...`` on off-diagonal entries."""
    return 2 * abs(c) - 1 if c > 0 else -2 * c


def canonical_key(gram2: Tuple[Tuple[int, ...], ...]) -> Tuple[int, ...]:
    """Sort key: diagonal coefficients ascending, then off-diagonals preferring positive values."""
    n = len(gram2)
    diag = tuple(gram2[i][i] for i in range(n))
    off = tuple(_off_key(gram2[i][j]) for i in range(n) for j in range(i + 1, n))
    return diag + off


def _signed_permutation_minimum(g: IntMatrix) -> Tuple[IntMatrix, IntMatrix]:
    """Best signed permutation among those keeping the diagonal sorted."""
    n = len(g)
    groups: List[List[int]] = []
    for i in range(n):
        if groups and g[groups[-1][0]][groups[-1][0]] == g[i][i]:
            groups[-1].append(i)
        else:
            groups.append([i])
    best_key = None
    best: Tuple[Tuple[int, ...], Tuple[int, ...]] = (tuple(range(n)), (1,) * n)
    group_perms = [list(itertools.permutations(grp)) for grp in groups]
    for choice in itertools.product(*group_perms):
        perm = tuple(i for part in choice for i in part)
        for tail_signs in itertools.product((1, -1), repeat=max(n - 1, 0)):
            signs = (1,) + tail_signs if n else ()
            off = tuple(
                _off_key(signs[a] * signs[b] * g[perm[a]][perm[b]])
                for a in range(n)
                for b in range(a + 1, n)
            )
            if best_key is None or off < best_key:
                best_key = off
                best = (perm, signs)
    perm, signs = best
    p = [[0] * n for _ in range(n)]
    for a in range(n):
        p[perm[a]][a] = signs[a]
    new_g = [[signs[a] * signs[b] * g[perm[a]][perm[b]] for b in range(n)] for a in range(n)]
    return new_g, p


def reduce(form: QuadraticForm) -> Tuple[QuadraticForm, UnimodularMap]:
    """
    Reduce a positive-definite form.

    Returns:
        ``(R, U)`` with ``R = Q o U``

    Raises:
        FormError: if the form is degenerate or indefinite
    """
    if not form.is_positive_definite:
        raise FormError(f"reduction needs a positive definite form: {form}")
    n = form.n
    g = [list(row) for row in form.gram2]
    u = identity(n)
    while True:
        _sort_diagonal(g, u)
        if _pair_pass(g, u):
            continue
        if n >= 3 and _triple_pass(g, u):
            continue
        break
    _sort_diagonal(g, u)
    g, p = _signed_permutation_minimum(g)
    u = mat_mul(u, p)
    reduced = QuadraticForm.from_gram2(g)
    witness = UnimodularMap.of(u)
    if form.transform(witness.matrix).gram2 != reduced.gram2:
        raise AssertionError("reduction witness does not reproduce the reduced form")
    return reduced, witness


def reduced_key(form: QuadraticForm) -> Tuple[int, ...]:
    """Coefficient tuple of the reduced form, used as a dedup key."""
    return reduce(form)[0].coefficient_tuple
