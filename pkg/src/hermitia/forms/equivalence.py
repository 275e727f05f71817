"""Integral equivalence of positive-definite forms by backtracking isometry search."""

import itertools
from collections import Counter
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from ..core.errors import DimensionMismatchError
from ..core.linalg import IntMatrix, mat_mul, mat_vec, transpose
from ..representation.enumerate import representation_counts, short_vectors
from ..utils.logging import get_logger
from .quadratic import QuadraticForm, UnimodularMap, verify_witness
from .reduction import reduce

logger = get_logger(__name__)


class MatchVerdict(str, Enum):
    """Outcome of comparing a computed form with a published one."""

    IDENTICAL = "identical-under-signed-permutation"
    EQUIVALENT = "equivalent"
    DISTINCT = "distinct"


class FormMatch(BaseModel):
    model_config = ConfigDict(frozen=True)

    verdict: MatchVerdict
    witness: Optional[UnimodularMap] = None


def _isometry(source: QuadraticForm, target: QuadraticForm) -> Optional[IntMatrix]:
    """
    Find ``V`` with ``source o V = target`` by choosing the columns of ``V`` among the
    vectors of ``source`` whose values are the diagonal entries of ``target``.
    """
    n = source.n
    g, t = source.gram2, target.gram2
    top = max(t[k][k] // 2 for k in range(n))
    vectors = short_vectors(source, top)
    target_counts = Counter(val for _, val in short_vectors(target, top))
    if Counter(val for _, val in vectors) != target_counts:
        return None

    by_value: Dict[int, List[Tuple[Tuple[int, ...], List[int]]]] = {}
    for vec, val in vectors:
        by_value.setdefault(val, []).append((vec, mat_vec(g, vec)))
    candidates = [by_value.get(t[k][k] // 2, []) for k in range(n)]
    if any(not c for c in candidates):
        return None
    order = sorted(range(n), key=lambda k: len(candidates[k]))
    first = order[0]
    # V and -V are both isometries; keep one
    candidates[first] = [
        (vec, gv) for vec, gv in candidates[first] if next(x for x in vec if x) > 0
    ]

    chosen: Dict[int, Tuple[Tuple[int, ...], List[int]]] = {}

    def search(depth: int) -> bool:
        if depth == n:
            return True
        k = order[depth]
        for vec, gv in candidates[k]:
            ok = True
            for i, (_, gvi) in chosen.items():
                if sum(a * b for a, b in zip(gvi, vec)) != t[i][k]:
                    ok = False
                    break
            if not ok:
                continue
            chosen[k] = (vec, gv)
            if search(depth + 1):
                return True
            del chosen[k]
        return False

    if not search(0):
        return None
    columns = [chosen[k][0] for k in range(n)]
    return transpose(columns)


def is_equivalent(first: QuadraticForm, second: QuadraticForm) -> Optional[UnimodularMap]:
    """
    Decide integral equivalence.

    Returns:
        ``U`` with ``first o U = second``, or None when the forms are inequivalent

    Raises:
        DimensionMismatchError: if the variable counts differ
        FormError: if either form is not positive definite
    """
    if first.n != second.n:
        raise DimensionMismatchError(f"forms have {first.n} and {second.n} variables")
    r1, u1 = reduce(first)
    r2, u2 = reduce(second)
    if r1.determinant != r2.determinant:
        return None
    if r1.gram2 == r2.gram2:
        middle = [[int(i == j) for j in range(first.n)] for i in range(first.n)]
    else:
        found = _isometry(r1, r2)
        if found is None:
            return None
        middle = found
    witness = UnimodularMap.of(mat_mul(mat_mul(u1.matrix, middle), u2.inverse().matrix))
    if not verify_witness(first, second, witness):
        raise AssertionError("equivalence witness failed exact verification")
    return witness


def _signed_permutation_match(form: QuadraticForm, target: QuadraticForm) -> Optional[UnimodularMap]:
    n = form.n
    g, t = form.gram2, target.gram2
    for perm in itertools.permutations(range(n)):
        if any(g[perm[a]][perm[a]] != t[a][a] for a in range(n)):
            continue
        for tail in itertools.product((1, -1), repeat=max(n - 1, 0)):
            signs = (1,) + tail
            if all(
                signs[a] * signs[b] * g[perm[a]][perm[b]] == t[a][b]
                for a in range(n)
                for b in range(a + 1, n)
            ):
                p = [[0] * n for _ in range(n)]
                for a in range(n):
                    p[perm[a]][a] = signs[a]
                return UnimodularMap.of(p)
    return None


def match_paper_form(form: QuadraticForm, target: QuadraticForm) -> FormMatch:
    """
    Compare a computed form with a published one: exact up to signed variable
    permutation first, then integral equivalence.
    """
    if form.n != target.n:
        return FormMatch(verdict=MatchVerdict.DISTINCT)
    if form.n == 0:
        return FormMatch(verdict=MatchVerdict.IDENTICAL, witness=UnimodularMap.identity(0))
    witness = _signed_permutation_match(form, target)
    if witness is not None:
        return FormMatch(verdict=MatchVerdict.IDENTICAL, witness=witness)
    if not (form.is_positive_definite and target.is_positive_definite):
        return FormMatch(verdict=MatchVerdict.DISTINCT)
    witness = is_equivalent(form, target)
    if witness is not None:
        return FormMatch(verdict=MatchVerdict.EQUIVALENT, witness=witness)
    return FormMatch(verdict=MatchVerdict.DISTINCT)


def theta_signature(form: QuadraticForm, bound: int) -> Tuple[int, ...]:
    """``(det 2A, r(1), ..., r(bound))``: equal for equivalent forms."""
    return (form.determinant,) + tuple(representation_counts(form, bound)[1:])


def distinct_classes(forms: Sequence[QuadraticForm]) -> List[int]:
    """Index of the first equivalent form for each input (classes by first occurrence)."""
    reps: List[int] = []
    out: List[int] = []
    for idx, form in enumerate(forms):
        for r in reps:
            if forms[r].n == form.n and is_equivalent(forms[r], form) is not None:
                out.append(r)
                break
        else:
            reps.append(idx)
            out.append(idx)
    return out
