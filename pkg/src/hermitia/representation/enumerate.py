"""Complete lattice-point enumeration for positive-definite quadratic forms.

Outer coordinates ``x_{n-1} .. x_2`` are bounded with an exact rational ``LDL^T``
decomposition of the doubled Gram (Fincke-Pohst). Once they are fixed, the range of
``x_1`` and then of ``x_0`` is the solution set of an integer quadratic inequality,
solved with ``isqrt`` and checked exactly; the ``x_0`` sweep is evaluated with numpy.

Only one of each pair ``+-v`` is visited: the first nonzero coordinate in the order
``x_{n-1}, ..., x_0`` is positive.
"""

import itertools
import math
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from ..core.errors import FormError
from ..core.linalg import ldl
from ..forms.basis import extract_basis
from ..forms.quadratic import QuadraticForm
from ..utils.logging import get_logger

logger = get_logger(__name__)

TRUANT_WINDOWS = (32, 64, 128, 256, 512, 1024)


class RepresentationWitness(BaseModel):
    """Integer vector attaining ``t``."""

    model_config = ConfigDict(frozen=True)

    t: int
    vector: Tuple[int, ...]


def _quad_range(a: int, b: int, c: int, bound: int) -> Tuple[int, int]:
    """Integers ``x`` with ``a x^2 + b x + c <= bound`` (``a > 0``); empty when ``lo > hi``."""
    disc = b * b - 4 * a * (c - bound)
    if disc < 0:
        return 1, 0
    s = math.isqrt(disc)

    def f(x: int) -> int:
        return (a * x + b) * x + c

    lo = (-b - s) // (2 * a)
    while f(lo) > bound:
        lo += 1
    while f(lo - 1) <= bound:
        lo -= 1
    hi = (-b + s) // (2 * a)
    while f(hi + 1) <= bound:
        hi += 1
    while hi >= lo and f(hi) > bound:
        hi -= 1
    return lo, hi


def _fraction_range(center: Fraction, budget: Fraction, d: Fraction) -> Tuple[int, int]:
    """Integers ``x`` with ``d (x - center)^2 <= budget``."""
    if budget < 0:
        return 1, 0
    radius2 = budget / d
    s = math.isqrt(radius2.numerator // radius2.denominator)
    hi = math.floor(center) + s
    while (hi + 1 - center) ** 2 <= radius2:
        hi += 1
    while (hi - center) ** 2 > radius2:
        hi -= 1
    lo = math.ceil(center) - s
    while (lo - 1 - center) ** 2 <= radius2:
        lo -= 1
    while lo <= hi and (lo - center) ** 2 > radius2:
        lo += 1
    return lo, hi


def _by_size(lo: int, hi: int) -> List[int]:
    """``0, 1, -1, 2, -2, ...`` restricted to ``[lo, hi]``."""
    return sorted(range(lo, hi + 1), key=lambda v: (abs(v), v < 0))


# (tail, lo, hi, a, b, c): tail = (x_1, ..., x_{n-1}); value(x_0, tail) = a x_0^2 + b x_0 + c
Block = Tuple[Tuple[int, ...], int, int, int, int, int]


class _Sweep:
    """Precomputed decomposition of one positive-definite form."""

    def __init__(self, form: QuadraticForm) -> None:
        if not form.is_positive_definite:
            raise FormError(f"enumeration needs a positive definite form: {form}")
        self.n = form.n
        self.g = [list(row) for row in form.gram2]
        if self.n > 2:
            lower, diag = ldl(self.g)
            self.mu = [[lower[j][i] for j in range(self.n)] for i in range(self.n)]
            self.d = diag

    def blocks(self, bound: int, ordered: bool = False) -> Iterator[Block]:
        """All ``x_0`` runs with value ``<= bound`` in the half-space of the search."""
        if bound < 0 or self.n == 0:
            return
        tail = [0] * self.n
        if self.n > 2:
            yield from self._outer(self.n - 1, Fraction(2 * bound), bound, True, tail, ordered)
        else:
            yield from self._inner(bound, True, tail, ordered)

    def _outer(
        self,
        level: int,
        budget: Fraction,
        bound: int,
        all_zero: bool,
        x: List[int],
        ordered: bool,
    ) -> Iterator[Block]:
        center = -sum((self.mu[level][j] * x[j] for j in range(level + 1, self.n)), Fraction(0))
        lo, hi = _fraction_range(center, budget, self.d[level])
        if all_zero:
            lo = max(lo, 0)
        values = _by_size(lo, hi) if ordered else range(lo, hi + 1)
        for v in values:
            x[level] = v
            rest = budget - self.d[level] * (v - center) ** 2
            if level > 2:
                yield from self._outer(level - 1, rest, bound, all_zero and v == 0, x, ordered)
            else:
                yield from self._inner(bound, all_zero and v == 0, x, ordered)
        x[level] = 0

    def _inner(self, bound: int, all_zero: bool, x: List[int], ordered: bool) -> Iterator[Block]:
        g, n = self.g, self.n
        a = g[0][0] // 2
        if n == 1:
            lo, hi = _quad_range(a, 0, 0, bound)
            yield (), max(lo, 0), hi, a, 0, 0
            return
        # fixed part r = (x_2, ..., x_{n-1})
        p0 = sum(g[0][j] * x[j] for j in range(2, n))
        p1 = sum(g[1][j] * x[j] for j in range(2, n))
        q2 = sum(g[i][j] * x[i] * x[j] for i in range(2, n) for j in range(2, n))
        q = q2 // 2
        a1 = g[1][1] // 2
        # min over real x_0 is <= bound  <=>  4a c(x_1) - b(x_1)^2 <= 4a bound
        lo1, hi1 = _quad_range(
            g[0][0] * g[1][1] - g[0][1] ** 2,
            4 * a * p1 - 2 * g[0][1] * p0,
            4 * a * q - p0 * p0,
            4 * a * bound,
        )
        if all_zero:
            lo1 = max(lo1, 0)
        values = _by_size(lo1, hi1) if ordered else range(lo1, hi1 + 1)
        for x1 in values:
            b = g[0][1] * x1 + p0
            c = a1 * x1 * x1 + p1 * x1 + q
            lo, hi = _quad_range(a, b, c, bound)
            if all_zero and x1 == 0:
                lo = max(lo, 0)
            if lo <= hi:
                yield (x1,) + tuple(x[2:]), lo, hi, a, b, c


def _values(block: Block) -> Tuple[np.ndarray, np.ndarray]:
    _, lo, hi, a, b, c = block
    xs = np.arange(lo, hi + 1, dtype=np.int64)
    return xs, (a * xs + b) * xs + c


def _require_bound(bound: int) -> None:
    if bound < 0:
        raise FormError(f"value bound must be non-negative, got {bound}")


def represents(form: QuadraticForm, t: int) -> Optional[RepresentationWitness]:
    """
    Find an integer vector with ``Q(v) = t``.

    The search is complete. Outer coordinates are tried in the order ``0, 1, -1, 2, ...``
    and the larger root for ``x_0`` first, so the witness is deterministic.

    Raises:
        FormError: if the form is not positive definite
    """
    sweep = _Sweep(form)
    if t < 0:
        return None
    if t == 0:
        return RepresentationWitness(t=0, vector=tuple([0] * form.n))
    for tail, lo, hi, a, b, c in sweep.blocks(t, ordered=True):
        disc = b * b - 4 * a * (c - t)
        if disc < 0:
            continue
        s = math.isqrt(disc)
        if s * s != disc:
            continue
        for num in (-b + s, -b - s):
            if num % (2 * a) == 0:
                x0 = num // (2 * a)
                if lo <= x0 <= hi:
                    vector = (x0,) + tail
                    if form.value(vector) != t:
                        raise AssertionError(f"witness {vector} does not evaluate to {t}")
                    return RepresentationWitness(t=t, vector=vector)
    return None


def represented_set(form: QuadraticForm, bound: int) -> np.ndarray:
    """
    Boolean mask of length ``bound + 1``: ``mask[t]`` is True iff ``Q`` represents ``t``.

    Index 0 is always True (zero vector).
    """
    _require_bound(bound)
    sweep = _Sweep(form)
    mask = np.zeros(bound + 1, dtype=bool)
    mask[0] = True
    for block in sweep.blocks(bound):
        _, vals = _values(block)
        mask[vals] = True
    return mask


def represented_values(form: QuadraticForm, bound: int) -> List[int]:
    """Sorted list of ``t`` in ``1..bound`` represented by ``Q``."""
    mask = represented_set(form, bound)
    return [int(t) for t in np.nonzero(mask[1:])[0] + 1]


def representation_counts(form: QuadraticForm, bound: int) -> List[int]:
    """Representation numbers ``r_Q(t)`` for ``t = 0..bound`` (both signs counted)."""
    _require_bound(bound)
    sweep = _Sweep(form)
    counts = np.zeros(bound + 1, dtype=np.int64)
    for block in sweep.blocks(bound):
        _, vals = _values(block)
        counts += np.bincount(vals, minlength=bound + 1)[: bound + 1]
    counts[0] = 0
    counts *= 2
    counts[0] = 1
    return [int(c) for c in counts]


def short_vectors(form: QuadraticForm, bound: int) -> List[Tuple[Tuple[int, ...], int]]:
    """
    All nonzero vectors with value ``<= bound`` as ``(vector, value)``, both signs,
    sorted by value then vector.
    """
    sweep = _Sweep(form)
    out: List[Tuple[Tuple[int, ...], int]] = []
    for block in sweep.blocks(bound):
        tail = block[0]
        xs, vals = _values(block)
        for x0, val in zip(xs.tolist(), vals.tolist()):
            if val == 0:
                continue
            vec = (x0,) + tail
            out.append((vec, val))
            out.append((tuple(-v for v in vec), val))
    out.sort(key=lambda item: (item[1], item[0]))
    return out


def truant(form: QuadraticForm, cap: int) -> Optional[int]:
    """
    Smallest ``t`` in ``1..cap`` not represented, or None when everything up to ``cap``
    is represented (exhausted; never a universality claim).

    Degenerate positive semidefinite forms are reduced to a basis first.
    """
    if cap < 1:
        raise FormError("truant cap must be positive")
    if form.n == 0:
        return 1
    if not form.is_positive_definite:
        form, _ = extract_basis(form)
        if form.n == 0:
            return 1
    windows = [w for w in TRUANT_WINDOWS if w < cap] + [cap]
    for window in windows:
        mask = represented_set(form, window)
        missing = np.nonzero(~mask[1:])[0]
        if missing.size:
            return int(missing[0]) + 1
    logger.debug(f"No truant up to {cap} for {form}")
    return None


def naive_represents(form: QuadraticForm, t: int, radius: int) -> bool:
    """Brute-force box search over ``|x_i| <= radius``."""
    for vec in itertools.product(range(-radius, radius + 1), repeat=form.n):
        if form.value(vec) == t:
            return True
    return False


def check_witness(form: QuadraticForm, witness: RepresentationWitness) -> bool:
    return len(witness.vector) == form.n and form.value(witness.vector) == witness.t
