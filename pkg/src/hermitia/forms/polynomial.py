"""Polynomial text for quadratic forms.

Canonical text uses ``c*xi^2`` and ``c*xi*xj`` over ``x1..xn``; pretty text uses the
aliases ``x | x,y | x,y,z | w,x,y,z`` by arity and omits unit coefficients.
"""

import re
from typing import Dict, List, Optional, Tuple

from ..core.errors import ParseError
from .quadratic import QuadraticForm

ALIASES: Dict[int, Tuple[str, ...]] = {
    1: ("x",),
    2: ("x", "y"),
    3: ("x", "y", "z"),
    4: ("w", "x", "y", "z"),
}

_INDEXED_TERM = re.compile(r"([+-]?)(\d*)\*?x(\d+)(?:\^2|\*?x(\d+))")
_ALIAS_TERM = re.compile(r"([+-]?)(\d*)\*?([wxyz])(?:\^2|\*?([wxyz]))")
_LINEAR_TERM = re.compile(r"[+-]?\d*\*?(?:x\d+|[wxyz])")


def _join(terms: List[Tuple[int, str]]) -> str:
    if not terms:
        return "0"
    parts = []
    for k, (c, body) in enumerate(terms):
        sign = "-" if c < 0 else ("+" if k else "")
        parts.append(f"{sign}{body}")
    return "".join(parts)


def format_canonical(form: QuadraticForm) -> str:
    """``1*x1^2+1*x1*x2+2*x2^2``; the zero form prints as ``0``."""
    terms = []
    for (i, j), c in form.coefficients.items():
        body = f"{abs(c)}*x{i + 1}^2" if i == j else f"{abs(c)}*x{i + 1}*x{j + 1}"
        terms.append((c, body))
    return _join(terms)


def format_pretty(form: QuadraticForm) -> str:
    """``w^2+wx+2x^2`` style, falling back to indexed names beyond four variables."""
    names = ALIASES.get(form.n)
    if names is None:
        names = tuple(f"x{i + 1}" for i in range(form.n))
    terms = []
    for (i, j), c in form.coefficients.items():
        coeff = "" if abs(c) == 1 else str(abs(c))
        if i == j:
            body = f"{coeff}{names[i]}^2"
        elif len(names[i]) == 1 and len(names[j]) == 1:
            body = f"{coeff}{names[i]}{names[j]}"
        else:
            body = f"{coeff}{names[i]}*{names[j]}"
        terms.append((c, body))
    return _join(terms)


def _alias_arity(letters: set) -> int:
    for n in (1, 2, 3, 4):
        if letters <= set(ALIASES[n]):
            return n
    return 4


def parse_form(text: str, n: Optional[int] = None) -> QuadraticForm:
    """
    Parse canonical or pretty polynomial text.

    Args:
        text: e.g. ``w^2+wx+2x^2``, ``1*x1^2-3*x1*x2+x2^2``
        n: variable count override (default: inferred from aliases or largest index)

    Raises:
        ParseError: on malformed text or variables outside ``n``
    """
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty polynomial")
    if s == "0":
        return QuadraticForm.zero(n or 0)
    indexed = re.search(r"x\d", s) is not None
    pattern = _INDEXED_TERM if indexed else _ALIAS_TERM
    raw: List[Tuple[int, str, str]] = []
    pos = 0
    while pos < len(s):
        match = pattern.match(s, pos)
        if match is None or match.end() == pos:
            term = re.match(r"[+-]?[^+-]*", s[pos:]).group()
            if _LINEAR_TERM.fullmatch(term):
                raise ParseError(f"linear term {term!r}: every term needs ^2 or a second variable")
            raise ParseError(f"malformed polynomial near {s[pos:]!r}")
        sign, digits, first, second = match.groups()
        if pos > 0 and not sign:
            raise ParseError(f"missing operator near {s[pos:]!r}")
        c = int(digits) if digits else 1
        raw.append((-c if sign == "-" else c, first, second or first))
        pos = match.end()

    if indexed:
        largest = max(max(int(a), int(b)) for _, a, b in raw)
        if any(int(a) < 1 or int(b) < 1 for _, a, b in raw):
            raise ParseError("variable indices start at x1")
        arity = n if n is not None else largest
        if largest > arity:
            raise ParseError(f"variable x{largest} outside {arity} variables")
        index = {str(k + 1): k for k in range(arity)}
    else:
        letters = {a for _, a, _ in raw} | {b for _, _, b in raw}
        arity = n if n is not None else _alias_arity(letters)
        names = ALIASES.get(arity)
        if names is None or not letters <= set(names):
            raise ParseError(f"variables {sorted(letters)} do not fit {arity} aliased variables")
        index = {name: k for k, name in enumerate(names)}

    coeffs: Dict[Tuple[int, int], int] = {}
    for c, a, b in raw:
        i, j = sorted((index[a], index[b]))
        coeffs[(i, j)] = coeffs.get((i, j), 0) + c
    return QuadraticForm.from_coefficients(arity, coeffs)
