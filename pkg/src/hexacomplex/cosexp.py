"""The twelve cosexponential component functions of e^(h1 y).

Each variant splits the scalar exponential series into six component
functions by residue of the power mod 6: the polar family keeps every
term positive, the planar family alternates sign with each wrap.  Every
function is computable three independent ways (truncated series, closed
form in cosh/cos, finite 6-term exponential sum), which the test suite
plays against each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import TextIO

from . import _transforms as tr
from .algebra import HexaNumber, Variant

__all__ = [
    "Method",
    "CosexpEvaluation",
    "g6",
    "g6_series",
    "g6_sumform",
    "f6",
    "f6_series",
    "f6_sumform",
    "exp_basis",
    "evaluate",
    "evaluate_all_methods",
    "emit_table",
    "table_grid",
    "SERIES_MAX_TERMS",
]

SERIES_MAX_TERMS = 300
_SERIES_REL_FLOOR = 1e-17


class Method(Enum):
    SERIES = "series"
    CLOSED_FORM = "closed"
    SUM_FORM = "sum"


@dataclass(frozen=True)
class CosexpEvaluation:
    """One evaluation of a cosexponential function, tagged with its route."""

    k: int
    y: float
    value: float
    method: Method


def _check_index(k: int) -> None:
    if not 0 <= k <= 5:
        raise ValueError("cosexponential index must lie in 0..5")


# -- polar family: closed forms ------------------------------------------------

def g6(k: int, y: float) -> float:
    """Polar cosexponential of index k, closed form."""
    _check_index(k)
    ch, sh = math.cosh(y) / 3.0, math.sinh(y) / 3.0
    ch2, sh2 = math.cosh(y / 2.0), math.sinh(y / 2.0)
    c, s = math.cos(tr.SQRT3 * y / 2.0), math.sin(tr.SQRT3 * y / 2.0)
    r3 = tr.SQRT3 / 3.0
    if k == 0:
        return ch + 2.0 / 3.0 * ch2 * c
    if k == 1:
        return sh + sh2 * c / 3.0 + r3 * ch2 * s
    if k == 2:
        return ch - ch2 * c / 3.0 + r3 * sh2 * s
    if k == 3:
        return sh - 2.0 / 3.0 * sh2 * c
    if k == 4:
        return ch - ch2 * c / 3.0 - r3 * sh2 * s
    return sh + sh2 * c / 3.0 - r3 * ch2 * s


# -- planar family: closed forms -----------------------------------------------

def f6(k: int, y: float) -> float:
    """Planar cosexponential of index k, closed form."""
    _check_index(k)
    c1, s1 = math.cos(y) / 3.0, math.sin(y) / 3.0
    ch, sh = math.cosh(tr.SQRT3 * y / 2.0), math.sinh(tr.SQRT3 * y / 2.0)
    c, s = math.cos(y / 2.0), math.sin(y / 2.0)
    r3 = tr.SQRT3 / 3.0
    if k == 0:
        return c1 + 2.0 / 3.0 * ch * c
    if k == 1:
        return s1 + r3 * sh * c + ch * s / 3.0
    if k == 2:
        return -c1 + ch * c / 3.0 + r3 * sh * s
    if k == 3:
        return -s1 + 2.0 / 3.0 * ch * s
    if k == 4:
        return c1 - ch * c / 3.0 + r3 * sh * s
    return s1 - r3 * sh * c + ch * s / 3.0


# -- truncated series ----------------------------------------------------------

def _series(k: int, y: float, max_terms: int, alternating: bool) -> float:
    _check_index(k)
    if max_terms < 1:
        raise ValueError("max_terms must be at least 1")
    term = y ** k / math.factorial(k)
    total = term
    n = k
    for _ in range(max_terms - 1):
        if abs(term) < _SERIES_REL_FLOOR * abs(total) or term == 0.0:
            break
        for _ in range(6):
            n += 1
            term *= y / n
        if alternating:
            term = -term
        total += term
    return total


def g6_series(k: int, y: float, max_terms: int = SERIES_MAX_TERMS) -> float:
    """Polar cosexponential via its power series, truncated."""
    return _series(k, y, max_terms, alternating=False)


def f6_series(k: int, y: float, max_terms: int = SERIES_MAX_TERMS) -> float:
    """Planar cosexponential via its alternating power series, truncated."""
    return _series(k, y, max_terms, alternating=True)


# -- finite exponential sums ---------------------------------------------------

def g6_sumform(k: int, y: float) -> float:
    """Polar cosexponential as the 6-term sum over sixth roots of unity."""
    _check_index(k)
    total = 0.0
    for l in range(6):
        total += (math.exp(y * tr.cos_pi6(2 * l))
                  * math.cos(y * tr.sin_pi6(2 * l) - math.pi * k * l / 3.0))
    return total / 6.0


def f6_sumform(k: int, y: float) -> float:
    """Planar cosexponential as the 6-term sum over odd twelfth roots of unity."""
    _check_index(k)
    total = 0.0
    for l in range(1, 7):
        m = 2 * l - 1
        total += (math.exp(y * tr.cos_pi6(m))
                  * math.cos(y * tr.sin_pi6(m) - math.pi * m * k / 6.0))
    return total / 6.0


# -- evaluation records ----------------------------------------------------------

_DISPATCH = {
    ("g", Method.SERIES): g6_series,
    ("g", Method.CLOSED_FORM): g6,
    ("g", Method.SUM_FORM): g6_sumform,
    ("f", Method.SERIES): f6_series,
    ("f", Method.CLOSED_FORM): f6,
    ("f", Method.SUM_FORM): f6_sumform,
}


def evaluate(family: str, k: int, y: float, method: Method) -> CosexpEvaluation:
    """Evaluate one cosexponential ('g' polar, 'f' planar) by one route."""
    if family not in ("g", "f"):
        raise ValueError("family must be 'g' or 'f'")
    value = _DISPATCH[(family, method)](k, y)
    return CosexpEvaluation(k=k, y=y, value=value, method=method)


def evaluate_all_methods(family: str, k: int, y: float) -> tuple[CosexpEvaluation, ...]:
    return tuple(evaluate(family, k, y, m) for m in Method)


# -- exponentials of basis multiples --------------------------------------------

def exp_basis(variant: Variant, k: int, y: float) -> HexaNumber:
    """e^(h_k y) written through cosexponential components, k = 1..5."""
    if not 1 <= k <= 5:
        raise ValueError("basis index must lie in 1..5")
    if variant.is_planar:
        f = [f6(i, y) for i in range(6)]
        if k == 1:
            comps = (f[0], f[1], f[2], f[3], f[4], f[5])
        elif k == 2:
            g = [g6(i, y) for i in range(6)]
            comps = (g[0] - g[3], 0.0, g[1] - g[4], 0.0, g[2] - g[5], 0.0)
        elif k == 3:
            comps = (f[0] - f[2] + f[4], 0.0, 0.0, f[1] - f[3] + f[5], 0.0, 0.0)
        elif k == 4:
            g = [g6(i, y) for i in range(6)]
            comps = (g[0] + g[3], 0.0, -(g[2] + g[5]), 0.0, g[1] + g[4], 0.0)
        else:
            comps = (f[0], f[5], -f[4], f[3], -f[2], f[1])
        return HexaNumber(variant, comps)

    g = [g6(i, y) for i in range(6)]
    if k == 1:
        comps = (g[0], g[1], g[2], g[3], g[4], g[5])
    elif k == 2:
        comps = (g[0] + g[3], 0.0, g[1] + g[4], 0.0, g[2] + g[5], 0.0)
    elif k == 3:
        comps = (g[0] + g[2] + g[4], 0.0, 0.0, g[1] + g[3] + g[5], 0.0, 0.0)
    elif k == 4:
        comps = (g[0] + g[3], 0.0, g[2] + g[5], 0.0, g[1] + g[4], 0.0)
    else:
        comps = (g[0], g[5], g[4], g[3], g[2], g[1])
    return HexaNumber(variant, comps)


# -- CSV emission -----------------------------------------------------------------

def table_grid(start: float, stop: float, step: float) -> list[float]:
    """Grid points start, start+step, ... up to stop (inclusive, fp-safe)."""
    if step <= 0.0:
        raise ValueError("step must be positive")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [start + i * step for i in range(max(count, 1))]


def emit_table(family: str, start: float, stop: float, step: float, out: TextIO) -> None:
    """Write the cosexponential table as CSV with 17 significant digits."""
    fn = g6 if family == "g" else f6 if family == "f" else None
    if fn is None:
        raise ValueError("family must be 'g' or 'f'")
    out.write("y,c0,c1,c2,c3,c4,c5\n")
    for y in table_grid(start, stop, step):
        values = ",".join(f"{fn(k, y):.17g}" for k in range(6))
        out.write(f"{y:.17g},{values}\n")
