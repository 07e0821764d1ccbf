"""Numerical differentiation and contour integration over the 6-dimensional rings.

Derivatives of analytic functions are direction independent and lock the
36 first partials of the component functions into six equality chains
(with a sign twist on the planar wrap); both facts are checked here by
central finite differences.  Line integrals run over sampled polyline
paths with midpoint quadrature; closed loops pick up 2*pi residues from
the canonical planes only, weighted by per-plane winding numbers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

from .algebra import HexaNumber, Variant, canonical_components
from .canonical import canonical_basis, rotated_coords
from .errors import DegeneratePathError, DomainError
from . import _transforms as tr
from . import elementary

__all__ = [
    "Path",
    "FunctionUnderTest",
    "FUNCTIONS",
    "CRReport",
    "ResidueComparison",
    "directional_derivative",
    "cr_check",
    "line_integral",
    "winding_number",
    "residue_integral",
    "circle_path",
]

_FIRST_ORDER_STEP = 1e-5
_SECOND_ORDER_STEP = 1e-4
_PATH_CLEARANCE = 1e-6
_PROJECTION_CLEARANCE = 1e-9

Evaluator = Callable[[HexaNumber], HexaNumber]


@dataclass(frozen=True)
class Path:
    """Sampled polyline path; closed paths repeat the first sample last."""

    variant: Variant
    samples: tuple[HexaNumber, ...]
    closed: bool

    def __init__(self, variant: Variant, samples: Iterable[HexaNumber], closed: bool):
        samples = tuple(samples)
        if len(samples) < 3:
            raise ValueError("a path needs at least three samples")
        for s in samples:
            if s.variant is not variant:
                raise ValueError("path sample variant mismatch")
        if closed and samples[0] != samples[-1]:
            raise ValueError("closed paths must repeat the first sample exactly")
        object.__setattr__(self, "variant", variant)
        object.__setattr__(self, "samples", samples)
        object.__setattr__(self, "closed", closed)

    def segments(self):
        return zip(self.samples[:-1], self.samples[1:])

    def length(self) -> float:
        return sum((b - a).modulus() for a, b in self.segments())

    def to_text(self) -> str:
        lines = [f"{self.variant.value} {len(self.samples)} {int(self.closed)}"]
        for s in self.samples:
            lines.append(" ".join(f"{c:.17g}" for c in s.components))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Path":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty path serialization")
        head = lines[0].split()
        if len(head) != 3:
            raise ValueError("path header must be 'variant N closed'")
        variant = Variant.parse(head[0])
        count = int(head[1])
        closed = bool(int(head[2]))
        if len(lines) - 1 != count:
            raise ValueError(f"expected {count} samples, found {len(lines) - 1}")
        samples = [HexaNumber(variant, [float(v) for v in ln.split()]) for ln in lines[1:]]
        return cls(variant, samples, closed)


def circle_path(variant: Variant, center: HexaNumber, radii: Mapping[int, float] | float,
                samples: int, plane: int | None = None) -> Path:
    """Closed loop tracing circles in one or more canonical planes.

    ``radii`` is either a mapping plane->radius or a single radius for
    ``plane``.  The projections onto the chosen (xi_k, eta_k) planes are
    circles around the projections of ``center``; every other rotated
    coordinate stays constant.
    """
    if isinstance(radii, (int, float)):
        if plane is None:
            raise ValueError("plane index required with a scalar radius")
        radii = {plane: float(radii)}
    if samples < 8:
        raise ValueError("need at least 8 samples for a circle")
    rows = tr.rotation_rows(variant.is_planar)
    offset = 0 if variant.is_planar else 2
    directions = {}
    for k, radius in radii.items():
        if not 1 <= k <= tr.pair_count(variant.is_planar):
            raise ValueError(f"plane index {k} out of range")
        xi_row = rows[offset + 2 * (k - 1)]
        eta_row = rows[offset + 2 * (k - 1) + 1]
        directions[k] = (HexaNumber(variant, xi_row), HexaNumber(variant, eta_row), radius)
    points = []
    for i in range(samples):
        t = 2.0 * math.pi * i / samples
        u = center
        for xi_vec, eta_vec, radius in directions.values():
            u = u + xi_vec * (radius * math.cos(t)) + eta_vec * (radius * math.sin(t))
        points.append(u)
    points.append(points[0])
    return Path(variant, points, closed=True)


@dataclass(frozen=True)
class FunctionUnderTest:
    """A deterministic map u -> f(u) with a note on where it is regular."""

    name: str
    evaluator: Evaluator
    domain: str = "entire"

    def __call__(self, u: HexaNumber) -> HexaNumber:
        return self.evaluator(u)


def _fn_one(u: HexaNumber) -> HexaNumber:
    return HexaNumber.one(u.variant)


FUNCTIONS: dict[str, FunctionUnderTest] = {
    "one": FunctionUnderTest("one", _fn_one),
    "u": FunctionUnderTest("u", lambda u: u),
    "u2": FunctionUnderTest("u2", lambda u: u * u),
    "u3": FunctionUnderTest("u3", lambda u: u * u * u),
    "exp": FunctionUnderTest("exp", elementary.exp),
    "sin": FunctionUnderTest("sin", elementary.sin),
    "cos": FunctionUnderTest("cos", elementary.cos),
    "sinh": FunctionUnderTest("sinh", elementary.sinh),
    "cosh": FunctionUnderTest("cosh", elementary.cosh),
}


def directional_derivative(f: Evaluator, u0: HexaNumber, direction: HexaNumber) -> HexaNumber:
    """Central-difference derivative of f at u0 along an invertible direction.

    For analytic f the result does not depend on the direction.  The
    quotient needs the direction to be invertible; zero-divisor directions
    raise :class:`DomainError`.
    """
    if u0.variant is not direction.variant:
        raise DomainError("direction and base point variants differ")
    try:
        direction.inverse()
    except Exception as exc:
        raise DomainError(f"derivative quotient undefined along this direction: {exc}") from exc
    h = _FIRST_ORDER_STEP * (1.0 + u0.modulus()) / max(direction.modulus(), 1e-30)
    du = direction * h
    numerator = f(u0 + du) - f(u0 - du)
    return numerator * (du * 2.0).inverse()


@dataclass(frozen=True)
class CRReport:
    """Spreads of the finite-difference partial-derivative chains.

    ``first_order[c]`` is the spread within chain c of the six equal first
    partials; ``second_order[k][lam]`` the spread of the mixed second
    partials of component k along diagonal lam.
    """

    variant: Variant
    first_order: tuple[float, ...]
    second_order: tuple[tuple[float, ...], ...]

    @property
    def max_first_order(self) -> float:
        return max(self.first_order)

    @property
    def max_second_order(self) -> float:
        return max(max(row) for row in self.second_order)

    @property
    def max_residual(self) -> float:
        return max(self.max_first_order, self.max_second_order)


def _shift(u: HexaNumber, p: int, h: float) -> HexaNumber:
    comps = list(u.components)
    comps[p] += h
    return HexaNumber(u.variant, comps)


def cr_check(f: Evaluator, u0: HexaNumber) -> CRReport:
    """Check the component-derivative equality chains of an analytic f at u0."""
    variant = u0.variant
    planar = variant.is_planar
    h1 = _FIRST_ORDER_STEP
    plus = [f(_shift(u0, p, h1)) for p in range(6)]
    minus = [f(_shift(u0, p, -h1)) for p in range(6)]
    jac = [[(plus[p][k] - minus[p][k]) / (2.0 * h1) for p in range(6)] for k in range(6)]
    # jac[k][p] = d P_k / d x_p

    first_order = []
    for c in range(6):
        values = []
        for p in range(6):
            s = c + p
            sign = -1.0 if planar and s >= 6 else 1.0
            values.append(sign * jac[(s) % 6][p])
        first_order.append(max(values) - min(values))

    h2 = _SECOND_ORDER_STEP
    base = f(u0)
    mixed: dict[tuple[int, int], tuple[float, ...]] = {}
    for a in range(6):
        for b in range(a, 6):
            if a == b:
                fp = f(_shift(u0, a, h2))
                fm = f(_shift(u0, a, -h2))
                mixed[(a, a)] = tuple((fp[k] - 2.0 * base[k] + fm[k]) / (h2 * h2)
                                      for k in range(6))
            else:
                fpp = f(_shift(_shift(u0, a, h2), b, h2))
                fpm = f(_shift(_shift(u0, a, h2), b, -h2))
                fmp = f(_shift(_shift(u0, a, -h2), b, h2))
                fmm = f(_shift(_shift(u0, a, -h2), b, -h2))
                mixed[(a, b)] = tuple((fpp[k] - fpm[k] - fmp[k] + fmm[k]) / (4.0 * h2 * h2)
                                      for k in range(6))

    second_order = []
    for k in range(6):
        row = []
        for lam in range(6):
            values = []
            for a in range(6):
                for b in range(a, 6):
                    s = a + b
                    if s % 6 != lam:
                        continue
                    sign = -1.0 if planar and s >= 6 else 1.0
                    values.append(sign * mixed[(a, b)][k])
            row.append(max(values) - min(values) if len(values) > 1 else 0.0)
        second_order.append(tuple(row))

    return CRReport(variant=variant, first_order=tuple(first_order),
                    second_order=tuple(second_order))


def line_integral(f: Evaluator, path: Path) -> HexaNumber:
    """Midpoint-rule integral of f along the sampled polyline."""
    total = HexaNumber.zero(path.variant)
    for a, b in path.segments():
        mid = (a + b) * 0.5
        total = total + f(mid) * (b - a)
    return total


def winding_number(path: Path, u0: HexaNumber, plane: int) -> int:
    """Turns of the path's projection onto plane ``plane`` around u0's projection.

    Requires a closed path whose projection keeps a positive clearance
    from the projected point; otherwise :class:`DegeneratePathError`.
    """
    if not path.closed:
        raise ValueError("winding numbers need a closed path")
    if u0.variant is not path.variant:
        raise ValueError("point and path variants differ")
    cx, cy = rotated_coords(u0).plane(plane)
    total = 0.0
    prev = None
    for s in path.samples:
        x, y = rotated_coords(s).plane(plane)
        dx, dy = x - cx, y - cy
        if math.hypot(dx, dy) < _PROJECTION_CLEARANCE:
            raise DegeneratePathError(
                f"projected path touches the projected point in plane {plane}")
        angle = math.atan2(dy, dx)
        if prev is not None:
            delta = angle - prev
            while delta > math.pi:
                delta -= 2.0 * math.pi
            while delta < -math.pi:
                delta += 2.0 * math.pi
            total += delta
        prev = angle
    return round(total / (2.0 * math.pi))


@dataclass(frozen=True)
class ResidueComparison:
    """Numeric contour integral of f(u)/(u - u0) against the residue formula."""

    numeric: HexaNumber
    formula: HexaNumber
    windings: tuple[int, ...]

    @property
    def max_abs_difference(self) -> float:
        return max(abs(a - b) for a, b in zip(self.numeric.components,
                                              self.formula.components))


def residue_integral(f: Evaluator, path: Path, u0: HexaNumber) -> ResidueComparison:
    """Integrate f(u)/(u - u0) around a closed path and compare with 2*pi residues.

    Every canonical component of u(t) - u0 must stay at least 1e-6 away
    from zero along the sampled path; otherwise the quotient approaches
    the non-invertible set and :class:`DegeneratePathError` is raised.
    """
    if not path.closed:
        raise ValueError("residue integrals need a closed path")
    variant = path.variant
    planar = variant.is_planar
    for s in path.samples:
        comps = canonical_components(s - u0)
        idx = 0
        if not planar:
            for label in ("v+", "v-"):
                if abs(comps[idx]) < _PATH_CLEARANCE:
                    raise DegeneratePathError(
                        f"path canonical component {label} comes within {_PATH_CLEARANCE} of zero")
                idx += 1
        for k in range(1, tr.pair_count(planar) + 1):
            if math.hypot(comps[idx], comps[idx + 1]) < _PATH_CLEARANCE:
                raise DegeneratePathError(
                    f"path canonical component pair{k} comes within {_PATH_CLEARANCE} of zero")
            idx += 2

    def integrand(u: HexaNumber) -> HexaNumber:
        return f(u) * (u - u0).inverse()

    numeric = line_integral(integrand, path)
    basis = canonical_basis(variant)
    tilde_offset = 1 if planar else 3
    windings = tuple(winding_number(path, u0, k)
                     for k in range(1, tr.pair_count(planar) + 1))
    weight = HexaNumber.zero(variant)
    for k, w in enumerate(windings, start=1):
        tilde = basis[tilde_offset + 2 * (k - 1)]
        weight = weight + tilde * float(w)
    formula = f(u0) * weight * (2.0 * math.pi)
    return ResidueComparison(numeric=numeric, formula=formula, windings=windings)
