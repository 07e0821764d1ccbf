"""Elementary transcendental functions of a 6-dimensional hypercomplex variable.

Every function here acts through the canonical decomposition: the real
axes (polar v+, v-) receive the scalar function, each canonical plane
receives the complex function of vk + i vk~, and the result maps back.
That componentwise action defines exp, ln, powers and the circular and
hyperbolic functions here, and it makes each identity reduce to its
scalar counterpart.  Power series evaluate through the same
rearrangement, with per-component convergence-radius estimates.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Sequence

from . import _transforms as tr
from .algebra import (
    ZERO_COMPONENT_RTOL,
    HexaNumber,
    Variant,
    canonical_components,
    from_canonical_components,
)
from .errors import DomainError, ZeroDivisorError

__all__ = [
    "exp",
    "ln",
    "pow_real",
    "cos",
    "sin",
    "cosh",
    "sinh",
    "SeriesCoefficients",
    "RadiusEstimate",
    "ConvergenceReport",
    "eval_series",
]

TWO_PI = 2.0 * math.pi


def _apply(u: HexaNumber,
           axis_fn: Callable[[float], float],
           plane_fn: Callable[[complex], complex]) -> HexaNumber:
    comps = canonical_components(u)
    planar = u.variant.is_planar
    out: list[float] = []
    idx = 0
    if not planar:
        out.append(axis_fn(comps[0]))
        out.append(axis_fn(comps[1]))
        idx = 2
    while idx < 6:
        w = plane_fn(complex(comps[idx], comps[idx + 1]))
        out.append(w.real)
        out.append(w.imag)
        idx += 2
    return from_canonical_components(u.variant, out)


def exp(u: HexaNumber) -> HexaNumber:
    """Componentwise exponential; entire on both variants."""
    return _apply(u, math.exp, cmath.exp)


def cos(u: HexaNumber) -> HexaNumber:
    return _apply(u, math.cos, cmath.cos)


def sin(u: HexaNumber) -> HexaNumber:
    return _apply(u, math.sin, cmath.sin)


def cosh(u: HexaNumber) -> HexaNumber:
    return _apply(u, math.cosh, cmath.cosh)


def sinh(u: HexaNumber) -> HexaNumber:
    return _apply(u, math.sinh, cmath.sinh)


def _ln_preconditions(u: HexaNumber) -> tuple[tuple[float, ...], float]:
    comps = canonical_components(u)
    threshold = ZERO_COMPONENT_RTOL * u.modulus()
    if not u.variant.is_planar:
        if comps[0] <= threshold:
            raise DomainError("logarithm undefined: v+ is not positive", component="v+")
        if comps[1] <= threshold:
            raise DomainError("logarithm undefined: v- is not positive", component="v-")
    offset = 0 if u.variant.is_planar else 2
    for k in range(1, tr.pair_count(u.variant.is_planar) + 1):
        i = offset + 2 * (k - 1)
        if math.hypot(comps[i], comps[i + 1]) <= threshold:
            raise DomainError(f"logarithm undefined: plane radius rho{k} vanishes",
                              component=f"pair{k}")
    return comps, threshold


def _principal_log(z: complex) -> complex:
    return complex(math.log(abs(z)), cmath.phase(z) % TWO_PI)


def ln(u: HexaNumber) -> HexaNumber:
    """Principal logarithm with plane azimuths taken in [0, 2*pi).

    Polar values need v+ > 0 and v- > 0; every plane radius must be
    positive on both variants.  exp(ln(u)) == u on that domain; the
    reverse composition is the identity only when every azimuth of the
    argument already lies in [0, 2*pi).
    """
    _ln_preconditions(u)
    return _apply(u, math.log, _principal_log)


def pow_real(u: HexaNumber, m: float) -> HexaNumber:
    """Real power through the canonical decomposition.

    Integer exponents act on every element whose relevant components
    allow it (negative axis values included); negative integer exponents
    require an invertible ``u``.  Non-integer exponents share ln's domain.
    """
    m = float(m)
    comps = canonical_components(u)
    threshold = ZERO_COMPONENT_RTOL * u.modulus()
    planar = u.variant.is_planar

    if m.is_integer():
        n = int(m)

        def axis(v: float) -> float:
            if v == 0.0 and n < 0:
                raise ZeroDivisorError("v+ or v-", "zero axis component with negative exponent")
            return float(math.pow(v, n))

        def plane(z: complex) -> complex:
            if z == 0:
                if n < 0:
                    raise ZeroDivisorError("pair", "zero plane component with negative exponent")
                return complex(1.0, 0.0) if n == 0 else complex(0.0, 0.0)
            return z ** n

        # Label zero components precisely before delegating.
        if n < 0:
            idx = 0
            if not planar:
                for label in ("v+", "v-"):
                    if abs(comps[idx]) <= threshold:
                        raise ZeroDivisorError(label)
                    idx += 1
            for k in range(1, tr.pair_count(planar) + 1):
                if math.hypot(comps[idx], comps[idx + 1]) <= threshold:
                    raise ZeroDivisorError(f"pair{k}")
                idx += 2
        return _apply(u, axis, plane)

    _ln_preconditions(u)

    def plane_frac(z: complex) -> complex:
        rho = abs(z)
        phi = cmath.phase(z) % TWO_PI
        return cmath.rect(math.pow(rho, m), m * phi)

    return _apply(u, lambda v: math.pow(v, m), plane_frac)


@dataclass(frozen=True)
class SeriesCoefficients:
    """Power-series coefficients a0..aL with their canonical projections.

    ``projections[l]`` carries the canonical variables of term l, which
    coincide with the cosine/sine component sums of its six coefficients.
    """

    terms: tuple[HexaNumber, ...]
    projections: tuple[tuple[float, ...], ...]

    def __init__(self, terms: Sequence[HexaNumber]):
        terms = tuple(terms)
        if not terms:
            raise ValueError("a series needs at least one coefficient")
        variant = terms[0].variant
        for t in terms:
            if t.variant is not variant:
                raise ValueError("series coefficients must share one variant")
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "projections",
                           tuple(canonical_components(t) for t in terms))

    @property
    def variant(self) -> Variant:
        return self.terms[0].variant

    def __len__(self) -> int:
        return len(self.terms)


@dataclass(frozen=True)
class RadiusEstimate:
    """Ratio-based convergence radius estimate; indeterminate when the
    finite ratio data is too short or not monotone."""

    value: float | None
    indeterminate: bool


@dataclass(frozen=True)
class ConvergenceReport:
    """Per-component radius estimates plus the crude modulus bound."""

    radii: dict[str, RadiusEstimate]
    crude_bound: RadiusEstimate


_RATIO_WINDOW = 5


def _radius_estimate(magnitudes: Sequence[float], divisor: float = 1.0) -> RadiusEstimate:
    ratios = [magnitudes[i] / (divisor * magnitudes[i + 1])
              for i in range(len(magnitudes) - 1) if magnitudes[i + 1] > 0.0]
    if len(ratios) < 2:
        return RadiusEstimate(value=None, indeterminate=True)
    window = ratios[-_RATIO_WINDOW:]
    ascending = all(b >= a for a, b in zip(window, window[1:]))
    descending = all(b <= a for a, b in zip(window, window[1:]))
    return RadiusEstimate(value=sum(window) / len(window),
                          indeterminate=not (ascending or descending))


def eval_series(coeffs: SeriesCoefficients, u: HexaNumber) -> tuple[HexaNumber, ConvergenceReport]:
    """Evaluate sum a_l u^l by the canonical-component rearrangement.

    Finite sums always evaluate; the report estimates each component's
    convergence radius from the trailing coefficient ratios, plus the
    crude bound |a_l| / (sqrt(dim-factor) |a_{l+1}|).
    """
    if coeffs.variant is not u.variant:
        raise ValueError("series and argument variants differ")
    planar = u.variant.is_planar
    comps = canonical_components(u)

    out: list[float] = []
    labels: list[str] = []
    magnitude_seqs: list[list[float]] = []
    idx = 0
    if not planar:
        for label in ("plus", "minus"):
            base = comps[idx]
            acc = 0.0
            power = 1.0
            for proj in coeffs.projections:
                acc += proj[idx] * power
                power *= base
            out.append(acc)
            labels.append(label)
            magnitude_seqs.append([abs(proj[idx]) for proj in coeffs.projections])
            idx += 1
    for k in range(1, tr.pair_count(planar) + 1):
        base = complex(comps[idx], comps[idx + 1])
        acc = 0j
        power = complex(1.0, 0.0)
        for proj in coeffs.projections:
            acc += complex(proj[idx], proj[idx + 1]) * power
            power *= base
        out.append(acc.real)
        out.append(acc.imag)
        labels.append(f"pair{k}")
        magnitude_seqs.append([math.hypot(proj[idx], proj[idx + 1])
                               for proj in coeffs.projections])
        idx += 2

    radii = {label: _radius_estimate(seq) for label, seq in zip(labels, magnitude_seqs)}
    scale = tr.SQRT3 if planar else tr.SQRT6
    crude = _radius_estimate([t.modulus() for t in coeffs.terms], divisor=scale)
    return from_canonical_components(u.variant, out), ConvergenceReport(radii=radii,
                                                                        crude_bound=crude)
