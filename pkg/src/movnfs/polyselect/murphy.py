"""Murphy's E: expected relation yield of a polynomial pair over a sieve
region, via Dickman rho applied to alpha-corrected log-norms sampled on the
region boundary ellipse.

The published record values used an unpublished region, so absolute E
values are not reproducible; orderings are.  The default region matches
the record-scale sieve parameters: area E^2 with log2(E) = 25.25 and
large-prime bounds 2^27 on both sides.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..arith import IntPoly, dickman_rho

DEFAULT_AREA = 2.0 ** 50.5
DEFAULT_BF = 2.0 ** 27
DEFAULT_BG = 2.0 ** 27
DEFAULT_POINTS = 1000


@dataclass(frozen=True)
class MurphyRegion:
    area: float = DEFAULT_AREA
    bound_f: float = DEFAULT_BF
    bound_g: float = DEFAULT_BG
    points: int = DEFAULT_POINTS
    skew: float | None = None  # None: optimized per pair


def _homogeneous_abs(coeffs, x: float, y: float) -> float:
    d = len(coeffs) - 1
    acc = 0.0
    for i, c in enumerate(coeffs):
        if c:
            acc += c * x ** i * y ** (d - i)
    return abs(acc)


def murphy_e_at_skew(
    f: IntPoly,
    g: IntPoly,
    alpha_f: float,
    alpha_g: float,
    region: MurphyRegion,
    skew: float,
) -> float:
    xb = math.sqrt(region.area * skew)
    yb = math.sqrt(region.area / skew)
    log_bf = math.log(region.bound_f)
    log_bg = math.log(region.bound_g)
    fc = [float(c) for c in f.coeffs]
    gc = [float(c) for c in g.coeffs]
    total = 0.0
    k = region.points
    for i in range(k):
        theta = math.pi * (i + 0.5) / k
        x = xb * math.cos(theta)
        y = yb * math.sin(theta)
        vf = _homogeneous_abs(fc, x, y)
        vg = _homogeneous_abs(gc, x, y)
        if vf < 1.0 or vg < 1.0:
            continue
        uf = (math.log(vf) + alpha_f) / log_bf
        ug = (math.log(vg) + alpha_g) / log_bg
        total += dickman_rho(max(uf, 0.0)) * dickman_rho(max(ug, 0.0))
    return total / k


def murphy_e(
    f: IntPoly,
    g: IntPoly,
    alpha_f: float,
    alpha_g: float,
    region: MurphyRegion | None = None,
) -> tuple[float, float]:
    """(E, skew). Skewness is grid-optimized unless the region pins it."""
    region = region or MurphyRegion()
    if region.skew is not None:
        return murphy_e_at_skew(f, g, alpha_f, alpha_g, region, region.skew), region.skew
    best = (-1.0, 1.0)
    for i in range(-24, 65):
        s = 2.0 ** (i / 2.0)
        val = murphy_e_at_skew(f, g, alpha_f, alpha_g, region, s)
        if val > best[0]:
            best = (val, s)
    return best
