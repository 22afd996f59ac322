"""NFS-DL instance setup: factor bases, unit ranks, Schirokauer specs.

The ell-hygiene conditions (ell coprime to both discriminants and leading
coefficients, ell unramified) are enforced here because the virtual-log
machinery silently breaks without them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from ..arith import IntPoly, resultant
from ..extfield import ExtField
from ..polyselect import PolyPair
from .factorbase import PrimeIdeal, build_factor_base


def count_real_roots(f: IntPoly) -> int:
    """Number of distinct real roots via a Sturm chain (exact arithmetic)."""
    if f.degree <= 0:
        return 0
    chain = [
        [Fraction(c) for c in f.coeffs],
        [Fraction(i * c) for i, c in enumerate(f.coeffs)][1:],
    ]
    while True:
        a, b = chain[-2], chain[-1]
        if len(b) == 0:
            chain.pop()
            break
        r = _poly_rem(a, b)
        if not r:
            break
        chain.append([-c for c in r])
    def signs_at_inf(sign: int) -> int:
        count, prev = 0, 0
        for poly in chain:
            if not poly:
                continue
            lead = poly[-1]
            s = (1 if lead > 0 else -1) * (sign ** ((len(poly) - 1) % 2))
            if prev and s and s != prev:
                count += 1
            if s:
                prev = s
        return count

    return signs_at_inf(-1) - signs_at_inf(1)


def _poly_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = a[:]
    while len(a) >= len(b) and a:
        coef = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] -= coef * bc
        while a and a[-1] == 0:
            a.pop()
    return a


def unit_rank(f: IntPoly) -> int:
    """r1 + r2 - 1 from the signature of the defining polynomial."""
    r1 = count_real_roots(f)
    r2 = (f.degree - r1) // 2
    return r1 + r2 - 1


@dataclass(frozen=True)
class SchirokauerSpec:
    side: str
    rank: int
    m: int
    ell: int


def _inertia_lcm(poly: IntPoly, ell: int) -> int:
    from ..arith import factor_degrees_mod

    degs = factor_degrees_mod(poly, ell)
    if degs is None:
        raise ValueError("ell ramifies in (or degenerates) the side polynomial")
    return math.lcm(*degs)


@dataclass
class NfsSetup:
    pair: PolyPair
    ell: int
    bound: int
    field: ExtField
    fb_f: list[PrimeIdeal]
    fb_g: list[PrimeIdeal]
    sm_f: SchirokauerSpec
    sm_g: SchirokauerSpec
    lp_factor: float = 1.0

    @property
    def p(self) -> int:
        return self.pair.p

    @property
    def n(self) -> int:
        return self.pair.n

    @property
    def lp_bound(self) -> int:
        return int(self.bound * self.lp_factor)

    def relation_quota(self) -> int:
        return len(self.fb_f) + len(self.fb_g) + self.sm_f.rank + self.sm_g.rank + 2

    def side_poly(self, side: str) -> IntPoly:
        return self.pair.f if side == "f" else self.pair.g


def make_setup(
    pair: PolyPair,
    ell: int,
    bound: int,
    lp_factor: float = 1.0,
    max_residue_degree: int = 1,
) -> NfsSetup:
    """Build factor bases and Schirokauer data, enforcing ell hygiene."""
    p, n = pair.p, pair.n
    if (p ** n - 1) % ell != 0:
        raise ValueError("ell must divide p^n - 1")
    for side, poly in (("f", pair.f), ("g", pair.g)):
        if poly.lc % ell == 0:
            raise ValueError(f"ell divides lc({side})")
        disc = resultant(poly, poly.derivative())
        if disc % ell == 0:
            raise ValueError(f"ell divides disc({side})")
    fld = ExtField(p, n, pair.phi)
    fb_f = build_factor_base(pair.f, bound, side="f", max_residue_degree=max_residue_degree)
    fb_g = build_factor_base(pair.g, bound, side="g", max_residue_degree=max_residue_degree)
    sm_f = SchirokauerSpec("f", unit_rank(pair.f), _inertia_lcm(pair.f, ell), ell)
    sm_g = SchirokauerSpec("g", unit_rank(pair.g), _inertia_lcm(pair.g, ell), ell)
    return NfsSetup(
        pair=pair,
        ell=ell,
        bound=bound,
        field=fld,
        fb_f=fb_f,
        fb_g=fb_g,
        sm_f=sm_f,
        sm_g=sm_g,
        lp_factor=lp_factor,
    )
