"""Factor bases: prime ideals of bounded norm on each side.

A degree-1 ideal is a pair (q, r) with f(r) = 0 mod q, plus the projective
ideal (q, infinity) when q divides lc(f); those projective ideals are the
prime support of the J aggregate.  Ideals of residue degree d > 1 (norm
q^d <= bound) are represented by their irreducible factor polynomial; they
only matter for sieving polynomials of degree >= 2.

Each ideal carries a simplicity flag: a simple root guarantees that the
q-valuation of the resultant is exactly the ideal valuation of the
integral ideal J^(k-1) <phi(alpha)>, which is what the relation machinery
needs.  Relations touching non-simple ideals are rejected upstream.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..arith import IntPoly, primes_upto, roots_mod
from ..arith.intpoly import factor_modpoly

PROJECTIVE = -1


@dataclass(frozen=True)
class PrimeIdeal:
    side: str
    q: int
    r: int  # residue in [0, q) or PROJECTIVE
    residue_degree: int = 1
    simple: bool = True
    root_poly: tuple[int, ...] | None = None  # for residue_degree > 1

    @property
    def is_projective(self) -> bool:
        return self.r == PROJECTIVE

    @property
    def norm(self) -> int:
        return self.q ** self.residue_degree

    def label(self) -> str:
        if self.residue_degree > 1:
            inner = ",".join(str(c) for c in self.root_poly or ())
            return f"{self.side}/{self.q:#x}/[{inner}]"
        r = "inf" if self.is_projective else f"{self.r:#x}"
        return f"{self.side}/{self.q:#x}/{r}"

    def __repr__(self):
        return f"PrimeIdeal({self.label()}{'' if self.simple else ' multiple'})"


def ideal_above(f: IntPoly, side: str, q: int, r: int) -> PrimeIdeal:
    """The degree-1 ideal of f at root r mod q (or PROJECTIVE), with its
    simplicity flag computed."""
    d = f.degree
    if r == PROJECTIVE:
        if f.coeffs[d] % q != 0:
            raise ValueError("no projective root: q does not divide lc")
        simple = f.coeffs[d - 1] % q != 0
        return PrimeIdeal(side, q, PROJECTIVE, 1, simple)
    fm = f.mod(q)
    if fm(r) != 0:
        raise ValueError("not a root")
    simple = fm.derivative()(r) != 0
    return PrimeIdeal(side, q, r, 1, simple)


def build_factor_base(
    f: IntPoly,
    bound: int,
    side: str = "f",
    max_residue_degree: int = 1,
) -> list[PrimeIdeal]:
    """All prime ideals of norm < bound, plus the lc-divisor (projective)
    ideals regardless of their prime's size relative to the roots."""
    out: list[PrimeIdeal] = []
    lc = f.lc
    d = f.degree
    for q in primes_upto(bound - 1):
        fm = f.mod(q)
        if fm.is_zero():
            continue  # q divides the content; excluded by primitivity upstream
        if max_residue_degree == 1 or q ** 2 >= bound:
            for r in roots_mod(f, q):
                out.append(ideal_above(f, side, q, r))
        else:
            for fac, mult in factor_modpoly(fm):
                deg = fac.degree
                if deg > max_residue_degree or q ** deg >= bound:
                    continue
                if deg == 1:
                    r = (-fac.coeffs[0]) % q
                    out.append(PrimeIdeal(side, q, r, 1, mult == 1))
                else:
                    out.append(
                        PrimeIdeal(side, q, 0, deg, mult == 1, tuple(fac.coeffs))
                    )
        if lc % q == 0:
            simple = f.coeffs[d - 1] % q != 0
            out.append(PrimeIdeal(side, q, PROJECTIVE, 1, simple))
    out.sort(key=lambda i: (i.q, i.residue_degree, i.r))
    return out


def lc_ideal_decomposition(f: IntPoly, side: str, bound: int) -> dict[PrimeIdeal, int]:
    """J aggregate as a product of projective ideals: valuation v_q(lc) at
    each projective ideal.  Requires every lc prime below the bound and
    every projective root simple; raises otherwise (the caller then keeps J
    as an opaque aggregate column)."""
    from ..arith import factor

    lc = abs(f.lc)
    if lc == 1:
        return {}
    fz = factor(lc)
    if not fz.complete:
        raise ValueError("leading coefficient does not factor in budget")
    out: dict[PrimeIdeal, int] = {}
    for q, e in fz.factors:
        if q >= bound:
            raise ValueError("lc prime beyond the factor base bound")
        ideal = ideal_above(f, side, q, PROJECTIVE)
        if not ideal.simple:
            raise ValueError("projective root not simple; J stays aggregate")
        out[ideal] = e
    return out
