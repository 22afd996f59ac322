"""Murphy's alpha: expected log-advantage of polynomial values over random
integers of the same size in small-prime content.

alpha(f) = sum over primes q <= bound of (1/(q-1) - e_q(f)) * ln q, where
e_q is the exact average q-adic valuation of the homogeneous values F(a, b)
over coprime pairs.  Multiple roots (ramified or index primes) are handled
by the exact lifting recursion rather than the simple-root shortcut, so no
sampling noise enters the score.
"""

from __future__ import annotations

import math
from fractions import Fraction

from ..arith import IntPoly, primes_upto
from ..arith.intpoly import _gcd_modpoly  # noqa: F401  (re-export convenience)


def _content_val(coeffs: tuple[int, ...], q: int) -> int:
    v = None
    for c in coeffs:
        if c:
            w = 0
            while c % q == 0:
                c //= q
                w += 1
            v = w if v is None else min(v, w)
            if v == 0:
                return 0
    return v or 0


def _avg_val_affine(f: IntPoly, q: int, depth: int = 0) -> Fraction:
    """Average q-valuation of f(x) over q-adic integers x (exact)."""
    v = Fraction(_content_val(f.coeffs, q))
    if v:
        qv = q ** int(v)
        f = IntPoly([c // qv for c in f.coeffs])
    fm = f.mod(q)
    if fm.degree <= 0:
        return v
    fprime = f.derivative()
    for r in range(q) if q <= 3000 else _roots_large(f, q):
        if q <= 3000 and fm(r) != 0:
            continue
        if fprime.mod(q)(r) % q != 0:
            v += Fraction(1, q - 1)
        else:
            if depth > 24:
                continue  # vanishing tail; beyond double precision anyway
            f2 = f.compose_shift_scale(r, q)
            v += _avg_val_affine(f2, q, depth + 1) / q
    return v


def _roots_large(f: IntPoly, q: int):
    from ..arith import roots_mod

    return roots_mod(f, q)


def average_valuation_homogeneous(f: IntPoly, q: int) -> Fraction:
    """Average q-valuation of F(a, b) over coprime pairs: the q affine
    classes plus the projective one, each of measure 1/(q+1)."""
    affine = _avg_val_affine(f, q)
    rev = f.reverse()
    proj = _avg_val_affine(rev.compose_shift_scale(0, q), q)
    return (q * affine + proj) / (q + 1)


def alpha(f: IntPoly, prime_bound: int = 2000) -> float:
    """Murphy's alpha of f up to the given prime bound (natural log units)."""
    if f.is_zero() or f.degree < 1:
        raise ValueError("alpha needs a nonconstant polynomial")
    disc_gcd = _squarefree_check(f)
    if not disc_gcd:
        raise ValueError("alpha needs a squarefree polynomial")
    total = 0.0
    for q in primes_upto(prime_bound):
        e_q = average_valuation_homogeneous(f, q)
        total += (1.0 / (q - 1) - float(e_q)) * math.log(q)
    return total


def _squarefree_check(f: IntPoly) -> bool:
    from ..arith import resultant

    fp = f.derivative()
    if fp.is_zero():
        return False
    try:
        return resultant(f, fp) != 0
    except ValueError:
        return False
