"""Schirokauer maps: the unit-rank extra columns of the virtual-log system.

lambda(z) = coefficients of (z^(ell^m - 1) - 1) / ell computed in
(Z/ell^2)[x]/(side polynomial), taken largest degree first, keeping as many
as the unit rank of the side.  m is the lcm of the inertia degrees of the
primes above ell, so z^(ell^m - 1) = 1 + ell*(...) for every z coprime to
ell, which makes the map additive:
lambda(z*w) = lambda(z) + lambda(w) mod ell.
"""

from __future__ import annotations

from ..arith import IntPoly
from .setup import SchirokauerSpec


class _Ring:
    """(Z/mod)[x] modulo a monic-ized side polynomial."""

    def __init__(self, poly: IntPoly, mod: int):
        lc_inv = pow(poly.lc % mod, -1, mod)
        self.mod = mod
        self.monic = [c * lc_inv % mod for c in poly.coeffs]
        self.deg = poly.degree

    def mul(self, a: list[int], b: list[int]) -> list[int]:
        mod, d = self.mod, self.deg
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k] % mod
            if c:
                for j in range(d):
                    prod[k - d + j] -= c * self.monic[j]
        return [v % mod for v in prod[:d]]

    def pow(self, a: list[int], e: int) -> list[int]:
        result = [1] + [0] * (self.deg - 1)
        base = a[:]
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result


def schirokauer_map(spec: SchirokauerSpec, z: IntPoly, side_poly: IntPoly) -> tuple[int, ...]:
    """The rank-many map values of z, reduced mod ell.

    z must be coprime to ell in the order: Res(side_poly, z) must not be
    divisible by ell.
    """
    ell = spec.ell
    from ..arith import resultant

    if z.is_zero():
        raise ValueError("zero element")
    res = resultant(side_poly, z) if z.degree >= 1 else z.coeffs[0] ** side_poly.degree
    if res % ell == 0:
        raise ValueError("element not coprime to ell")
    ring = _Ring(side_poly, ell * ell)
    d = side_poly.degree
    zc = [c % (ell * ell) for c in z.coeffs] + [0] * (d - len(z.coeffs))
    w = ring.pow(zc[:d], ell ** spec.m - 1)
    w[0] = (w[0] - 1) % (ell * ell)
    if any(c % ell for c in w):
        raise ArithmeticError("z^(ell^m - 1) != 1 mod ell: wrong m")
    v = [(c // ell) % ell for c in w]
    return tuple(v[d - 1 - i] for i in range(spec.rank))
