"""Independent discrete-log oracle for the order-ell subgroup of F_{p^n}^*.

Baby-step giant-step under Pohlig-Hellman cofactor clearing.  This is the
reference every table and individual logarithm is checked against; it must
stay independent of the sieve machinery.
"""

from __future__ import annotations

import math

from ..extfield import ExtField, ExtFieldElement


class SubgroupOracle:
    """Logs modulo ell relative to a fixed generator of the ell-subgroup."""

    def __init__(self, fld: ExtField, ell: int, base: ExtFieldElement):
        self.field = fld
        self.ell = ell
        self.cof = (fld.order() - 1) // ell
        self.base = base ** self.cof
        if self.base.is_one():
            raise ValueError("base has trivial ell-part")
        self._table: dict[tuple[int, ...], int] | None = None
        self._m = 0

    def _ensure_table(self):
        if self._table is not None:
            return
        m = math.isqrt(self.ell) + 1
        table = {}
        g = self.field.one()
        for j in range(m):
            table.setdefault(g.coeffs, j)
            g = g * self.base
        self._table = table
        self._m = m

    def log(self, z: ExtFieldElement) -> int:
        """log_base(z) mod ell of the ell-part of z; BSGS, O(sqrt(ell))."""
        self._ensure_table()
        w = z ** self.cof
        if w.is_one():
            return 0
        m = self._m
        giant = (self.base ** m).inverse()
        gamma = w
        for i in range(m + 1):
            j = self._table.get(gamma.coeffs)
            if j is not None:
                x = (i * m + j) % self.ell
                if (self.base ** x).coeffs == w.coeffs:
                    return x
            gamma = gamma * giant
        raise ArithmeticError("BSGS failed: element outside the subgroup?")

    def log_ratio(self, z: ExtFieldElement, anchor: ExtFieldElement) -> int:
        """log of z normalized so that anchor has log 1."""
        la = self.log(anchor)
        if la == 0:
            raise ValueError("anchor has zero log")
        return self.log(z) * pow(la, -1, self.ell) % self.ell


def curve_bsgs(g1, target, ell: int) -> int:
    """BSGS directly in the curve group; small ell only."""
    from ..curves import ec_add, ec_mul

    m = math.isqrt(ell) + 1
    table = {}
    cur = g1.curve.infinity()
    for j in range(m):
        key = None if cur.is_infinity else (cur.x.coeffs, cur.y.coeffs)
        table.setdefault(key, j)
        cur = ec_add(cur, g1)
    giant = ec_mul(m, -g1)
    gamma = target
    for i in range(m + 1):
        key = None if gamma.is_infinity else (gamma.x.coeffs, gamma.y.coeffs)
        j = table.get(key)
        if j is not None:
            x = (i * m + j) % ell
            if ec_mul(x, g1) == target:
                return x
        gamma = ec_add(gamma, giant)
    raise ArithmeticError("curve BSGS failed")
