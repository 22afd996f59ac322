"""Exact LLL lattice reduction over the integers.

Gram-Schmidt data is kept as exact rationals so the reduction is fully
deterministic; the lattices that show up here are small (dimension <= 8)
with entries of a few hundred bits, well within Fraction range.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass
class IntLattice:
    """Row-major integer basis; rows are basis vectors."""

    basis: list[list[int]]

    @property
    def nrows(self) -> int:
        return len(self.basis)

    @property
    def ncols(self) -> int:
        return len(self.basis[0]) if self.basis else 0

    def copy(self) -> "IntLattice":
        return IntLattice([row[:] for row in self.basis])

    def gram_det(self) -> int:
        """det(B B^T), invariant under the reduction for full-rank input."""
        n = self.nrows
        g = [[sum(a * b for a, b in zip(self.basis[i], self.basis[j])) for j in range(n)] for i in range(n)]
        return _det_bareiss(g)


def _det_bareiss(m: list[list[int]]) -> int:
    n = len(m)
    a = [row[:] for row in m]
    denom = 1
    sign = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // denom
        denom = a[k][k]
    return sign * a[n - 1][n - 1]


def lll_reduce(lattice: IntLattice, delta: float = 0.99999, eta: float = 0.50001) -> IntLattice:
    """LLL-reduce the basis; raises on linearly dependent rows.

    delta in (1/4, 1], eta in [1/2, sqrt(delta)).  With the defaults the
    output is as strongly reduced as classical LLL allows.
    """
    if not 0.25 < delta <= 1:
        raise ValueError("delta out of range")
    if not 0.5 <= eta < delta ** 0.5:
        raise ValueError("eta out of range")
    b = [row[:] for row in lattice.basis]
    n = len(b)
    if n == 0:
        return IntLattice([])
    dq = Fraction(delta).limit_denominator(10 ** 9)
    eq = Fraction(eta).limit_denominator(10 ** 9)

    mu: list[list[Fraction]] = [[Fraction(0)] * n for _ in range(n)]
    bstar: list[list[Fraction]] = [[Fraction(0)] * len(b[0]) for _ in range(n)]
    bstar_sq: list[Fraction] = [Fraction(0)] * n

    def update_gs():
        for i in range(n):
            bs = [Fraction(x) for x in b[i]]
            for j in range(i):
                if bstar_sq[j] == 0:
                    raise ValueError("linearly dependent rows")
                mu[i][j] = _dot_list(b[i], bstar[j]) / bstar_sq[j]
                bs = [x - mu[i][j] * y for x, y in zip(bs, bstar[j])]
            bstar[i] = bs
            bstar_sq[i] = sum(x * x for x in bs)
            if bstar_sq[i] == 0:
                raise ValueError("linearly dependent rows")

    update_gs()
    k = 1
    while k < n:
        # size-reduce b_k against b_{k-1}..b_0
        for j in range(k - 1, -1, -1):
            if abs(mu[k][j]) > eq:
                r = _round_frac(mu[k][j])
                if r:
                    b[k] = [x - r * y for x, y in zip(b[k], b[j])]
                    update_gs()
        if bstar_sq[k] >= (dq - mu[k][k - 1] ** 2) * bstar_sq[k - 1]:
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            update_gs()
            k = max(k - 1, 1)
    return IntLattice(b)


def _dot_list(ivec: list[int], fvec: list[Fraction]) -> Fraction:
    return sum(Fraction(a) * x for a, x in zip(ivec, fvec))


def _round_frac(x: Fraction) -> int:
    # round-half-away-from-zero keeps the reduction symmetric
    n, d = x.numerator, x.denominator
    if n >= 0:
        return (2 * n + d) // (2 * d)
    return -((-2 * n + d) // (2 * d))


def gauss_reduce_2d(u: tuple[int, int], v: tuple[int, int]) -> tuple[tuple[int, int], tuple[int, int]]:
    """Lagrange-Gauss reduction of a rank-2 planar lattice."""
    un = u[0] * u[0] + u[1] * u[1]
    vn = v[0] * v[0] + v[1] * v[1]
    if un > vn:
        u, v = v, u
        un, vn = vn, un
    while True:
        dot = u[0] * v[0] + u[1] * v[1]
        un = u[0] * u[0] + u[1] * u[1]
        m = (2 * dot + un) // (2 * un) if dot >= 0 else -((-2 * dot + un) // (2 * un))
        v = (v[0] - m * u[0], v[1] - m * u[1])
        vn = v[0] * v[0] + v[1] * v[1]
        if vn >= un:
            return u, v
        u, v = v, u
