"""Database of conjugation-method f candidates.

Enumerates a(y) = a2 y^2 + a1 y + a0 over the default bounds
(0 < a2 < 32, |a1| < 32, |a0| < 512), keeps the primitive irreducible
resultants f = Res_y(a, g0 + y g1) and records an alpha score for each,
sorted ascending so selection can consume the best entries first.

Irreducibility of f reduces to two facts: a(y) must be irreducible over Q
(discriminant not a perfect square), and the family cubic must stay
irreducible over the real quadratic field Q(y0).  The latter fails only
when the cubic acquires a root in that field; reductions modulo split
primes detect this: a single usable prime where the reduced cubic has no
root certifies irreducibility, and the rare undecided entries go through
an exact factorization.  The alpha stored here is the simple-root
approximation over a small prime bound (vectorized); selection re-scores
its short-list with the exact alpha.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..arith import IntPoly, is_irreducible_q, primes_upto
from .methods import DEFAULT_FAMILY, GaloisFamily, conjugation_f

DEFAULT_BOUNDS = (32, 32, 512)  # 0 < a2 < 32, |a1| < 32, |a0| < 512
_CERT_PRIMES = tuple(p for p in primes_upto(160) if p >= 41)
_ALPHA_PRIMES = tuple(primes_upto(100))


@dataclass(frozen=True)
class FCandidate:
    a: tuple[int, int, int]
    f: IntPoly
    alpha_f: float


class FCandidateDb:
    """Array-backed store; entries materialize lazily through iter_best."""

    def __init__(self, triples: np.ndarray, fcoeffs: np.ndarray, alphas: np.ndarray,
                 bounds: tuple[int, int, int], family: GaloisFamily):
        order = np.argsort(alphas, kind="stable")
        self.triples = triples[order]
        self.fcoeffs = fcoeffs[order]
        self.alphas = alphas[order]
        self.bounds = bounds
        self.family = family

    def __len__(self) -> int:
        return len(self.alphas)

    def entry(self, i: int) -> FCandidate:
        a2, a1, a0 = (int(v) for v in self.triples[i])
        return FCandidate((a2, a1, a0), IntPoly([int(c) for c in self.fcoeffs[i]]),
                          float(self.alphas[i]))

    def iter_best(self, count: int | None = None):
        limit = len(self) if count is None else min(count, len(self))
        for i in range(limit):
            yield self.entry(i)

    def find(self, a2: int, a1: int, a0: int) -> FCandidate | None:
        mask = (
            (self.triples[:, 0] == a2)
            & (self.triples[:, 1] == a1)
            & (self.triples[:, 2] == a0)
        )
        idx = np.nonzero(mask)[0]
        return self.entry(int(idx[0])) if len(idx) else None

    def verify_irreducible(self, sample: int | None = 500, seed: int = 0) -> bool:
        """Exact re-verification pass (full db when sample is None)."""
        rng = np.random.default_rng(seed)
        idx = (
            np.arange(len(self))
            if sample is None or sample >= len(self)
            else rng.choice(len(self), size=sample, replace=False)
        )
        return all(
            self.entry(int(i)).f.degree == 6 and is_irreducible_q(self.entry(int(i)).f)
            for i in idx
        )


def _family_product_vectors(family: GaloisFamily) -> np.ndarray:
    g0, g1 = family.g0, family.g1
    parts = [g0 * g0, -1 * (g0 * g1), g1 * g1]
    mat = np.zeros((3, 7), dtype=np.int64)
    for r, poly in enumerate(parts):
        for i, c in enumerate(poly.coeffs):
            mat[r, i] = c
    return mat


def _perfect_square_mask(values: np.ndarray) -> np.ndarray:
    out = np.zeros(values.shape, dtype=bool)
    nonneg = values >= 0
    root = np.zeros_like(values)
    root[nonneg] = np.sqrt(values[nonneg].astype(np.float64)).astype(np.int64)
    for d in (-1, 0, 1):  # guard float rounding at the edges
        out |= nonneg & ((root + d) ** 2 == values)
    return out


def _cubic_root_table(q: int) -> np.ndarray:
    """has_root[t] for psi_t = x^3 - t x^2 - (t+3) x - 1 over F_q."""
    x = np.arange(q, dtype=np.int64)
    x3 = (x * x % q) * x % q
    has = np.zeros(q, dtype=bool)
    # psi_t(x) = 0  <=>  t = (x^3 - 3x - 1) / (x^2 + x) when x^2 + x != 0
    denom = (x * x + x) % q
    numer = (x3 - 3 * x - 1) % q
    ok = denom != 0
    inv = np.zeros(q, dtype=np.int64)
    inv[1:] = _inverse_table(q)
    t_vals = numer[ok] * inv[denom[ok]] % q
    has[t_vals] = True
    # x with x^2 + x = 0 (x = 0, q-1): psi_t(0) = -1, psi_t(-1) = 1: never roots
    return has


def _inverse_table(q: int) -> np.ndarray:
    """[inv(1), ..., inv(q-1)] mod q."""
    inv = np.zeros(q, dtype=np.int64)
    inv[1] = 1
    for i in range(2, q):
        inv[i] = (q - (q // i) * inv[q % i]) % q
    return inv[1:]


def _sqrt_table(q: int) -> np.ndarray:
    """sqrt_table[v] = a square root of v mod q, or -1."""
    table = np.full(q, -1, dtype=np.int64)
    x = np.arange(q, dtype=np.int64)
    table[x * x % q] = x
    return table


def build_f_db(
    bounds: tuple[int, int, int] = DEFAULT_BOUNDS,
    family: GaloisFamily = DEFAULT_FAMILY,
    alpha_prime_bound: int = 100,
    exact_fallback: bool = True,
) -> FCandidateDb:
    """Enumerate, certify irreducibility, score, and sort the database."""
    b2, b1, b0 = bounds
    a2 = np.arange(1, b2, dtype=np.int64)
    a1 = np.arange(-b1 + 1, b1, dtype=np.int64)
    a0 = np.arange(-b0 + 1, b0, dtype=np.int64)
    A2, A1, A0 = np.meshgrid(a2, a1, a0, indexing="ij")
    A2, A1, A0 = A2.ravel(), A1.ravel(), A0.ravel()

    keep = A0 != 0
    keep &= np.gcd(np.gcd(A2, np.abs(A1)), np.abs(A0)) == 1
    disc = A1 * A1 - 4 * A2 * A0
    keep &= ~_perfect_square_mask(disc)
    A2, A1, A0, disc = A2[keep], A1[keep], A0[keep], disc[keep]

    # certify the cubic stays irreducible over Q(y0) via split primes
    certified = np.zeros(len(A2), dtype=bool)
    for q in _CERT_PRIMES:
        undecided = ~certified
        if not undecided.any():
            break
        dq = disc[undecided] % q
        a2q = A2[undecided] % q
        usable = (dq != 0) & (a2q % q != 0)
        sq = _sqrt_table(q)
        roots_exist = sq[dq] >= 0
        usable &= roots_exist
        if not usable.any():
            continue
        inv_t = np.zeros(q, dtype=np.int64)
        inv_t[1:] = _inverse_table(q)
        has_root = _cubic_root_table(q)
        sub = np.nonzero(undecided)[0][usable]
        sq_v = sq[disc[sub] % q]
        inv2a2 = inv_t[(2 * A2[sub]) % q]
        y_plus = (-(A1[sub]) + sq_v) * inv2a2 % q
        y_minus = (-(A1[sub]) - sq_v) * inv2a2 % q
        no_root = (~has_root[y_plus]) | (~has_root[y_minus])
        certified[sub[no_root]] = True

    # coefficient matrix f = a2*g0^2 - a1*g0*g1 + a0*g1^2
    fam_mat = _family_product_vectors(family)
    coeff_stack = np.stack([A2, A1, A0], axis=1)
    fcoeffs = coeff_stack @ fam_mat

    if exact_fallback:
        suspicious = np.nonzero(~certified)[0]
        for i in suspicious:
            f = IntPoly([int(c) for c in fcoeffs[i]])
            if f.degree == 6 and is_irreducible_q(f):
                certified[i] = True
    A2, A1, A0 = A2[certified], A1[certified], A0[certified]
    fcoeffs = fcoeffs[certified]

    alphas = _alpha_approx(fcoeffs, A2, alpha_prime_bound)
    triples = np.stack([A2, A1, A0], axis=1)
    return FCandidateDb(triples, fcoeffs, alphas, bounds, family)


def _alpha_approx(fcoeffs: np.ndarray, lead: np.ndarray, prime_bound: int) -> np.ndarray:
    """Simple-root alpha approximation, vectorized per prime.

    Root counts come from evaluating f on all of F_q through a float
    matmul (values stay far below 2^53, so this is exact), plus the
    projective root when q divides the leading coefficient.
    """
    n = len(fcoeffs)
    alphas = np.zeros(n, dtype=np.float64)
    fc = fcoeffs.astype(np.float64)
    chunk = max(1, (1 << 26) // max(prime_bound, 8))  # cap scratch near 512 MB
    for q in primes_upto(prime_bound):
        x = np.arange(q, dtype=np.float64)
        powers = np.ones((7, q), dtype=np.float64)
        for k in range(1, 7):
            powers[k] = powers[k - 1] * x % q
        lnq = math.log(q)
        coef = q / (q * q - 1.0)
        base = 1.0 / (q - 1)
        proj = (lead % q == 0).astype(np.float64)
        for lo in range(0, n, chunk):
            hi = min(lo + chunk, n)
            vals = fc[lo:hi] @ powers
            nroots = np.count_nonzero(vals % q == 0, axis=1).astype(np.float64)
            nroots += proj[lo:hi]
            alphas[lo:hi] += (base - nroots * coef) * lnq
    return alphas
