"""The five NFS polynomial-selection methods.

All methods emit a PolyPair: integer polynomials f and g, irreducible over
Q, whose reductions mod p share an irreducible degree-n common factor phi.
The cubic Galois family x^3 - t x^2 - (t+3) x - 1 (automorphism
sigma(x) = (-x-1)/x of order 3) backs the conjugation and JLSV1 methods;
pairs built from it carry galois_order = 3 so the sieve can batch orbits.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

import gmpy2

from ..arith import (
    IntLattice,
    IntPoly,
    ModPoly,
    gcd_mod,
    is_irreducible_q,
    lll_reduce,
    modpoly_is_irreducible,
    rational_reconstruction,
)
from ..arith.intpoly import factor_modpoly
from .alpha import alpha
from .murphy import MurphyRegion, murphy_e

# default conjugation/JLSV1 family: psi_t = g0 + t*g1
FAMILY_G0 = IntPoly([-1, -3, 0, 1])  # x^3 - 3x - 1
FAMILY_G1 = IntPoly([0, -1, -1])  # -x^2 - x


@dataclass(frozen=True)
class GaloisFamily:
    """Cyclic cubic family with sigma(x) = (-x-1)/x."""

    n: int = 3
    g0: IntPoly = FAMILY_G0
    g1: IntPoly = FAMILY_G1

    def psi(self, t: int) -> IntPoly:
        return self.g0 + t * self.g1

    def psi_mod(self, t: int, p: int) -> ModPoly:
        return (self.g0 + (t % p) * self.g1).mod(p)


DEFAULT_FAMILY = GaloisFamily()


@dataclass
class PairScores:
    alpha_f: float
    alpha_g: float
    log2_inf_f: float
    log2_inf_g: float
    murphy_e: float
    skew: float = 1.0


@dataclass
class PolyPair:
    f: IntPoly
    g: IntPoly
    phi: ModPoly
    p: int
    n: int
    method: str
    scores: PairScores
    galois_order: int = 1

    def validate(self) -> None:
        if self.phi.degree != self.n or not modpoly_is_irreducible(self.phi):
            raise ValueError("common factor phi is not irreducible of degree n")
        if gcd_mod(self.f, self.g, self.p) != self.phi:
            raise ValueError("phi does not match gcd(f, g) mod p")
        if not is_irreducible_q(self.f) or not is_irreducible_q(self.g):
            raise ValueError("pair members must be irreducible over Q")


def _log2_norm(poly: IntPoly) -> float:
    return math.log2(poly.max_norm()) if poly.max_norm() else float("-inf")


def make_pair(
    f: IntPoly,
    g: IntPoly,
    p: int,
    n: int,
    method: str,
    galois_order: int = 1,
    alpha_bound: int = 2000,
    region: MurphyRegion | None = None,
    validate: bool = True,
) -> PolyPair:
    """Assemble and score a pair; phi is recomputed as gcd(f, g) mod p."""
    phi = gcd_mod(f, g, p)
    af = alpha(f, alpha_bound)
    ag = alpha(g, alpha_bound)
    e, skew = murphy_e(f, g, af, ag, region)
    pair = PolyPair(
        f=f,
        g=g,
        phi=phi,
        p=p,
        n=n,
        method=method,
        scores=PairScores(af, ag, _log2_norm(f), _log2_norm(g), e, skew),
        galois_order=galois_order,
    )
    if validate:
        pair.validate()
    return pair


def _sqrt_mod(a: int, p: int) -> int | None:
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # Tonelli-Shanks
    s, e = p - 1, 0
    while s % 2 == 0:
        s //= 2
        e += 1
    nonres = 2
    while pow(nonres, (p - 1) // 2, p) != p - 1:
        nonres += 1
    g = pow(nonres, s, p)
    x = pow(a, (s + 1) // 2, p)
    b = pow(a, s, p)
    r = e
    while True:
        t, m = b, 0
        while t != 1:
            t = t * t % p
            m += 1
        if m == 0:
            return x
        gs = pow(g, 1 << (r - m - 1), p)
        g = gs * gs % p
        x = x * gs % p
        b = b * g % p
        r = m


def quadratic_roots_mod(a2: int, a1: int, a0: int, p: int) -> list[int]:
    """Roots of a2 y^2 + a1 y + a0 mod p."""
    a2 %= p
    if a2 == 0:
        if a1 % p == 0:
            return []
        return [(-a0) * pow(a1, -1, p) % p]
    disc = (a1 * a1 - 4 * a2 * a0) % p
    s = _sqrt_mod(disc, p)
    if s is None:
        return []
    inv = pow(2 * a2, -1, p)
    r1 = (-a1 + s) * inv % p
    r2 = (-a1 - s) * inv % p
    return [r1] if r1 == r2 else sorted([r1, r2])


# -- conjugation method ----------------------------------------------------


def conjugation_f(a2: int, a1: int, a0: int, family: GaloisFamily = DEFAULT_FAMILY) -> IntPoly:
    """f = Res_y(a2 y^2 + a1 y + a0, g0 + y g1) = a2 g0^2 - a1 g0 g1 + a0 g1^2."""
    g0, g1 = family.g0, family.g1
    return a2 * (g0 * g0) - a1 * (g0 * g1) + a0 * (g1 * g1)


def _reconstruction_gs(
    y0: int, p: int, family: GaloisFamily, bound: int, combo_bound: int
) -> list[tuple[IntPoly, tuple[int, int]]]:
    """Candidate g's: plain convergents plus small two-term combinations of
    adjacent convergents (combination size capped at 8 per axis; the full
    combo_bound only widens the norm acceptance, not the enumeration)."""
    cands = rational_reconstruction(y0, p, bound=bound)
    reach = min(combo_bound, 8)
    out = []
    seen = set()

    def push(u, v):
        if v == 0 or math.gcd(u, v) != 1:
            return
        if v < 0:
            u, v = -u, -v
        if (u, v) in seen:
            return
        seen.add((u, v))
        g = v * family.g0 + u * family.g1
        out.append((g, (u, v)))

    for u, v in cands:
        push(u, v)
    for i in range(len(cands) - 1):
        (u1, v1), (u2, v2) = cands[i], cands[i + 1]
        for lam in range(-reach, reach + 1):
            for mu in range(-reach, reach + 1):
                if lam == 0 or mu == 0:
                    continue
                push(lam * u1 + mu * u2, lam * v1 + mu * v2)
    return out


def conjugation_select(
    p: int,
    n: int = 3,
    db=None,
    family: GaloisFamily = DEFAULT_FAMILY,
    combo_bound: int = 32,
    entry_budget: int = 60,
    g_budget: int = 12,
    rank_alpha_bound: int = 400,
    region: MurphyRegion | None = None,
) -> PolyPair:
    """Best conjugation pair over the database entries with a root mod p.

    Entries are consumed best-alpha first under the given budget; per
    entry, the reconstructed g's and their small linear combinations are
    ranked by alpha and the survivors by Murphy E.  The returned pair is
    the E-argmax (ties by smaller g norm, then lexicographic coefficients).
    """
    if n != 3 or family.n != 3:
        raise ValueError("conjugation selection implemented for the cubic family")
    if db is None:
        from .fdb import build_f_db

        db = build_f_db()
    bound = 4 * math.isqrt(p)
    norm_cap_bits = 0.5 * math.log2(p) + 4
    rank_region = MurphyRegion(skew=1.0, points=320)  # family pairs are balanced
    best = None
    tried = 0
    for entry in db.iter_best():
        if tried >= entry_budget:
            break
        a2, a1, a0 = entry.a
        roots = quadratic_roots_mod(a2, a1, a0, p)
        if not roots:
            continue
        f = entry.f
        if not is_irreducible_q(f):
            continue
        tried += 1
        af = alpha(f, rank_alpha_bound)
        for y0 in roots:
            psi = family.psi_mod(y0, p)
            if not modpoly_is_irreducible(psi):
                continue
            cand_gs = []
            for g, (u, v) in _reconstruction_gs(y0, p, family, bound, combo_bound):
                if g.is_zero() or g.degree != n:
                    continue
                g = g.primitive_part()
                if _log2_norm(g) > norm_cap_bits:
                    continue
                cand_gs.append(g)
            cand_gs = _dedupe_polys(cand_gs)
            # cheap pre-rank by norm, alpha-rank a short list, Murphy the best
            cand_gs.sort(key=_log2_norm)
            scored = sorted(cand_gs[: 3 * g_budget], key=lambda gg: alpha(gg, 120))
            for g in scored[:g_budget]:
                if not is_irreducible_q(g):
                    continue
                phi = gcd_mod(f, g, p)
                if phi.degree != n or not modpoly_is_irreducible(phi):
                    continue
                ag = alpha(g, rank_alpha_bound)
                e, _ = murphy_e(f, g, af, ag, rank_region)
                key = (-e, _log2_norm(g), g.coeffs)
                if best is None or key < best[0]:
                    best = (key, f, g)
    if best is None:
        raise ValueError("no database entry admits a root mod p")
    _, f, g = best
    return make_pair(f, g, p, n, "Conj", galois_order=3, region=region)


def _dedupe_polys(polys: list[IntPoly]) -> list[IntPoly]:
    seen = set()
    out = []
    for g in polys:
        key = g.coeffs if g.coeffs[-1] > 0 else tuple(-c for c in g.coeffs)
        if key not in seen:
            seen.add(key)
            out.append(g)
    return out


# -- hybrid Joux-Pierrot ---------------------------------------------------


def hybrid_jp_f(
    p_poly: IntPoly, a: int, b: int, c: int, d: int, family: GaloisFamily = DEFAULT_FAMILY
) -> IntPoly:
    """f = Res_Y(P(Y), (c + dY) g0 + (a + bY) g1), content removed.

    For quadratic P = p2 Y^2 + p1 Y + p0 and A + B*Y linear in Y this is
    p2 A^2 - p1 A B + p0 B^2 with A = c g0 + a g1, B = d g0 + b g1.
    """
    if p_poly.degree != 2:
        raise ValueError("family parameter polynomial must be quadratic")
    p0, p1, p2 = p_poly.coeffs
    A = c * family.g0 + a * family.g1
    B = d * family.g0 + b * family.g1
    if B.is_zero():
        raise ValueError("degenerate (b, d) = (0, 0)")
    f = p2 * (A * A) - p1 * (A * B) + p0 * (B * B)
    return f.primitive_part()


def hybrid_jp_select(
    p_poly: IntPoly,
    y: int,
    n: int = 3,
    coeff_bound: int = 256,
    coeffs: tuple[int, int, int, int] | None = None,
    family: GaloisFamily = DEFAULT_FAMILY,
    budget: int = 4000,
    region: MurphyRegion | None = None,
) -> PolyPair:
    """Joux-Pierrot / conjugation hybrid for p = P(y).

    d = 0 is preferred so g keeps a small leading coefficient.  With
    ``coeffs`` given, only that (a, b, c, d) is built (no search).
    """
    p = p_poly(y)
    from ..arith import is_probable_prime

    if not is_probable_prime(p):
        raise ValueError("P(y) is not prime")
    candidates = []
    if coeffs is not None:
        candidates.append(coeffs)
    else:
        for a, b, c, d in _jp_coeff_stream(coeff_bound):
            candidates.append((a, b, c, d))
            if len(candidates) >= budget:
                break
    rank_region = MurphyRegion(skew=1.0, points=320)
    pool = []
    for a, b, c, d in candidates:
        try:
            f = hybrid_jp_f(p_poly, a, b, c, d, family)
        except ValueError:
            continue
        if f.degree != 2 * n:
            continue
        denom = (c + d * y) % p
        if denom == 0:
            continue
        s = (a + b * y) * pow(denom, -1, p) % p
        g = (c + d * y) * family.g0 + (a + b * y) * family.g1
        pool.append((f, g, s))
    pool.sort(key=lambda t: alpha(t[0], 60))
    best = None
    for f, g, s in pool[:24]:
        psi = family.psi_mod(s, p)
        if psi.degree != n or not modpoly_is_irreducible(psi):
            continue
        if not is_irreducible_q(f) or not is_irreducible_q(g):
            continue
        af = alpha(f, 400)
        ag = alpha(g, 400)
        e, _ = murphy_e(f, g, af, ag, rank_region)
        key = (-e, _log2_norm(g), g.coeffs)
        if best is None or key < best[0]:
            best = (key, f, g)
    if best is None:
        raise ValueError("no hybrid candidate produced a valid pair")
    _, f, g = best
    return make_pair(f, g, p, n, "HybridJP", galois_order=3, region=region)


def _jp_coeff_stream(coeff_bound: int):
    """(a, b, c, 0) ordered by max coefficient magnitude."""
    for m in range(1, coeff_bound + 1):
        for c in range(1, m + 1):
            for b in range(-m, m + 1):
                for a in range(-m, m + 1):
                    if max(abs(a), abs(b), c) != m:
                        continue
                    if b == 0:
                        continue
                    yield a, b, c, 0


def count_jp_candidates(coeff_bound: int, monic_only: bool) -> int:
    """Search-space size with c free versus pinned to 1 (d = 0 both ways)."""
    count = 0
    for a, b, c, d in _jp_coeff_stream(coeff_bound):
        if monic_only and c != 1:
            continue
        count += 1
    return count


# -- GJL -------------------------------------------------------------------


def _poly_lattice_rows(p: int, phibar: ModPoly, dim: int) -> list[list[int]]:
    """Rows spanning {h of degree < dim : h mod (p, phibar) == 0}."""
    n = phibar.degree
    rows = []
    for i in range(n):
        row = [0] * dim
        row[i] = p
        rows.append(row)
    lift = list(phibar.monic().coeffs)
    for j in range(dim - n):
        row = [0] * dim
        for k, c in enumerate(lift):
            row[j + k] = c
        rows.append(row)
    return rows


def gjl_select(
    p: int,
    n: int,
    f: IntPoly,
    combo_bound: int = 32,
    region: MurphyRegion | None = None,
    lll_delta: float = 0.99999,
    lll_eta: float = 0.50001,
) -> PolyPair:
    """Generalized Joux-Lercier for a given small-coefficient f.

    f mod p must have an irreducible factor of degree exactly n; the
    lattice of degree <= deg(f) - 1 polynomials divisible by that factor is
    LLL-reduced and g is chosen among bounded combinations of the reduced
    rows by Murphy E.
    """
    D_plus_1 = f.degree
    if D_plus_1 < n + 1:
        raise ValueError("need deg f >= n + 1")
    if not is_irreducible_q(f):
        raise ValueError("f must be irreducible over Q")
    factors = factor_modpoly(f.mod(p))
    deg_n = [fac for fac, mult in factors if fac.degree == n and mult == 1]
    if not deg_n:
        raise ValueError("no degree-n factor")
    phibar = deg_n[0]
    dim = D_plus_1  # polynomials of degree <= D = deg f - 1
    rows = _poly_lattice_rows(p, phibar, dim)
    red = lll_reduce(IntLattice(rows), delta=lll_delta, eta=lll_eta)
    basis = [IntPoly(r) for r in red.basis]
    norms = [g.max_norm() for g in basis]
    min_norm = min(norms)
    norm_cap = (combo_bound + 1) * min_norm

    candidates: list[IntPoly] = []
    seen = set()

    def push(g: IntPoly):
        if g.is_zero() or g.degree != dim - 1 or g.max_norm() > norm_cap:
            return
        g = g.primitive_part()
        key = g.coeffs if g.coeffs[-1] > 0 else tuple(-c for c in g.coeffs)
        if key not in seen:
            seen.add(key)
            candidates.append(g)

    for g in basis:
        push(g)
    # bounded combination pass over the two shortest rows, plus a sparse
    # sweep mixing in the remaining ones
    order = sorted(range(len(basis)), key=lambda i: norms[i])
    b0, b1 = basis[order[0]], basis[order[1]]
    for lam in range(-8, 9):
        for mu in range(-8, 9):
            if lam or mu:
                push(lam * b0 + mu * b1)
    for idx in order[2:]:
        for lam in (-2, -1, 1, 2):
            push(b0 + lam * basis[idx])
            push(b1 + lam * basis[idx])

    af = alpha(f, 400)
    candidates.sort(key=lambda gg: alpha(gg, 120))
    best = None
    for g in candidates[:12]:
        if not is_irreducible_q(g):
            continue
        phi = gcd_mod(f, g, p)
        if phi.degree != n or not modpoly_is_irreducible(phi):
            continue
        ag = alpha(g, 400)
        e, _ = murphy_e(f, g, af, ag, region)
        k = (-e, _log2_norm(g), g.coeffs)
        if best is None or k < best[0]:
            best = (k, g)
    if best is None:
        raise ValueError("no admissible g found in the reduced lattice")
    return make_pair(f, best[1], p, n, "GJL", galois_order=1, region=region)


# -- JLSV1 -------------------------------------------------------------------


def jlsv1_select(
    p: int,
    n: int = 3,
    family: GaloisFamily = DEFAULT_FAMILY,
    alpha_cut: float = -2.0,
    combo_bound: int = 32,
    t0: int | None = None,
    search_budget: int = 3000,
    seed: int = 1,
    region: MurphyRegion | None = None,
) -> PolyPair:
    """JLSV1 within the cyclic family: f = psi_{t0} with t0 near sqrt(p).

    With t0 given the search is skipped.  g comes from a rational
    reconstruction u/v = t0 mod p (the trivial (t0, 1) pair is excluded)
    and is refined by g <- lam*f + mu*g over small lam, mu.
    """
    rng = random.Random(seed)
    base = math.isqrt(p)
    rank_region = MurphyRegion(skew=1.0, points=320)

    def build(t: int) -> PolyPair | None:
        f = family.psi(t)
        if not modpoly_is_irreducible(f.mod(p)):
            return None
        af = alpha(f, 400)
        cands = rational_reconstruction(t % p, p, bound=2 * base)
        pool = []
        for u, v in cands:
            if v == 1 or math.gcd(u, v) != 1:
                continue
            g0 = v * family.g0 + u * family.g1  # v*psi_{u/v} cleared
            for lam in range(-4, 5):
                g = g0 + lam * f if lam else g0
                if g.is_zero() or g.degree != n:
                    continue
                g = g.primitive_part()
                if _log2_norm(g) > 0.5 * math.log2(p) + 6:
                    continue
                pool.append(g)
        pool = _dedupe_polys(pool)
        pool.sort(key=lambda gg: alpha(gg, 120))
        best = None
        for g in pool[:10]:
            if not is_irreducible_q(g):
                continue
            phi = gcd_mod(f, g, p)
            if phi.degree != n or not modpoly_is_irreducible(phi):
                continue
            ag = alpha(g, 400)
            e, _ = murphy_e(f, g, af, ag, rank_region)
            key = (-e, _log2_norm(g), g.coeffs)
            if best is None or key < best[0]:
                best = (key, g)
        if best is None:
            return None
        return make_pair(f, best[1], p, n, "JLSV1", galois_order=3, region=region)

    if t0 is not None:
        pair = build(t0)
        if pair is None:
            raise ValueError("given t0 does not yield an admissible pair")
        return pair

    best_pair = None
    fallback = None
    for _ in range(search_budget):
        t = base + rng.randrange(max(base // 2, 2))
        f = family.psi(t)
        if not modpoly_is_irreducible(f.mod(p)):
            continue
        af = alpha(f, 200)
        if fallback is None or af < fallback[0]:
            fallback = (af, t)
        if af > alpha_cut:
            continue
        pair = build(t)
        if pair is not None and (best_pair is None or pair.scores.murphy_e > best_pair.scores.murphy_e):
            best_pair = pair
            break  # first pair passing the alpha cut wins; cut governs quality
    if best_pair is not None:
        return best_pair
    if fallback is None:
        raise ValueError("no irreducible family member found")
    pair = build(fallback[1])
    if pair is None:
        raise ValueError("family search failed to produce a pair")
    return pair


# -- JLSV2 -------------------------------------------------------------------


def jlsv2_select(
    p: int,
    n: int,
    D: int,
    seed: int = 1,
    region: MurphyRegion | None = None,
    max_tries: int = 64,
) -> PolyPair:
    """JLSV2: g of degree n with coefficients near W = Q^(1/(D+1)) (the
    integer root lift), f of degree D from the LLL-reduced lattice of
    multiples of g mod p."""
    if D < n + 1:
        raise ValueError("need D >= n + 1")
    W = int(gmpy2.iroot(gmpy2.mpz(p) ** n, D + 1)[0])
    rng = random.Random(seed)
    for _ in range(max_tries):
        g = IntPoly([rng.randrange(-W, W + 1) for _ in range(n)] + [1])
        gbar = g.mod(p)
        if gbar.degree != n or not modpoly_is_irreducible(gbar):
            continue
        if not is_irreducible_q(g):
            continue
        rows = _poly_lattice_rows(p, gbar, D + 1)
        red = lll_reduce(IntLattice(rows))
        rank_region = MurphyRegion(skew=1.0, points=320)
        ag = alpha(g, 120)
        best = None
        for row in red.basis:
            f = IntPoly(row).primitive_part()
            if f.degree != D or not is_irreducible_q(f):
                continue
            phi = gcd_mod(f, g, p)
            if phi.degree != n or not modpoly_is_irreducible(phi):
                continue
            af = alpha(f, 120)
            e, _ = murphy_e(f, g, af, ag, rank_region)
            key = (-e, _log2_norm(f), f.coeffs)
            if best is None or key < best[0]:
                best = (key, f)
        if best is not None:
            return make_pair(best[1], g, p, n, "JLSV2", galois_order=1, region=region)
    raise ValueError("jlsv2 construction failed within retry budget")


# -- Galois orbit -----------------------------------------------------------


def galois_orbit_map(a: int, b: int) -> list[tuple[int, int]]:
    """Orbit of (a, b) under sigma(<a - b x>) for the family automorphism:
    (a, b) -> (b, -a-b) -> (-a-b, a)."""
    if a == 0 and b == 0:
        raise ValueError("degenerate pair")
    return [(a, b), (b, -a - b), (-a - b, a)]


def canonical_pair(a: int, b: int) -> tuple[int, int]:
    """Sign-normalized representative: lexicographic min of (a,b), (-a,-b)."""
    return min((a, b), (-a, -b))


def canonical_orbit(a: int, b: int) -> tuple[int, int]:
    """Canonical representative of the sign-extended sigma orbit."""
    return min(canonical_pair(x, y) for x, y in galois_orbit_map(a, b))
