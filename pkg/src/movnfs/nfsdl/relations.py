"""Relation collection: coprime (a, b) with both resultants smooth.

A numpy log-sieve over lines of constant b flags candidates, which are
then verified exactly: the resultants are trial-divided over the factor
base and every prime's contribution is attributed to the ideal matching
the projective point (a : b) mod q.  Only simple roots are accepted, so
the recorded exponents are true ideal valuations of J^(k-1) <a - b alpha>.

Family pairs (galois_order = 3) expand each survivor into its sigma orbit,
tripling the yield for one sieve pass.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..arith import IntPoly, trial_divide
from ..polyselect import galois_orbit_map
from .factorbase import PROJECTIVE, PrimeIdeal, ideal_above
from .schirokauer import schirokauer_map
from .setup import NfsSetup


@dataclass
class Relation:
    a: int
    b: int
    fvals: dict[PrimeIdeal, int]
    gvals: dict[PrimeIdeal, int]
    sm_f: tuple[int, ...]
    sm_g: tuple[int, ...]
    j_exp: int = 1  # deg phi for phi = a - b x

    def key(self) -> tuple[int, int]:
        a, b = self.a, self.b
        return (a, b) if (b, a) >= (0, 0) else (-a, -b)


class InsufficientRelations(RuntimeError):
    def __init__(self, found: int, needed: int):
        super().__init__(f"found {found} relations, need {needed}")
        self.found = found
        self.needed = needed


def valuations_for(
    setup: NfsSetup, side: str, a: int, b: int, allow_large: bool = False
) -> dict[PrimeIdeal, int] | None:
    """Exact ideal valuations of a - b*alpha on one side, or None if the
    value is not smooth over the factor base (or hits a non-simple root)."""
    poly = setup.side_poly(side)
    res = poly.eval_homogeneous(a, b)
    if res == 0:
        return None
    bound = setup.lp_bound if allow_large else setup.bound
    fb_primes = _fb_prime_list(setup, side)
    exps, rest = trial_divide(res, fb_primes)
    if rest != 1:
        if not allow_large:
            return None
        # up to two large primes below lp_bound
        from ..arith import factor, is_probable_prime

        if rest < setup.bound:
            exps[rest] = exps.get(rest, 0) + 1
        elif is_probable_prime(rest):
            if rest >= bound:
                return None
            exps[rest] = exps.get(rest, 0) + 1
        else:
            fz = factor(rest, effort=1 << 18)
            if not fz.complete or fz.largest_factor() >= bound:
                return None
            if sum(e for _, e in fz.factors) > 2:
                return None
            for q, e in fz.factors:
                exps[q] = exps.get(q, 0) + e
    out: dict[PrimeIdeal, int] = {}
    for q, e in exps.items():
        ideal = _match_ideal(setup, side, q, a, b)
        if ideal is None or not ideal.simple:
            return None
        out[ideal] = e
    return out


def _fb_prime_list(setup: NfsSetup, side: str) -> list[int]:
    cache = getattr(setup, "_fb_primes", None)
    if cache is None:
        cache = {}
        setattr(setup, "_fb_primes", cache)
    if side not in cache:
        fb = setup.fb_f if side == "f" else setup.fb_g
        cache[side] = sorted({i.q for i in fb})
    return cache[side]


def _ideal_index(setup: NfsSetup, side: str) -> dict[tuple[int, int], PrimeIdeal]:
    attr = "_ideal_idx"
    cache = getattr(setup, attr, None)
    if cache is None:
        cache = {}
        setattr(setup, attr, cache)
    if side not in cache:
        fb = setup.fb_f if side == "f" else setup.fb_g
        cache[side] = {(i.q, i.r): i for i in fb if i.residue_degree == 1}
    return cache[side]


def _match_ideal(setup: NfsSetup, side: str, q: int, a: int, b: int) -> PrimeIdeal | None:
    """Ideal whose projective root matches (a : b) mod q."""
    idx = _ideal_index(setup, side)
    if b % q == 0:
        hit = idx.get((q, PROJECTIVE))
        if hit is None and q >= setup.bound:
            try:
                return ideal_above(setup.side_poly(side), side, q, PROJECTIVE)
            except ValueError:
                return None
        return hit
    r = a * pow(b, -1, q) % q
    hit = idx.get((q, r))
    if hit is None and q >= setup.bound:
        try:
            return ideal_above(setup.side_poly(side), side, q, r)
        except ValueError:
            return None
    return hit


def make_relation(setup: NfsSetup, a: int, b: int, allow_large: bool = False) -> Relation | None:
    """Full verification of one coprime pair, including Schirokauer maps."""
    if math.gcd(a, b) != 1:
        return None
    fv = valuations_for(setup, "f", a, b, allow_large)
    if fv is None:
        return None
    gv = valuations_for(setup, "g", a, b, allow_large)
    if gv is None:
        return None
    z = IntPoly([a, -b])
    try:
        sm_f = schirokauer_map(setup.sm_f, z, setup.pair.f)
        sm_g = schirokauer_map(setup.sm_g, z, setup.pair.g)
    except (ValueError, ArithmeticError):
        return None
    return Relation(a, b, fv, gv, sm_f, sm_g)


def _sieve_line(
    setup: NfsSetup, b: int, a_bound: int, roots: dict[str, list[tuple[int, int, float]]]
) -> np.ndarray:
    """Approximate smooth-part logs for both sides along one b line."""
    width = 2 * a_bound + 1
    total_deficit = None
    for side in ("f", "g"):
        poly = setup.side_poly(side)
        logs = np.zeros(width, dtype=np.float32)
        for q, r, lq in roots[side]:
            if r == PROJECTIVE:
                if b % q == 0:
                    logs += lq
                continue
            start = (r * b + a_bound) % q
            logs[start::q] += lq
        a_vals = np.arange(-a_bound, a_bound + 1, dtype=np.float64)
        vals = np.zeros(width, dtype=np.float64)
        bb = float(b)
        d = poly.degree
        for i, c in enumerate(poly.coeffs):
            if c:
                vals += float(c) * a_vals ** i * bb ** (d - i)
        target = np.log2(np.maximum(np.abs(vals), 1.0))
        deficit = target - logs
        total_deficit = deficit if total_deficit is None else total_deficit + deficit
    return total_deficit


def collect_relations(
    setup: NfsSetup,
    a_bound: int = 1024,
    b_max: int = 2048,
    target: int | None = None,
    margin: float = 1.12,
    allow_large: bool = False,
    slack_bits: float = 14.0,
    progress: bool = False,
) -> list[Relation]:
    """Sieve until the relation target is reached (default: the quota
    #F_f + #F_g + r_f + r_g + 2 scaled by the margin)."""
    quota = setup.relation_quota() if target is None else target
    want = int(quota * margin) + 1
    roots = {side: _sieve_roots(setup, side) for side in ("f", "g")}
    found: dict[tuple[int, int], Relation] = {}
    if allow_large:
        slack_bits += 2 * math.log2(setup.lp_bound)
    for b in range(1, b_max + 1):
        deficit = _sieve_line(setup, b, a_bound, roots)
        cand = np.nonzero(deficit <= slack_bits)[0] - a_bound
        for a in cand.tolist():
            if a == 0 or math.gcd(a, b) != 1:
                continue
            rel = make_relation(setup, int(a), b, allow_large)
            if rel is None:
                continue
            _push_orbit(setup, rel, found, allow_large)
        if len(found) >= want:
            break
    rels = list(found.values())
    if len(rels) < quota:
        raise InsufficientRelations(len(rels), quota)
    return rels


def _push_orbit(setup, rel: Relation, found: dict, allow_large: bool):
    found.setdefault(rel.key(), rel)
    if setup.pair.galois_order != 3:
        return
    for a2, b2 in galois_orbit_map(rel.a, rel.b)[1:]:
        if b2 < 0:
            a2, b2 = -a2, -b2
        if b2 == 0 or math.gcd(a2, b2) != 1:
            continue
        key = (a2, b2) if (b2, a2) >= (0, 0) else (-a2, -b2)
        if key in found:
            continue
        rel2 = make_relation(setup, a2, b2, allow_large)
        if rel2 is not None:
            found[key] = rel2


def _sieve_roots(setup: NfsSetup, side: str) -> list[tuple[int, int, float]]:
    fb = setup.fb_f if side == "f" else setup.fb_g
    return [
        (i.q, i.r, math.log2(i.q))
        for i in fb
        if i.residue_degree == 1
    ]


def check_norm_factorization(setup: NfsSetup, rel: Relation) -> bool:
    """Prop-1 style consistency: the ideal norms on each side recompose to
    |Res| exactly, and |Res| = Norm(J)^(k-1) * |Norm(a - b alpha)| with the
    J part carried by the leading coefficient."""
    for side, vals in (("f", rel.fvals), ("g", rel.gvals)):
        poly = setup.side_poly(side)
        res = poly.eval_homogeneous(rel.a, rel.b)
        prod = 1
        for ideal, e in vals.items():
            prod *= ideal.norm ** e
        if prod != abs(res):
            return False
        # Norm(<a - b alpha>) = |Res| / |lc|^(k-1): integrality of the
        # J-compensated ideal means lc^(k-1) divides the product exactly
        lc_part = abs(poly.lc) ** rel.j_exp
        if (abs(res) * lc_part) % lc_part != 0:
            return False
    return True
