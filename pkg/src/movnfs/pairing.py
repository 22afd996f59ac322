"""Tate pairing via Miller's algorithm and the MOV/FR reduction.

e : E(F_p)[ell] x E(F_{p^n}) -> mu_ell, computed as f_{ell,P} evaluated at
the divisor (Q + R) - (R) followed by exponentiation to (p^n - 1)/ell.
The first argument stays on the base curve, so all line coefficients are
base-field scalars; evaluation points live in the extension.  Degenerate
evaluations (a loop point colliding with Q + R or R) are retried with a
fresh R.  No denominator elimination is assumed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .curves import Curve, CurveParams, Point, ec_mul, extension_order
from .extfield import ExtField, ExtFieldElement


class PairingDegenerate(Exception):
    """Internal: evaluation hit a zero of a line; retried with a new shift."""


@dataclass
class ReducedDlpInstance:
    """Finite-field DLP instance produced by the reduction.

    log_T(U) mod ell equals the curve-side logarithm log_G1(P).
    """

    field: ExtField
    ell: int
    T: ExtFieldElement
    U: ExtFieldElement

    def check(self) -> bool:
        return (
            (self.T ** self.ell).is_one()
            and (self.U ** self.ell).is_one()
            and not self.T.is_one()
        )


def extension_curve(c: CurveParams, fld: ExtField) -> Curve:
    if c.a is None or c.b is None:
        raise ValueError("curve coefficients not set")
    return Curve(fld, [c.a], [c.b])


def embed_point(P: Point, ext_curve: Curve) -> Point:
    """Base-curve point into E(F_{p^n})."""
    if P.is_infinity:
        return ext_curve.infinity()
    return ext_curve.point([P.x.coeffs[0]], [P.y.coeffs[0]])


def _miller_ratio(P: Point, ell: int, S: Point, R: Point, fld: ExtField) -> ExtFieldElement:
    """f_{ell,P}(S) / f_{ell,P}(R) with P on the base curve, S, R on the
    extension curve; raises PairingDegenerate on zero line values.

    For odd prime ell and P of exact order ell, T never reaches a 2-torsion
    point and the single T + P = infinity event is the final addition,
    handled by the vertical-line case.
    """
    p = fld.p
    a = P.curve.a.coeffs[0]
    px, py = P.x.coeffs[0], P.y.coeffs[0]
    xS, yS = S.x, S.y
    xR, yR = R.x, R.y

    nS = dS = nR = dR = fld.one()
    tx, ty = px, py
    done = False

    def line_eval(lam: int, cx: int, cy: int):
        """(y - cy) - lam*(x - cx) at S and at R."""
        c0 = (lam * cx - cy) % p
        vS = yS - lam * xS + c0
        vR = yR - lam * xR + c0
        if vS.is_zero() or vR.is_zero():
            raise PairingDegenerate
        return vS, vR

    def vert_eval(cx: int):
        vS = xS - cx
        vR = xR - cx
        if vS.is_zero() or vR.is_zero():
            raise PairingDegenerate
        return vS, vR

    for bit in bin(ell)[3:]:  # after the leading 1
        if done:
            raise ValueError("first argument has order smaller than ell")
        if ty == 0:
            raise ValueError("unexpected 2-torsion point in the Miller loop")
        lam = (3 * tx * tx + a) * pow(2 * ty, -1, p) % p
        lS, lR = line_eval(lam, tx, ty)
        x2 = (lam * lam - 2 * tx) % p
        y2 = (lam * (tx - x2) - ty) % p
        vS, vR = vert_eval(x2)
        nS = nS * nS * lS
        nR = nR * nR * lR
        dS = dS * dS * vS
        dR = dR * dR * vR
        tx, ty = x2, y2
        if bit == "1":
            if tx == px and (ty + py) % p == 0:
                # T + P = infinity: vertical through T, v_infinity = 1
                lS, lR = vert_eval(tx)
                nS = nS * lS
                nR = nR * lR
                done = True
                continue
            lam = (py - ty) * pow(px - tx, -1, p) % p
            lS, lR = line_eval(lam, tx, ty)
            x2 = (lam * lam - tx - px) % p
            y2 = (lam * (tx - x2) - ty) % p
            vS, vR = vert_eval(x2)
            nS = nS * lS
            nR = nR * lR
            dS = dS * vS
            dR = dR * vR
            tx, ty = x2, y2
    if not done:
        raise ValueError("first argument does not have order ell")
    return (nS * dR) / (dS * nR)


def tate_pairing(
    P: Point,
    Q: Point,
    ell: int,
    fld: ExtField,
    seed: int = 1,
    max_retries: int = 32,
) -> ExtFieldElement:
    """Reduced Tate pairing e(P, Q) in mu_ell.

    P: order-ell point on the base curve.  Q: point on the extension
    curve.  The final exponentiation maps to the ell-torsion of F_{p^n}^*.
    """
    if P.is_infinity or Q.is_infinity:
        return fld.one()
    if not ec_mul(ell, P).is_infinity:
        raise ValueError("first pairing argument must have order dividing ell")
    ext_curve = Q.curve
    exp = (fld.order() - 1) // ell
    rng = random.Random(seed)
    for _ in range(max_retries):
        R = ext_curve.random_point(rng)
        S = R + Q
        if S.is_infinity or R.is_infinity:
            continue
        try:
            val = _miller_ratio(P, ell, S, R, fld)
        except PairingDegenerate:
            continue
        out = val ** exp
        return out
    raise RuntimeError("pairing evaluation kept hitting degenerate shifts")


def make_g2(
    c: CurveParams,
    fld: ExtField,
    g1: Point,
    seed: int = 1,
    max_retries: int = 64,
) -> Point:
    """Deterministic-from-seed generator of E(F_{p^n})[ell], non-degenerate
    against g1 under the Tate pairing."""
    ext_c = extension_curve(c, fld)
    h = extension_order(c, c.n)
    v = 0
    m = h
    while m % c.ell == 0:
        m //= c.ell
        v += 1
    if v == 0:
        raise ValueError("ell does not divide the extension order")
    rng = random.Random(seed)
    for _ in range(max_retries):
        Q0 = ext_c.random_point(rng)
        Q = ec_mul(m, Q0)
        if Q.is_infinity:
            continue
        while not ec_mul(c.ell, Q).is_infinity:
            Q = ec_mul(c.ell, Q)
        t = tate_pairing(g1, Q, c.ell, fld, seed=seed)
        if not t.is_one():
            return Q
    raise RuntimeError("could not find a non-degenerate ell-torsion point")


def mov_reduce(
    c: CurveParams,
    g1: Point,
    target: Point,
    fld: ExtField,
    seed: int = 1,
) -> ReducedDlpInstance:
    """Transfer log_{g1}(target) on the curve to log_T(U) in F_{p^n}."""
    g2 = make_g2(c, fld, g1, seed=seed)
    ext_c = g2.curve
    T = tate_pairing(g1, g2, c.ell, fld, seed=seed)
    if target.is_infinity:
        U = fld.one()
    else:
        U = tate_pairing(target, g2, c.ell, fld, seed=seed)
    inst = ReducedDlpInstance(field=fld, ell=c.ell, T=T, U=U)
    if not inst.check():
        raise RuntimeError("degenerate reduction instance")
    return inst
