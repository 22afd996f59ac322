"""Dickman's rho function.

rho solves u * rho'(u) = -rho(u - 1) with rho = 1 on [0, 1].  Each unit
interval [n, n+1] gets a Taylor expansion about its midpoint; the delay
recurrence links consecutive intervals and the half-unit evaluation radius
keeps the series geometrically convergent, so double precision saturates
well before the 60-term cutoff.
"""

from __future__ import annotations

import math

_UMAX = 40
_TERMS = 60


def _build_tables() -> list[list[float]]:
    tabs = [[1.0] + [0.0] * _TERMS]  # constant 1 about u = 0.5
    for n in range(1, _UMAX):
        c = n + 0.5
        prev = tabs[-1]
        a = [0.0] * (_TERMS + 1)
        for k in range(_TERMS):
            a[k + 1] = -(prev[k] + k * a[k]) / (c * (k + 1))
        # continuity at u = n pins the constant term
        rho_left = sum(pj * 0.5 ** j for j, pj in enumerate(prev))
        tail = sum(a[j] * (-0.5) ** j for j in range(1, _TERMS + 1))
        a[0] = rho_left - tail
        tabs.append(a)
    return tabs


_TABLES = _build_tables()


def dickman_rho(u: float) -> float:
    """rho(u) to at least 6 significant digits on [0, 40]; 0 beyond."""
    if u < 0:
        raise ValueError("rho undefined for negative u")
    if u <= 1.0:
        return 1.0
    n = int(u)
    if u == n:
        n -= 1  # right endpoint of the previous interval
    if n >= len(_TABLES):
        return 0.0
    s = u - n - 0.5
    acc = 0.0
    for c in reversed(_TABLES[n]):
        acc = acc * s + c
    return max(acc, 0.0)


def dickman_rho_log(logx: float, logb: float) -> float:
    """rho(log x / log B): smoothness probability shorthand."""
    if logb <= 0:
        raise ValueError("log of the bound must be positive")
    return dickman_rho(max(logx, 0.0) / logb)


def _self_test() -> float:
    # max defect of the delay ODE at sampled points, used by tests
    worst = 0.0
    for i in range(30, 200):
        u = i / 10.0
        h = 1e-6
        d = (dickman_rho(u + h) - dickman_rho(u - h)) / (2 * h)
        worst = max(worst, abs(u * d + dickman_rho(u - 1)))
    return worst


RHO_2 = 1.0 - math.log(2.0)
