"""Integer factorization and smoothness testing.

The pipeline is trial division up to a small bound, then Brent's cycle
variant of Pollard rho under an iteration budget derived from the effort
parameter.  Factors beyond the rho budget are delegated to sympy when the
effort allows it, otherwise they are reported as an unfactored composite
cofactor so callers can decide.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

import gmpy2

_SMALL_PRIMES: list[int] = []


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, int(limit ** 0.5) + 1):
        if flags[i]:
            flags[i * i:: i] = b"\x00" * len(range(i * i, limit + 1, i))
    return [i for i in range(limit + 1) if flags[i]]


def primes_upto(limit: int) -> list[int]:
    global _SMALL_PRIMES
    if not _SMALL_PRIMES or _SMALL_PRIMES[-1] < limit:
        _SMALL_PRIMES = _sieve(max(limit, 1 << 16))
    # bisect for the prefix
    import bisect

    return _SMALL_PRIMES[: bisect.bisect_right(_SMALL_PRIMES, limit)]


_MR_BASES_64 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int) -> bool:
    """Deterministic Miller-Rabin below 2^64, BPSW-backed test above."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    if n < (1 << 64):
        return _miller_rabin(n, _MR_BASES_64)
    return bool(gmpy2.is_prime(n, 25))


def _miller_rabin(n: int, bases) -> bool:
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in bases:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    return int(gmpy2.next_prime(n))


@dataclass
class Factorization:
    """sign * prod(p^e) * cofactor == value; cofactor 1 when complete."""

    factors: list[tuple[int, int]] = field(default_factory=list)
    sign: int = 1
    cofactor: int = 1

    def value(self) -> int:
        v = self.sign
        for p, e in self.factors:
            v *= p ** e
        return v * self.cofactor

    @property
    def complete(self) -> bool:
        return self.cofactor == 1

    def largest_factor(self) -> int:
        return max((p for p, _ in self.factors), default=1)

    def to_string(self) -> str:
        parts = []
        for p, e in self.factors:
            parts.append(str(p) if e == 1 else f"{p}^{e}")
        body = " * ".join(parts) if parts else "1"
        if self.cofactor != 1:
            body += f" * C{self.cofactor.bit_length()}({self.cofactor})"
        return ("-" if self.sign < 0 else "") + body

    def to_json(self) -> dict:
        return {
            "sign": self.sign,
            "factors": [[p, e] for p, e in self.factors],
            "cofactor": self.cofactor,
        }


def _brent_rho(n: int, budget: int, seed: int = 1) -> int | None:
    """One Brent-rho attempt; returns a nontrivial factor or None."""
    if n % 2 == 0:
        return 2
    rng = random.Random(seed ^ n)
    n_ = gmpy2.mpz(n)
    for _ in range(3):
        y = gmpy2.mpz(rng.randrange(1, n - 1))
        c = gmpy2.mpz(rng.randrange(1, n - 1))
        m = 128
        g = r = q = gmpy2.mpz(1)
        x = ys = y
        count = 0
        while g == 1 and count < budget:
            x = y
            for _ in range(r):
                y = (y * y + c) % n_
            k = 0
            while k < r and g == 1:
                ys = y
                step = min(m, r - k)
                for _ in range(step):
                    y = (y * y + c) % n_
                    q = q * abs(x - y) % n_
                g = gmpy2.gcd(q, n_)
                k += step
                count += step
            r <<= 1
        if g == n_:
            g = gmpy2.mpz(1)
            while g == 1:
                ys = (ys * ys + c) % n_
                g = gmpy2.gcd(abs(x - ys), n_)
        if 1 < g < n_:
            return int(g)
    return None


def _factor_hard(n: int, out: list[int]) -> bool:
    """Escalation for composites that resisted the rho budget."""
    try:
        import sympy

        fd = sympy.factorint(n, use_ecm=True)
        for p, e in fd.items():
            out.extend([int(p)] * e)
        return True
    except Exception:
        return False


def factor(
    n: int,
    effort: int = 1 << 22,
    trial_bound: int = 10 ** 6,
    allow_heavy: bool = True,
) -> Factorization:
    """Factor n.  effort caps the rho iteration budget per composite.

    Incomplete results carry the remaining composite in ``cofactor``.
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    sign = 1
    if n < 0:
        sign = -1
        n = -n
    fz = Factorization(sign=sign)
    if n == 1:
        return fz
    counts: dict[int, int] = {}
    # trial division over a modest prime table; enough for sieve survivors
    for p in primes_upto(min(trial_bound, max(3, math.isqrt(n) + 1))):
        if p * p > n:
            break
        while n % p == 0:
            counts[p] = counts.get(p, 0) + 1
            n //= p
    if n > 1:
        stack = [n]
        loose: list[int] = []
        while stack:
            m = stack.pop()
            if is_probable_prime(m):
                loose.append(m)
                continue
            d = None
            for attempt in range(4):
                d = _brent_rho(m, effort, seed=attempt + 1)
                if d:
                    break
            if d is None:
                found: list[int] = []
                if allow_heavy and _factor_hard(m, found):
                    loose.extend(found)
                else:
                    fz.cofactor *= m
                continue
            stack.append(d)
            stack.append(m // d)
        for p in loose:
            counts[p] = counts.get(p, 0) + 1
    fz.factors = sorted(counts.items())
    return fz


def is_smooth(n: int, bound: int, effort: int = 1 << 22) -> tuple[bool, Factorization]:
    """True iff every prime factor of n is < bound; witness returned when true."""
    if n == 0:
        raise ValueError("smoothness of 0 is undefined")
    fz = factor(n, effort=effort)
    if not fz.complete:
        # cannot certify smoothness with an unfactored cofactor
        return False, fz
    ok = all(p < bound for p, _ in fz.factors)
    return ok, fz


def trial_divide(n: int, primes: list[int]) -> tuple[dict[int, int], int]:
    """Strip the given primes from |n|; returns (exponents, remaining)."""
    n = abs(n)
    out: dict[int, int] = {}
    for p in primes:
        if n == 1:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out[p] = e
    return out, n
