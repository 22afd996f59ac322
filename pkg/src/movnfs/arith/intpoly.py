"""Dense univariate polynomials over Z and Z/mZ.

Coefficients are stored lowest degree first with trailing zeros stripped,
so ``degree`` is ``len(coeffs) - 1`` and the zero polynomial has an empty
coefficient tuple and degree -1.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence


class IntPoly:
    """Univariate polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def from_high(cls, coeffs_high_first: Sequence[int]) -> "IntPoly":
        return cls(list(reversed(list(coeffs_high_first))))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly([-x for x in self.coeffs])

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([other * x for x in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly([])
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "IntPoly":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return IntPoly([0] * k + list(self.coeffs))

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_homogeneous(self, a: int, b: int) -> int:
        """F(a, b) = sum_i c_i a^i b^(d-i), the resultant of self with a - b*x."""
        d = self.degree
        if d < 0:
            return 0
        pb = [1] * (d + 1)
        for i in range(1, d + 1):
            pb[i] = pb[i - 1] * b
        acc = 0
        pa = 1
        for i, c in enumerate(self.coeffs):
            if c:
                acc += c * pa * pb[d - i]
            pa *= a
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def primitive_part(self) -> "IntPoly":
        g = self.content()
        if g <= 1:
            return self
        return IntPoly([c // g for c in self.coeffs])

    def max_norm(self) -> int:
        return max((abs(c) for c in self.coeffs), default=0)

    def reverse(self) -> "IntPoly":
        return IntPoly(list(reversed(self.coeffs)))

    def compose_shift_scale(self, r: int, q: int) -> "IntPoly":
        """Return f(r + q*x), used by the average-valuation recursion."""
        d = self.degree
        if d < 0:
            return self
        # Taylor shift: c[i] becomes the coefficient of x^i in f(x + r)
        c = list(self.coeffs)
        for i in range(d + 1):
            for j in range(d - 1, i - 1, -1):
                c[j] += r * c[j + 1]
        return IntPoly([c[k] * q ** k for k in range(d + 1)])

    def mod(self, m: int) -> "ModPoly":
        return ModPoly([c % m for c in self.coeffs], m)

    def to_string(self, hexa: bool = False) -> str:
        """Comma-separated coefficients, lowest degree first."""
        if hexa:
            return ",".join(format_signed_hex(c) for c in self.coeffs)
        return ",".join(str(c) for c in self.coeffs)

    @classmethod
    def parse(cls, s: str) -> "IntPoly":
        parts = [t.strip() for t in s.split(",") if t.strip()]
        return cls([parse_signed_int(t) for t in parts])


def format_signed_hex(v: int) -> str:
    return ("-0x%x" % -v) if v < 0 else ("0x%x" % v)


def parse_signed_int(s: str) -> int:
    return int(s, 0)


class ModPoly:
    """Polynomial over Z/mZ, coefficients reduced to [0, m)."""

    __slots__ = ("coeffs", "modulus")

    def __init__(self, coeffs: Iterable[int], modulus: int):
        if modulus <= 0:
            raise ValueError("modulus must be positive")
        c = [int(x) % modulus for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)
        self.modulus = modulus

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return (
            isinstance(other, ModPoly)
            and self.modulus == other.modulus
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.coeffs, self.modulus))

    def __repr__(self):
        return f"ModPoly({list(self.coeffs)}, mod {self.modulus})"

    def _check(self, other: "ModPoly"):
        if self.modulus != other.modulus:
            raise ValueError("modulus mismatch")

    def __add__(self, other: "ModPoly") -> "ModPoly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] = (out[i] + x) % self.modulus
        return ModPoly(out, self.modulus)

    def __sub__(self, other: "ModPoly") -> "ModPoly":
        self._check(other)
        a, b = list(self.coeffs), other.coeffs
        if len(a) < len(b):
            a += [0] * (len(b) - len(a))
        for i, x in enumerate(b):
            a[i] = (a[i] - x) % self.modulus
        return ModPoly(a, self.modulus)

    def __mul__(self, other):
        if isinstance(other, int):
            return ModPoly([other * x for x in self.coeffs], self.modulus)
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ModPoly([], self.modulus)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return ModPoly([c % self.modulus for c in out], self.modulus)

    __rmul__ = __mul__

    def monic(self) -> "ModPoly":
        if self.is_zero():
            return self
        inv = pow(self.lc, -1, self.modulus)
        return ModPoly([c * inv for c in self.coeffs], self.modulus)

    def divmod(self, other: "ModPoly"):
        """Division with remainder; requires lc(other) invertible mod m."""
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        m = self.modulus
        inv = pow(other.lc, -1, m)
        rem = list(self.coeffs)
        db = other.degree
        quot = [0] * max(len(rem) - db, 0)
        for k in range(len(rem) - 1, db - 1, -1):
            c = (rem[k] * inv) % m
            if c:
                quot[k - db] = c
                for j, oc in enumerate(other.coeffs):
                    rem[k - db + j] = (rem[k - db + j] - c * oc) % m
        return ModPoly(quot, m), ModPoly(rem[:db], m)

    def __mod__(self, other: "ModPoly") -> "ModPoly":
        return self.divmod(other)[1]

    def mulmod(self, other: "ModPoly", modpoly: "ModPoly") -> "ModPoly":
        return (self * other) % modpoly

    def powmod(self, e: int, modpoly: "ModPoly") -> "ModPoly":
        if e < 0:
            raise ValueError("negative exponent")
        result = ModPoly([1], self.modulus)
        base = self % modpoly
        while e:
            if e & 1:
                result = result.mulmod(base, modpoly)
            base = base.mulmod(base, modpoly)
            e >>= 1
        return result

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.modulus
        return acc

    def derivative(self) -> "ModPoly":
        return ModPoly([i * c for i, c in enumerate(self.coeffs)][1:], self.modulus)

    def lift(self) -> IntPoly:
        """Lift with coefficients in [0, m)."""
        return IntPoly(self.coeffs)

    def lift_centered(self) -> IntPoly:
        """Lift with coefficients in (-m/2, m/2]."""
        m = self.modulus
        return IntPoly([c - m if 2 * c > m else c for c in self.coeffs])


def gcd_mod(f: IntPoly, g: IntPoly, p: int) -> ModPoly:
    """Monic gcd of f and g over F_p.  p must be prime."""
    from .factorint import is_probable_prime

    if not is_probable_prime(p):
        raise ValueError("modulus %d is not prime" % p)
    a, b = f.mod(p), g.mod(p)
    if a.is_zero() and b.is_zero():
        raise ValueError("both polynomials vanish mod p")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Res(f, g) over Z via the subresultant polynomial remainder sequence."""
    if f.is_zero() or g.is_zero():
        raise ValueError("zero polynomial")
    a, b = f, g
    sign = 1
    if a.degree < b.degree:
        if (a.degree * b.degree) % 2 == 1:
            sign = -sign
        a, b = b, a
    if b.degree == 0:
        return sign * b.coeffs[0] ** a.degree
    # subresultant PRS bookkeeping (Collins); exact over Z
    s = 1
    gpart = 1
    h = 1
    while True:
        d = a.degree - b.degree
        if (a.degree * b.degree) % 2 == 1:
            s = -s
        r = _prem(a, b)
        if r.is_zero():
            return 0
        a = b
        denom = gpart * h ** d
        b = IntPoly([c // denom for c in r.coeffs])
        gpart = a.lc
        h = (gpart ** d) // (h ** (d - 1)) if d > 0 else h
        if b.degree == 0:
            d = a.degree
            res = (b.coeffs[0] ** d) // (h ** (d - 1)) if d > 0 else 1
            return sign * s * res


def _prem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a reduced by b."""
    da, db = a.degree, b.degree
    lb = b.lc
    rem = [c * lb ** (da - db + 1) for c in a.coeffs]
    for k in range(da, db - 1, -1):
        c = rem[k]
        if c % lb != 0:
            raise ArithmeticError("pseudo-division invariant broken")
        q = c // lb
        for j, bc in enumerate(b.coeffs):
            rem[k - db + j] -= q * bc
    return IntPoly(rem[:db])


def roots_mod(f: IntPoly, q: int) -> list[int]:
    """Roots of f mod q (q prime), without multiplicity."""
    fm = f.mod(q)
    if fm.is_zero():
        return list(range(q))
    if q <= 4096:
        return [r for r in range(q) if fm(r) == 0]
    # gcd with x^q - x isolates the linear factors, then split them
    xq = ModPoly([0, 1], q).powmod(q, fm)
    lin = _gcd_modpoly(xq - ModPoly([0, 1], q), fm)
    return sorted(_split_linear(lin.monic(), q))


def _gcd_modpoly(a: ModPoly, b: ModPoly) -> ModPoly:
    while not b.is_zero():
        a, b = b, a % b
    return a


def _split_linear(h: ModPoly, q: int, _salt: int = 1) -> list[int]:
    """Roots of a product of distinct linear factors over F_q."""
    if h.degree <= 0:
        return []
    if h.degree == 1:
        a0, a1 = h.coeffs[0], h.coeffs[1]
        return [(-a0 * pow(a1, -1, q)) % q]
    # Cantor-Zassenhaus style split with shifted Euler criterion
    a = _salt
    while True:
        probe = ModPoly([a, 1], q).powmod((q - 1) // 2, h) - ModPoly([1], q)
        d = _gcd_modpoly(probe, h).monic()
        if 0 < d.degree < h.degree:
            rest = h.divmod(d)[0]
            return _split_linear(d, q, a + 1) + _split_linear(rest, q, a + 1)
        a += 1


def is_irreducible_mod(f: IntPoly, q: int) -> bool:
    """Irreducibility of f mod q for prime q (degree must be preserved)."""
    fm = f.mod(q)
    if fm.is_zero() or fm.degree != f.degree:
        return False
    return modpoly_is_irreducible(fm)


def modpoly_is_irreducible(fm: ModPoly) -> bool:
    """Rabin irreducibility test over F_q, q = fm.modulus prime."""
    q = fm.modulus
    d = fm.degree
    if d <= 0:
        return False
    if d == 1:
        return True
    fm = fm.monic()
    x = ModPoly([0, 1], q)
    # x^(q^d) == x mod f and gcd(x^(q^(d/r)) - x, f) == 1 for prime r | d
    xq = x.powmod(q, fm)
    powers = {1: xq}
    cur = xq
    for i in range(2, d + 1):
        cur = _compose_frobenius(cur, xq, fm)
        powers[i] = cur
    if powers[d] != x % fm:
        return False
    for r in _prime_divisors(d):
        h = powers[d // r] - x
        if _gcd_modpoly(h, fm).degree > 0:
            return False
    return True


def _compose_frobenius(a: ModPoly, xq: ModPoly, fm: ModPoly) -> ModPoly:
    """a(xq) mod fm, i.e. one more application of Frobenius."""
    acc = ModPoly([], fm.modulus)
    for c in reversed(a.coeffs):
        acc = acc.mulmod(xq, fm) + ModPoly([c], fm.modulus)
    return acc


def factor_degrees_mod(f: IntPoly, q: int) -> list[int] | None:
    """Degrees of the irreducible factors of f mod q, or None when f mod q
    degenerates (degree drop or repeated factors)."""
    fm = f.mod(q)
    if fm.is_zero() or fm.degree != f.degree:
        return None
    fm = fm.monic()
    if _gcd_modpoly(fm, fm.derivative()).degree > 0:
        return None
    degs: list[int] = []
    x = ModPoly([0, 1], q)
    rem = fm
    cur = x % rem
    d = 0
    while rem.degree > 0:
        d += 1
        if 2 * d > rem.degree:
            degs.append(rem.degree)
            break
        cur = cur.powmod(q, rem)
        h = _gcd_modpoly(cur - x, rem).monic()
        if h.degree > 0:
            degs.extend([d] * (h.degree // d))
            rem = rem.divmod(h)[0]
            cur = cur % rem
    return sorted(degs)


def factor_modpoly(fm: ModPoly, _salt: int = 1) -> list[tuple[ModPoly, int]]:
    """Full factorization over F_q into monic irreducibles with multiplicity.

    Requires q > deg(fm) or a separable input (true everywhere this is
    called: the moduli are cryptographic-size primes).
    """
    q = fm.modulus
    out: list[tuple[ModPoly, int]] = []
    work = fm.monic()
    if work.degree <= 0:
        return out
    sqfree = work.divmod(_gcd_modpoly(work, work.derivative()).monic())[0]
    if sqfree.degree == 0:
        raise ArithmeticError("inseparable component (q <= degree)")
    for fac in _factor_squarefree(sqfree, q, _salt):
        e = 0
        while True:
            quo, rem = work.divmod(fac)
            if not rem.is_zero():
                break
            work = quo
            e += 1
        out.append((fac, e))
    if work.degree != 0:
        raise ArithmeticError("factorization incomplete")
    out.sort(key=lambda t: (t[0].degree, t[0].coeffs))
    return out


def _factor_squarefree(h: ModPoly, q: int, salt: int) -> list[ModPoly]:
    """Distinct-degree then equal-degree splitting of squarefree monic h."""
    parts: list[tuple[ModPoly, int]] = []
    x = ModPoly([0, 1], q)
    rem = h
    cur = x % rem
    d = 0
    while rem.degree > 0:
        d += 1
        if 2 * d > rem.degree:
            parts.append((rem, rem.degree))
            break
        cur = cur.powmod(q, rem)
        g = _gcd_modpoly(cur - x, rem).monic()
        if g.degree > 0:
            parts.append((g, d))
            rem = rem.divmod(g)[0]
            cur = cur % rem
    out = []
    for prod, d in parts:
        out.extend(_equal_degree_split(prod, d, q, salt))
    return out


def _equal_degree_split(h: ModPoly, d: int, q: int, salt: int) -> list[ModPoly]:
    if h.degree == d:
        return [h.monic()]
    if q == 2:
        raise NotImplementedError("equal-degree splitting over F_2 unsupported")
    exp = (q ** d - 1) // 2
    a = salt
    while True:
        # deterministic probe sequence keeps factorization reproducible
        probe_poly = ModPoly([a % q, 1, a % q], q) if h.degree > 2 else ModPoly([a % q, 1], q)
        w = probe_poly.powmod(exp, h) - ModPoly([1], q)
        g = _gcd_modpoly(w, h).monic()
        if 0 < g.degree < h.degree:
            rest = h.divmod(g)[0]
            return _equal_degree_split(g, d, q, salt + 1) + _equal_degree_split(
                rest, d, q, salt + 1
            )
        a += 1


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


_IRRED_TEST_PRIMES = (
    5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
    73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149,
)


def is_irreducible_q(f: IntPoly) -> bool:
    """Irreducibility over Q (content ignored), certified where possible.

    Strategy: a prime q with f mod q irreducible certifies the result; the
    intersection of factor-degree patterns across several primes can also
    certify it.  The rare undecided cases fall back to an exact
    factorization.
    """
    d = f.degree
    if d <= 0:
        return False
    if d == 1:
        return True
    fp = f.primitive_part()
    if _has_rational_root(fp):
        return False
    if d <= 3:
        return True  # degree 2-3 reducible only via a rational root
    possible = None
    for q in _IRRED_TEST_PRIMES:
        if fp.lc % q == 0:
            continue
        degs = factor_degrees_mod(fp, q)
        if degs is None:
            continue
        if degs == [d]:
            return True
        sums = _subset_sums(degs)
        possible = sums if possible is None else (possible & sums)
        if possible is not None and all(s in (0, d) for s in possible):
            return True
    return _is_irreducible_exact(fp)


def _has_rational_root(f: IntPoly) -> bool:
    c0, cd = f.coeffs[0], f.lc
    if c0 == 0:
        return True
    for p in _divisors(abs(c0)):
        for q in _divisors(abs(cd)):
            if math.gcd(p, q) != 1:
                continue
            for sp in (p, -p):
                # root sp/q  <=>  sum c_i sp^i q^(d-i) == 0
                if f.eval_homogeneous(sp, q) == 0:
                    return True
    return False


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _subset_sums(degs: list[int]) -> set[int]:
    sums = {0}
    for x in degs:
        sums |= {s + x for s in sums}
    return sums


def _is_irreducible_exact(f: IntPoly) -> bool:
    import sympy

    x = sympy.Symbol("x")
    poly = sympy.Poly(list(reversed(f.coeffs)), x)
    _, factors = poly.factor_list()
    return len(factors) == 1 and factors[0][1] == 1


def rational_reconstruction(y: int, p: int, bound: int | None = None) -> list[tuple[int, int]]:
    """All extended-Euclid convergents (u, v) with u = v*y mod p,
    |u| <= bound, 0 < |v| <= bound and gcd(u, v) = 1.

    Returned with v > 0, ordered as produced by the remainder sequence.
    Empty when nothing fits the bound.
    """
    if not 0 <= y < p:
        raise ValueError("residue out of range")
    if bound is None:
        bound = math.isqrt(p)
    out = []
    r0, r1 = p, y
    t0, t1 = 0, 1
    while r1:
        if abs(r1) <= bound and 0 < abs(t1) <= bound:
            u, v = r1, t1
            if v < 0:
                u, v = -u, -v
            if math.gcd(u, v) == 1:
                out.append((u, v))
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    return out
