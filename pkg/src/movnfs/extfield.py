"""Finite fields F_p and F_{p^n} = F_p[x]/(phi).

Elements carry a reference to their field descriptor; descriptors are
immutable and safe to share.  The same element interface (arithmetic
operators, inverse, sqrt) backs both the base field and the extension so
the curve group law is generic over either.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import gmpy2

from .arith import ModPoly, modpoly_is_irreducible


class ExtField:
    """F_{p^n} represented as F_p[x]/(phi), phi monic irreducible."""

    __slots__ = ("p", "n", "phi", "_phi_monic")

    def __init__(self, p: int, n: int, phi: ModPoly | Sequence[int], check: bool = True):
        if isinstance(phi, ModPoly):
            if phi.modulus != p:
                raise ValueError("modulus mismatch")
            mp = phi.monic()
        else:
            mp = ModPoly(phi, p).monic()
        if mp.degree != n:
            raise ValueError("phi must have degree n")
        if check and n > 1 and not modpoly_is_irreducible(mp):
            raise ValueError("phi is reducible mod p")
        self.p = p
        self.n = n
        self.phi = mp
        self._phi_monic = tuple(mp.coeffs)

    # -- construction -----------------------------------------------------
    def element(self, coeffs) -> "ExtFieldElement":
        if isinstance(coeffs, ExtFieldElement):
            if coeffs.field is not self and coeffs.field != self:
                raise ValueError("field mismatch")
            return coeffs
        if isinstance(coeffs, int):
            coeffs = [coeffs]
        c = [x % self.p for x in coeffs]
        if len(c) > self.n:
            c = self._reduce_long(c)
        c += [0] * (self.n - len(c))
        return ExtFieldElement(self, tuple(c))

    def _reduce_long(self, c: list[int]) -> list[int]:
        rem = ModPoly(c, self.p) % self.phi
        out = list(rem.coeffs)
        return out

    def zero(self) -> "ExtFieldElement":
        return self.element(0)

    def one(self) -> "ExtFieldElement":
        return self.element(1)

    def gen(self) -> "ExtFieldElement":
        """Image of x, the common root t of the defining pair."""
        return self.element([0, 1])

    def order(self) -> int:
        return self.p ** self.n

    def __eq__(self, other):
        return (
            isinstance(other, ExtField)
            and self.p == other.p
            and self.n == other.n
            and self._phi_monic == other._phi_monic
        )

    def __hash__(self):
        return hash((self.p, self.n, self._phi_monic))

    def __repr__(self):
        return f"ExtField(p={self.p:#x}, n={self.n})"

    # -- bulk helpers ------------------------------------------------------
    def random_element(self, rng) -> "ExtFieldElement":
        return self.element([rng.randrange(self.p) for _ in range(self.n)])


@dataclass(frozen=True)
class ExtFieldElement:
    field: ExtField
    coeffs: tuple[int, ...]

    def _like(self, other) -> "ExtFieldElement":
        if isinstance(other, ExtFieldElement):
            return other
        if isinstance(other, int):
            return self.field.element(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and all(c == 0 for c in self.coeffs[1:])

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        o = self._like(other)
        p = self.field.p
        return ExtFieldElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return ExtFieldElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._like(other))

    def __rsub__(self, other):
        return self._like(other) + (-self)

    def __mul__(self, other):
        o = self._like(other)
        f = self.field
        n, p = f.n, f.p
        if n == 1:
            return ExtFieldElement(f, (self.coeffs[0] * o.coeffs[0] % p,))
        prod = [0] * (2 * n - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    prod[i + j] += a * b
        # reduce by monic phi
        phi = f._phi_monic
        for k in range(2 * n - 2, n - 1, -1):
            c = prod[k] % p
            if c:
                for j in range(n):
                    prod[k - n + j] -= c * phi[j]
            prod[k] = 0
        return ExtFieldElement(f, tuple(x % p for x in prod[:n]))

    __rmul__ = __mul__

    def inverse(self) -> "ExtFieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inversion of zero field element")
        f = self.field
        if f.n == 1:
            return ExtFieldElement(f, (int(gmpy2.invert(self.coeffs[0], f.p)),))
        a = ModPoly(self.coeffs, f.p)
        inv = _modpoly_invert(a, f.phi)
        c = list(inv.coeffs) + [0] * (f.n - inv.degree - 1)
        return ExtFieldElement(f, tuple(c))

    def __truediv__(self, other):
        return self * self._like(other).inverse()

    def __rtruediv__(self, other):
        return self._like(other) * self.inverse()

    def __pow__(self, e: int) -> "ExtFieldElement":
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def frobenius(self) -> "ExtFieldElement":
        """x -> x^p."""
        return self ** self.field.p

    def norm_to_base(self) -> int:
        """Norm down to F_p: product of the n conjugates."""
        acc = self
        out = self
        for _ in range(self.field.n - 1):
            acc = acc.frobenius()
            out = out * acc
        assert all(c == 0 for c in out.coeffs[1:]), "norm not rational"
        return out.coeffs[0]

    def sqrt(self) -> "ExtFieldElement | None":
        """A square root, or None for non-residues (Tonelli-Shanks in F_q)."""
        f = self.field
        q = f.order()
        if self.is_zero():
            return self
        if q % 2 == 0:
            raise ValueError("even characteristic unsupported")
        legendre = self ** ((q - 1) // 2)
        if not legendre.is_one():
            return None
        if q % 4 == 3:
            return self ** ((q + 1) // 4)
        # Tonelli-Shanks with a deterministic non-residue scan
        s = q - 1
        e = 0
        while s % 2 == 0:
            s //= 2
            e += 1
        nonres = None
        seed = 2
        while nonres is None:
            digits = []
            v = seed
            while v:
                digits.append(v % f.p)
                v //= f.p
            cand = f.element(digits)
            if not cand.is_zero() and not (cand ** ((q - 1) // 2)).is_one():
                nonres = cand
            seed += 1
        g = nonres ** s
        x = self ** ((s + 1) // 2)
        b = self ** s
        r = e
        while True:
            t = b
            m = 0
            while not t.is_one():
                t = t * t
                m += 1
                if m == r:
                    return None
            if m == 0:
                return x
            gs = g ** (1 << (r - m - 1))
            g = gs * gs
            x = x * gs
            b = b * g
            r = m

    def to_string(self, hexa: bool = True) -> str:
        if hexa:
            return ",".join("0x%x" % c for c in self.coeffs)
        return ",".join(str(c) for c in self.coeffs)

    def __repr__(self):
        return f"ExtFieldElement([{self.to_string()}])"


def _modpoly_invert(a: ModPoly, phi: ModPoly) -> ModPoly:
    """Extended Euclid in F_p[x] modulo monic phi."""
    p = a.modulus
    r0, r1 = phi, a % phi
    s0, s1 = ModPoly([], p), ModPoly([1], p)
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    if r0.degree != 0:
        raise ZeroDivisionError("element not invertible (gcd has positive degree)")
    inv = pow(r0.coeffs[0], -1, p)
    return ModPoly([c * inv for c in s0.coeffs], p)


def prime_field(p: int) -> ExtField:
    """F_p presented through the same interface (n = 1, phi = x)."""
    return ExtField(p, 1, ModPoly([0, 1], p), check=False)
