import random

import pytest

from movnfs import curves as cv
from movnfs.arith import ModPoly
from movnfs.data import mnt170
from movnfs.extfield import ExtField, prime_field


def small_ext(p=10007, n=3):
    # deterministic irreducible cubic scan
    from movnfs.arith import modpoly_is_irreducible

    for c in range(2, p):
        phi = ModPoly([c, 1, 0, 1], p)  # x^3 + x + c
        if modpoly_is_irreducible(phi):
            return ExtField(p, n, phi)
    raise AssertionError


class TestExtField:
    def test_pow_identities(self):
        f = small_ext()
        rng = random.Random(1)
        x = f.random_element(rng)
        while x.is_zero():
            x = f.random_element(rng)
        assert (x ** 0).is_one()
        assert (x ** (f.order() - 1)).is_one()

    def test_frobenius_cubed_identity(self):
        f = small_ext()
        rng = random.Random(2)
        for _ in range(5):
            x = f.random_element(rng)
            assert x.frobenius().frobenius().frobenius() == x

    def test_inverse(self):
        f = small_ext()
        rng = random.Random(3)
        for _ in range(10):
            x = f.random_element(rng)
            if x.is_zero():
                continue
            assert (x * x.inverse()).is_one()
        with pytest.raises(ZeroDivisionError):
            f.zero().inverse()

    def test_sqrt_roundtrip(self):
        f = small_ext()
        rng = random.Random(4)
        hits = 0
        for _ in range(20):
            x = f.random_element(rng)
            s = (x * x).sqrt()
            if s is not None:
                assert (s * s) == (x * x)
                hits += 1
        assert hits == 20

    def test_reduce_long_input(self):
        f = small_ext()
        e = f.element([1] * 7)
        assert len(e.coeffs) == 3

    def test_irreducibility_enforced(self):
        with pytest.raises(ValueError):
            ExtField(7, 2, ModPoly([6, 0, 1], 7))  # x^2 - 1 splits


class TestMntSearch:
    def test_target_curve_found_by_family_scan(self):
        c = cv.mnt_params_for_y(3, mnt170.Y, cofactor_limit=10 ** 6)
        assert c is not None
        assert c.p == mnt170.P
        assert c.ell == mnt170.ELL
        assert c.cofactor == 7 ** 2 * 313
        assert c.trace == 6 * mnt170.Y - 1

    def test_mnt4_curve(self):
        c = cv.mnt_params_for_y(4, mnt170.MNT4_Y, cofactor_limit=100)
        assert c is not None
        assert c.p == mnt170.MNT4_P
        assert c.ell == mnt170.MNT4_ELL
        assert c.cofactor == 34
        assert c.trace == mnt170.MNT4_Y + 1

    def test_small_exhaustive_consistency(self):
        for c in cv.mnt_search(3, (2, 400), cofactor_limit=10 ** 4, min_ell=2):
            assert c.p == 12 * c.y ** 2 - 1
            from movnfs.arith import is_probable_prime

            assert is_probable_prime(c.p)
            assert c.order == c.p + 1 - c.trace
            assert c.order == c.cofactor * c.ell

    def test_empty_range(self):
        assert cv.mnt_search(3, (100, 100)) == []

    def test_bad_degree(self):
        with pytest.raises(ValueError):
            cv.mnt_search(5, (2, 10))

    def test_threaded_matches_serial(self):
        a = cv.mnt_search(3, (2, 600), cofactor_limit=100, min_ell=2)
        b = cv.mnt_search(3, (2, 600), cofactor_limit=100, min_ell=2, threads=3)
        assert a == b


class TestValidate:
    def test_target_validates(self):
        c = cv.mnt_params_for_y(3, mnt170.Y, cofactor_limit=10 ** 6)
        rep = cv.validate_curve(c)
        assert rep.ok
        deg = cv.embedding_degree(c.p, c.ell)
        assert deg == 3

    def test_tampered_p_fails_primality(self):
        c = cv.mnt_params_for_y(3, mnt170.Y, cofactor_limit=10 ** 6)
        from dataclasses import replace

        bad = replace(c, p=c.p + 2)
        rep = cv.validate_curve(bad)
        assert "p-prime" in rep.failures()

    def test_toy_embedding_matches_bruteforce(self, toy_params_list):
        for c in toy_params_list:
            # multiplicative order of p mod ell
            order = 1
            acc = c.p % c.ell
            while acc != 1:
                acc = acc * c.p % c.ell
                order += 1
            assert order == cv.embedding_degree(c.p, c.ell) == 3


class TestRecoverCoeffs:
    def test_tiny_example(self):
        a, b = cv.recover_coeffs(7, [(0, 1), (-1, 0)])
        assert (a, b) == (0, 1)

    def test_target_challenge_points(self):
        a, b = cv.recover_coeffs(mnt170.P, [mnt170.G1, mnt170.P_CHALLENGE])
        for (x, y) in (mnt170.G1, mnt170.P_CHALLENGE):
            assert (y * y - x ** 3 - a * x - b) % mnt170.P == 0

    def test_roundtrip_random_toy(self, toy_curves):
        rng = random.Random(7)
        for c in toy_curves:
            crv = cv.base_curve(c)
            p1 = crv.random_point(rng)
            p2 = crv.random_point(rng)
            if p1.x == p2.x:
                continue
            a, b = cv.recover_coeffs(
                c.p,
                [(p1.x.coeffs[0], p1.y.coeffs[0]), (p2.x.coeffs[0], p2.y.coeffs[0])],
            )
            assert (a, b) == (c.a, c.b)

    def test_inconsistent_points(self):
        with pytest.raises(ValueError):
            cv.recover_coeffs(10007, [(1, 1), (2, 1), (3, 5)])


class TestGroupLaw:
    def test_mul_zero(self, toy_curves):
        crv = cv.base_curve(toy_curves[0])
        pt = crv.random_point(random.Random(1))
        assert cv.ec_mul(0, pt).is_infinity

    def test_ell_times_generator(self, toy_curves):
        for c in toy_curves:
            g = cv.subgroup_generator(c, seed=3)
            assert cv.ec_mul(c.ell, g).is_infinity
            assert not g.is_infinity

    def test_challenge_scalar(self):
        a, b = cv.recover_coeffs(mnt170.P, [mnt170.G1, mnt170.P_CHALLENGE])
        c = cv.mnt_params_for_y(3, mnt170.Y, cofactor_limit=10 ** 6).with_coeffs(a, b)
        crv = cv.base_curve(c)
        g1 = crv.point(*mnt170.G1)
        target = crv.point(*mnt170.P_CHALLENGE)
        assert cv.ec_mul(mnt170.ELL, g1).is_infinity
        assert cv.ec_mul(mnt170.U_LOG, g1) == target

    def test_associativity_commutativity(self, toy_curves):
        rng = random.Random(42)
        crv = cv.base_curve(toy_curves[0])
        for _ in range(50):
            p1 = crv.random_point(rng)
            p2 = crv.random_point(rng)
            p3 = crv.random_point(rng)
            assert cv.ec_add(p1, p2) == cv.ec_add(p2, p1)
            assert cv.ec_add(cv.ec_add(p1, p2), p3) == cv.ec_add(p1, cv.ec_add(p2, p3))

    def test_mul_distributes(self, toy_curves):
        rng = random.Random(43)
        crv = cv.base_curve(toy_curves[0])
        pt = crv.random_point(rng)
        for _ in range(10):
            m = rng.randrange(1, 1000)
            n = rng.randrange(1, 1000)
            assert cv.ec_mul(m + n, pt) == cv.ec_add(cv.ec_mul(m, pt), cv.ec_mul(n, pt))


class TestExtensionOrder:
    def test_n1_is_order(self, toy_params_list):
        for c in toy_params_list:
            assert cv.extension_order(c, 1) == c.order

    def test_bruteforce_tiny(self):
        # y = 1 gives p = 11; count points of a curve over F_11^3 directly
        params = cv.mnt_params_for_y(3, 1, cofactor_limit=100)
        assert params is not None and params.p == 11
        # any nonsingular curve with trace matching would be needed for a
        # true count; instead check the recurrence against the zeta product
        t = params.trace
        p = params.p
        a1 = p + 1 - t
        # roots of x^2 - t x + p give #E(F_{p^k}) = p^k + 1 - (r1^k + r2^k)
        import cmath

        disc = cmath.sqrt(t * t - 4 * p)
        r1, r2 = (t + disc) / 2, (t - disc) / 2
        for k in (1, 2, 3, 4):
            expected = p ** k + 1 - round((r1 ** k + r2 ** k).real)
            assert cv.extension_order(params, k) == expected

    def test_ell_squared_divides_ext3(self, toy_params_list):
        for c in toy_params_list:
            assert cv.extension_order(c, 3) % (c.ell * c.ell) == 0
