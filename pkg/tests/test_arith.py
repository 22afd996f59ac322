import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from movnfs.arith import (
    IntLattice,
    IntPoly,
    ModPoly,
    dickman_rho,
    factor,
    gcd_mod,
    is_irreducible_mod,
    is_irreducible_q,
    is_probable_prime,
    is_smooth,
    lll_reduce,
    rational_reconstruction,
    resultant,
    roots_mod,
)
from movnfs.data import mnt170


def P(*coeffs_high_first):
    return IntPoly.from_high(coeffs_high_first)


class TestResultant:
    def test_shared_root_gives_zero(self):
        f = P(1, 0, -2)  # x^2 - 2
        assert resultant(f, f) == 0

    def test_monic_linear_evaluates(self):
        # Res(x^2+1, x-2) = f(2) = 5
        assert resultant(P(1, 0, 1), P(1, -2)) == 5

    def test_published_lift_resultant(self):
        f = IntPoly(mnt170.F_COEFFS)
        lift = IntPoly(mnt170.TARGET1_LIFT)
        assert resultant(f, lift) == mnt170.TARGET1_NORM

    def test_second_lift_resultant_sign(self):
        f = IntPoly(mnt170.F_COEFFS)
        lift = IntPoly(mnt170.TARGET2_LIFT)
        assert resultant(f, lift) == mnt170.TARGET2_NORM
        assert mnt170.TARGET2_NORM < 0

    def test_zero_polynomial_rejected(self):
        with pytest.raises(ValueError):
            resultant(IntPoly([]), P(1, 1))

    @given(
        st.lists(st.integers(-30, 30), min_size=2, max_size=5),
        st.lists(st.integers(-30, 30), min_size=2, max_size=5),
    )
    @settings(max_examples=60, deadline=None)
    def test_swap_sign_rule(self, fc, gc):
        f, g = IntPoly(fc), IntPoly(gc)
        if f.is_zero() or g.is_zero():
            return
        sign = -1 if (f.degree * g.degree) % 2 else 1
        assert resultant(f, g) == sign * resultant(g, f)

    @given(
        st.lists(st.integers(-9, 9), min_size=2, max_size=4),
        st.lists(st.integers(-9, 9), min_size=2, max_size=4),
        st.lists(st.integers(-9, 9), min_size=2, max_size=4),
    )
    @settings(max_examples=40, deadline=None)
    def test_multiplicativity(self, fc, c1, c2):
        f, p1, p2 = IntPoly(fc), IntPoly(c1), IntPoly(c2)
        if f.is_zero() or p1.is_zero() or p2.is_zero():
            return
        assert resultant(f, p1 * p2) == resultant(f, p1) * resultant(f, p2)

    def test_agrees_with_homogeneous_eval(self):
        rng = random.Random(7)
        for _ in range(50):
            f = IntPoly([rng.randrange(-50, 51) for _ in range(rng.randrange(2, 7))])
            if f.is_zero() or f.degree < 1:
                continue
            a, b = rng.randrange(-20, 21), rng.randrange(1, 20)
            if math.gcd(a, b) != 1:
                continue
            assert resultant(f, IntPoly([a, -b])) == f.eval_homogeneous(a, b)


class TestGcdMod:
    def test_self_gcd_is_monic_self(self):
        f = P(2, 0, 4)
        g = gcd_mod(f, f, 7)
        assert g == f.mod(7).monic()

    def test_small_example(self):
        # x^2+1 = (x+1)^2 mod 2
        g = gcd_mod(P(1, 0, 1), P(1, 1), 2)
        assert g == ModPoly([1, 1], 2)

    def test_published_pair_common_factor(self):
        f = IntPoly(mnt170.F_COEFFS)
        g = IntPoly(mnt170.G_COEFFS)
        phi = gcd_mod(f, g, mnt170.P)
        assert phi.degree == 3
        assert phi.lc == 1
        from movnfs.arith import modpoly_is_irreducible

        assert modpoly_is_irreducible(phi)

    def test_composite_modulus_rejected(self):
        with pytest.raises(ValueError):
            gcd_mod(P(1, 1), P(1, 2), 15)


class TestFactor:
    def test_small(self):
        fz = factor(28)
        assert fz.factors == [(2, 2), (7, 1)] and fz.sign == 1 and fz.complete

    def test_negative_sign(self):
        fz = factor(-12)
        assert fz.sign == -1 and fz.value() == -12

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            factor(0)

    def test_published_norm_factorizations(self):
        fz = factor(mnt170.TARGET1_NORM)
        assert fz.complete
        assert fz.factors == mnt170.TARGET1_FACTORS
        assert fz.largest_factor() == 801060739300538627
        assert is_probable_prime(801060739300538627)

        fz2 = factor(mnt170.TARGET2_NORM)
        assert fz2.complete and fz2.sign == -1
        assert fz2.factors == mnt170.TARGET2_FACTORS
        assert fz2.largest_factor() == 19530910835315983
        assert is_probable_prime(19530910835315983)
        # 54 bits in the floor(log2) sense
        assert 54 <= math.log2(fz2.largest_factor()) < 55

    def test_recompose_random_bulk(self):
        # recomposition must be exact whether or not the factorization
        # completed, so the bulk run caps the effort and skips escalation
        rng = random.Random(1234)
        saw_partial = False
        for _ in range(10 ** 4):
            n = rng.getrandbits(128) | 1
            fz = factor(n, effort=1 << 10, trial_bound=3000, allow_heavy=False)
            assert fz.value() == n
            if not fz.complete:
                saw_partial = True
                assert not is_probable_prime(fz.cofactor)
        assert saw_partial

    def test_recompose_random_complete(self):
        rng = random.Random(99)
        for _ in range(150):
            n = rng.getrandbits(128) | 1
            fz = factor(n, effort=1 << 16)
            assert fz.value() == n
            for p, _ in fz.factors:
                assert is_probable_prime(p)

    def test_string_roundtrip(self):
        assert factor(28).to_string() == "2^2 * 7"
        assert factor(-5).to_string() == "-5"


class TestSmooth:
    def test_one_is_smooth(self):
        ok, _ = is_smooth(1, 2)
        assert ok

    def test_small_cases(self):
        assert is_smooth(2 * 3 * 5 * 7, 8)[0]
        assert not is_smooth(2 * 11, 8)[0]

    def test_published_norm_smooth_at_2_60(self):
        ok, fz = is_smooth(mnt170.TARGET1_NORM, 1 << 60)
        assert ok and fz.complete
        assert fz.largest_factor().bit_length() == 60  # 59-bit-indexed: value < 2^60


class TestRationalReconstruction:
    def test_unit(self):
        cands = rational_reconstruction(1, 101)
        assert (1, 1) in cands

    def test_half(self):
        p = 1009
        y = (p + 1) // 2
        cands = rational_reconstruction(y, p)
        assert (1, 2) in cands

    def test_published_g_built_from_reconstruction(self):
        # the published pair is a small combination of adjacent convergents
        # (size a few bits above sqrt(p), as linear combining allows)
        p = mnt170.P
        u, v = mnt170.G_RECON_U, mnt170.G_RECON_V
        y0 = u * pow(v, -1, p) % p
        assert (28 * y0 * y0 + 16 * y0 - 109) % p == 0
        cands = rational_reconstruction(y0, p, bound=1 << 88)
        hits = []
        for i in range(len(cands)):
            for j in range(i + 1, len(cands)):
                (u1, v1), (u2, v2) = cands[i], cands[j]
                det = u1 * v2 - u2 * v1
                if det == 0:
                    continue
                lam, mu = u * v2 - v * u2, u1 * v - v1 * u
                if lam % det == 0 and mu % det == 0:
                    lam, mu = lam // det, mu // det
                    if max(abs(lam), abs(mu)) <= 32:
                        hits.append((i, j, lam, mu))
        assert hits, "published pair not reachable by small combinations"

    @given(st.integers(2, 10 ** 6))
    @settings(max_examples=60, deadline=None)
    def test_congruence_and_coprimality(self, seed):
        rng = random.Random(seed)
        p = 10 ** 9 + 7
        y = rng.randrange(p)
        for u, v in rational_reconstruction(y, p):
            assert (u - v * y) % p == 0
            assert math.gcd(u, v) == 1


class TestLLL:
    def test_identity_fixed(self):
        eye = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
        assert lll_reduce(IntLattice(eye)).basis == eye

    def test_shear(self):
        red = lll_reduce(IntLattice([[1, 0], [10 ** 12, 1]]))
        vecs = {tuple(map(abs, r)) for r in red.basis}
        assert vecs == {(1, 0), (0, 1)}

    def test_dependent_rows_raise(self):
        with pytest.raises(ValueError):
            lll_reduce(IntLattice([[1, 2], [2, 4]]))

    def test_first_vector_bound_random(self):
        rng = random.Random(99)
        for _ in range(25):
            m = [[rng.randrange(-1000, 1000) for _ in range(4)] for _ in range(4)]
            lat = IntLattice(m)
            det2 = lat.gram_det()
            if det2 == 0:
                continue
            red = lll_reduce(lat)
            norm1 = sum(x * x for x in red.basis[0]) ** 0.5
            bound = 2 ** ((4 - 1) / 4) * (abs(det2) ** 0.5) ** (1 / 4)
            assert norm1 <= bound * (1 + 1e-9)

    def test_gram_det_invariant(self):
        rng = random.Random(5)
        for _ in range(20):
            m = [[rng.randrange(-50, 50) for _ in range(3)] for _ in range(3)]
            lat = IntLattice(m)
            if lat.gram_det() == 0:
                continue
            assert lll_reduce(lat).gram_det() == lat.gram_det()


class TestDickman:
    def test_flat_below_one(self):
        assert dickman_rho(0) == 1.0
        assert dickman_rho(0.5) == 1.0
        assert dickman_rho(1.0) == 1.0

    def test_closed_form_on_1_2(self):
        assert abs(dickman_rho(2.0) - (1 - math.log(2))) < 1e-12
        assert abs(dickman_rho(1.5) - (1 - math.log(1.5))) < 1e-12

    def test_rho_3(self):
        assert abs(dickman_rho(3.0) - 0.0486083883) < 1e-9

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            dickman_rho(-1)

    def test_decreasing_and_ode(self):
        from movnfs.arith.dickman import _self_test

        prev = 1.0
        for i in range(10, 200):
            cur = dickman_rho(i / 10)
            assert cur <= prev + 1e-15
            prev = cur
        assert _self_test() < 1e-5


class TestIrreducibility:
    def test_mod_q(self):
        assert is_irreducible_mod(P(1, 0, 1), 3)  # x^2+1 mod 3
        assert not is_irreducible_mod(P(1, 0, 1), 2)
        assert is_irreducible_mod(P(1, 0, -2), 5)

    def test_over_q(self):
        assert is_irreducible_q(P(1, 0, -2))
        assert not is_irreducible_q(P(1, 0, -4))
        assert is_irreducible_q(IntPoly(mnt170.F_COEFFS))
        assert is_irreducible_q(IntPoly(mnt170.G_COEFFS))
        assert not is_irreducible_q(P(1, 2, 1))

    def test_roots_mod(self):
        f = P(1, 0, -2)  # x^2 - 2
        assert roots_mod(f, 7) == [3, 4]
        assert roots_mod(f, 5) == []
        big = 10 ** 9 + 7
        rs = roots_mod(P(1, 0, -4), big)
        assert rs == [2, big - 2]
