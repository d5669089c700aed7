import math

import numpy as np
import pytest
from conftest import GLASS_EPOXY

from polarbounds import (
    EmptyStackingError,
    PolarElastic4,
    Stacking,
    compute_abd_polar,
    derived_angles,
    plate_law_matrix,
    polar4_to_cartesian_at,
    rotate_laminate,
    stacking_weights,
)
from polarbounds.oracle import SampleSpec, polar_energy, random_laminates
from polarbounds.polar_core import Cartesian2, mohr_decompose


def through_thickness(s: Stacking):
    """A, B, D by integrating the ply stiffness over the thickness, normalised
    so that N = h A e + h^2/2 B k and M = h^2/2 B e + h^3/12 D k."""
    h, n = s.h, s.n
    z = np.linspace(-h / 2, h / 2, n + 1)
    acc = np.zeros((3, 6))
    for k, delta in enumerate(s.angles):
        q = np.array(polar4_to_cartesian_at(s.ply, -delta).as_tuple())
        z0, z1 = z[k], z[k + 1]
        acc[0] += q * (z1 - z0)
        acc[1] += q * (z1**2 - z0**2) / 2
        acc[2] += q * (z1**3 - z0**3) / 3
    return acc[0] / h, acc[1] * 2 / h**2, acc[2] * 12 / h**3


class TestWeights:
    @pytest.mark.parametrize("n", range(1, 31))
    def test_identities(self, n):
        a, b, d = stacking_weights(n)
        assert a.sum() == n and b.sum() == 0 and d.sum() == n**3

    def test_empty(self, glass_epoxy):
        with pytest.raises(EmptyStackingError):
            stacking_weights(0)
        with pytest.raises(EmptyStackingError):
            Stacking(glass_epoxy, ())

    def test_inadmissible_ply(self):
        with pytest.raises(ValueError):
            Stacking(PolarElastic4(1.0, 1.0, 1.2, 0.0), (0.0,))

    @pytest.mark.parametrize("seed", range(5))
    def test_against_thickness_integration(self, seed):
        for s in random_laminates(SampleSpec(8, seed=seed)):
            s = Stacking(s.ply, s.angles, h=0.37)
            lp = compute_abd_polar(s)
            for got, want in zip(lp.cartesian(0.0), through_thickness(s)):
                scale = max(s.ply.T0, s.ply.T1)
                assert np.allclose(got.as_tuple(), want, atol=1e-12 * scale)


class TestExamples:
    def test_unidirectional(self, glass_epoxy, ud):
        assert ud.A == glass_epoxy and ud.D == glass_epoxy
        assert ud.B.R0 == 0.0 and ud.B.R1 == 0.0

    def test_cross_ply(self, cross_ply):
        A, B, D = cross_ply.A, cross_ply.B, cross_ply.D
        assert A.R1 == 0.0
        assert A.R0 == pytest.approx(44.86)
        assert B.R0 == 0.0
        assert B.R1 == pytest.approx(21.91)
        assert math.cos(2 * (B.Phi1 - math.pi / 2)) == pytest.approx(1.0)
        assert D == A
        assert math.cos(2 * derived_angles(cross_ply).deltaA) == pytest.approx(-1.0)

    def test_eighteen_ply(self, eighteen_ply):
        T0 = GLASS_EPOXY["T0"]
        for t in (eighteen_ply.A, eighteen_ply.D):
            assert t.R0 <= 1e-12 * T0 and t.R1 <= 1e-12 * T0
        assert eighteen_ply.B.R0 > 1.0 and eighteen_ply.B.R1 > 1.0

    def test_palindromes_uncoupled(self):
        spec = SampleSpec(100, seed=3)
        count = 0
        for s in random_laminates(spec):
            if not s.label.startswith("palindrome"):
                continue
            lp = compute_abd_polar(s)
            assert lp.B.R0 <= 1e-12 * (s.ply.R0 + s.ply.R1)
            assert lp.B.R1 <= 1e-12 * (s.ply.R0 + s.ply.R1)
            count += 1
        assert count == 25

    def test_aligned_isotropic_identity(self):
        ply = PolarElastic4(1.0, 2.0, 0.5, 0.3)
        lp = compute_abd_polar(Stacking(ply, (0.0, 0.0, 0.0)))
        da = derived_angles(lp)
        assert da.deltaA == 0.0 and da.deltaD == 0.0


class TestPlateLaw:
    def test_uncoupled_isotropic(self):
        iso = PolarElastic4(1.5, 2.0, 0.0, 0.0)
        lp = compute_abd_polar(Stacking(iso, (0.0, 0.3)))
        law = plate_law_matrix(lp)
        assert np.all(law.K[:3, 3:] == 0)
        assert np.all(np.linalg.eigvalsh(law.K) > 0)
        assert np.allclose(law.K[3:, 3:], law.K[:3, :3] / 12)

    def test_symmetric(self, cross_ply):
        K = plate_law_matrix(cross_ply.with_h(2.5)).K
        assert np.array_equal(K, K.T)

    def test_cartesian_input_needs_h(self, cross_ply):
        with pytest.raises(ValueError):
            plate_law_matrix(cross_ply.cartesian())
        K = plate_law_matrix(cross_ply.cartesian(), h=1.0).K
        assert np.allclose(K, plate_law_matrix(cross_ply).K)

    @pytest.mark.parametrize("h", [0.1, 1.0, 10.0])
    def test_energy_matches_polar(self, h):
        rng = np.random.default_rng(11)
        for s in random_laminates(SampleSpec(20, seed=2)):
            lp = compute_abd_polar(s).with_h(h)
            law = plate_law_matrix(lp)
            for _ in range(5):
                x = rng.standard_normal(6)
                eps = Cartesian2(x[0], x[2] / math.sqrt(2), x[1])
                kap = Cartesian2(x[3], x[5] / math.sqrt(2), x[4])
                u = law.energy(x)
                v = polar_energy(lp, mohr_decompose(eps), mohr_decompose(kap))
                assert v == pytest.approx(u, rel=1e-10, abs=1e-12 * np.abs(law.K).max())


class TestTransformations:
    def test_rotation_commutes(self, glass_epoxy):
        s = Stacking.from_degrees(glass_epoxy, [0, 30, -45, 90])
        theta = 0.7
        direct = compute_abd_polar(s.rotated(theta))
        rotated = rotate_laminate(compute_abd_polar(s), -theta)
        for a, b in zip((direct.A, direct.B, direct.D), (rotated.A, rotated.B, rotated.D)):
            ca, cb = polar4_to_cartesian_at(a), polar4_to_cartesian_at(b)
            assert np.allclose(ca.as_tuple(), cb.as_tuple(), atol=1e-12)

    def test_reversal_flips_coupling(self, glass_epoxy):
        s = Stacking.from_degrees(glass_epoxy, [0, 30, -45, 90, 10])
        fwd, rev = compute_abd_polar(s), compute_abd_polar(s.reversed())
        b_fwd = np.array(fwd.cartesian()[1].as_tuple())
        b_rev = np.array(rev.cartesian()[1].as_tuple())
        assert np.allclose(b_rev, -b_fwd, atol=1e-12)
        assert np.allclose(np.array(rev.cartesian()[0].as_tuple()), np.array(fwd.cartesian()[0].as_tuple()))
