import math
import zlib
from dataclasses import replace

import numpy as np
import pytest
from _builders import synthetic_laminate

from polarbounds import LaminatePolar, PolarElastic4
from polarbounds.bounds import (
    CaseNotApplicableError,
    SpecialCase,
    Verdict,
    VerificationError,
    dispatch_check,
    feasibility_aligned,
    feasibility_general,
    feasibility_special,
)

T0, T1 = 92.38, 86.97


def verdicts_agree(case, aligned, seed, draws=100):
    rng = np.random.default_rng(seed)
    seen = set()
    for _ in range(draws):
        lp = synthetic_laminate(rng, zero=case.defining, aligned=aligned)
        special = feasibility_special(lp, case)
        general = feasibility_general(lp)
        assert special.variant == ("closed form (aligned)" if aligned else "minimised")
        assert special.verdict == general.verdict, (lp, special.margins, general.margins)
        seen.add(special.verdict)
    return seen


@pytest.mark.parametrize("case", list(SpecialCase))
@pytest.mark.parametrize("aligned", [True, False], ids=["aligned", "minimised"])
def test_case_matches_general(case, aligned):
    seen = verdicts_agree(case, aligned, seed=zlib.crc32(f"{case.value}-{aligned}".encode()))
    assert seen == {Verdict.FEASIBLE, Verdict.INFEASIBLE}


class TestCoupledIsotropic:
    def test_margin_example(self, coupled_isotropic):
        r = feasibility_special(coupled_isotropic(30.0), SpecialCase.COUPLED_ISOTROPIC)
        assert r.margin("B_isotropic_quadratic").value == pytest.approx(T0 * T1 - 6 * 900, abs=0.05)
        assert r.margin("B_isotropic_quadratic").value == pytest.approx(2634.3, abs=0.05)
        assert r.verdict is Verdict.FEASIBLE
        assert r.margin("M4_P2").value == r.margin("M4_P3").value

    def test_threshold(self, coupled_isotropic):
        thr = math.sqrt(T0 * T1 / 6)
        assert thr == pytest.approx(36.59, abs=0.005)
        assert feasibility_special(coupled_isotropic(0.999 * thr), "isotropic").verdict is Verdict.FEASIBLE
        assert feasibility_special(coupled_isotropic(1.001 * thr), "isotropic").verdict is Verdict.INFEASIBLE
        # on the threshold the bound is met with equality
        assert feasibility_special(coupled_isotropic(thr), "isotropic").verdict is Verdict.MARGINAL

    def test_eighteen_ply(self, eighteen_ply):
        r = dispatch_check(eighteen_ply, verify=True)
        assert r.case_used == "coupled isotropic"
        assert r.verdict is Verdict.FEASIBLE


class TestFullSquare:
    @pytest.mark.parametrize("frac,expected", [(0.99, Verdict.FEASIBLE), (1.01, Verdict.INFEASIBLE)])
    def test_isotropic_extension_bending(self, frac, expected):
        iso = PolarElastic4(T0, T1, 0.0, 0.0)
        lp = LaminatePolar(iso, PolarElastic4(0, 0, frac * T0 / math.sqrt(3), 0.0), iso)
        r = feasibility_special(lp, SpecialCase.FULL_SQUARE)
        assert r.margin("M4_P1").value == pytest.approx(T0**2 - 3 * (frac * T0 / math.sqrt(3)) ** 2)
        assert r.margin("M4_P4").value == r.margin("M4_P1").value
        assert r.verdict is expected
        assert feasibility_general(lp).verdict is expected


class TestApplicability:
    def test_wrong_pattern(self, cross_ply):
        with pytest.raises(CaseNotApplicableError):
            feasibility_special(cross_ply, SpecialCase.R0_ORTHOTROPIC)

    def test_snap_recorded(self, coupled_isotropic):
        lp = coupled_isotropic(10.0)
        lp = LaminatePolar(lp.A.with_moduli(R0=1e-12), lp.B, lp.D)
        r = feasibility_special(lp, "isotropic")
        assert any("snapped to zero: R0A" in n for n in r.notes)

    @pytest.mark.parametrize("case", list(SpecialCase))
    def test_dispatch_prefers_special(self, case):
        rng = np.random.default_rng(99)
        lp = synthetic_laminate(rng, zero=case.defining)
        assert dispatch_check(lp, verify=True).case_used == case.title


class TestAlignedGuard:
    def test_four_points_can_miss_the_minimum(self):
        """With a non-zero R0(B) the four candidate points do not always hold
        the global minimum; the numeric guard catches it."""
        rng = np.random.default_rng(2024)
        found = 0
        for _ in range(400):
            lp = synthetic_laminate(rng, aligned=True, coupling=1.2)
            if lp.B.R0 == 0:
                continue
            r = feasibility_aligned(lp)
            guard = r.margin("min_M4_numeric")
            if guard.active:
                found += 1
                assert guard.value < r.margin("min_M4_points").value
                assert r.verdict == feasibility_general(lp).verdict
        assert found > 0

    def test_verify_mode_raises_on_conflict(self, monkeypatch, cross_ply):
        import polarbounds.bounds.feasibility as feas

        original = feas.feasibility_general

        def flipped(lp, **kw):
            return replace(original(lp, **kw), verdict=Verdict.INFEASIBLE)

        monkeypatch.setattr(feas, "feasibility_general", flipped)
        with pytest.raises(VerificationError):
            feas.dispatch_check(cross_ply, verify=True)
