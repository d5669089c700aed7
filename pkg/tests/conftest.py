import math

import pytest

from polarbounds import PolarElastic4, Stacking, compute_abd_polar

GLASS_EPOXY = dict(T0=92.38, T1=86.97, R0=44.86, R1=43.82)

EIGHTEEN_PLY_DEG = (0, 60, -60, -60, 60, 60, -60, 0, 60, 60, 0, -60, 0, -60, 0, 0, -60, 60)


@pytest.fixture
def glass_epoxy():
    return PolarElastic4(**GLASS_EPOXY)


@pytest.fixture
def ud(glass_epoxy):
    return compute_abd_polar(Stacking.from_degrees(glass_epoxy, [0]))


@pytest.fixture
def cross_ply(glass_epoxy):
    return compute_abd_polar(Stacking.from_degrees(glass_epoxy, [0, 90]))


@pytest.fixture
def eighteen_ply(glass_epoxy):
    return compute_abd_polar(Stacking.from_degrees(glass_epoxy, EIGHTEEN_PLY_DEG))


@pytest.fixture
def coupled_isotropic():
    """Isotropic A = D with orthotropic coupling; pass R1B to build one."""

    def build(R1B, R0B=0.0, T0=GLASS_EPOXY["T0"], T1=GLASS_EPOXY["T1"], h=1.0):
        from polarbounds import LaminatePolar

        iso = PolarElastic4(T0, T1, 0.0, 0.0)
        return LaminatePolar(iso, PolarElastic4(0.0, 0.0, R0B, R1B), iso, h)

    return build


def pytest_report_header(config):
    return f"glass-epoxy ply: {GLASS_EPOXY}; sqrt(T0 T1 / 6) = {math.sqrt(92.38 * 86.97 / 6):.4f}"
