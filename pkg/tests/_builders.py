"""Random laminate triples for tests that need control over individual moduli."""

from __future__ import annotations

import math

from polarbounds import LaminatePolar, PolarElastic4

QUARTER = math.pi / 4
HALF = math.pi / 2


def _r1_max(T0, T1, R0, phi):
    return math.sqrt(T1 * (T0**2 - R0**2) / (2 * (T0 - R0 * math.cos(4 * phi))))


def random_stiffness(rng, T0, T1, zero=()):
    """A random admissible A/D-type polar set sharing ``T0, T1``."""
    R0 = 0.0 if "R0" in zero else rng.uniform(0, 0.9 * T0)
    phi = rng.uniform(-QUARTER, QUARTER)
    R1 = 0.0 if "R1" in zero else rng.uniform(0, 0.9 * _r1_max(T0, T1, R0, phi))
    phi1 = rng.uniform(-HALF, HALF)
    return PolarElastic4(T0, T1, R0, R1, phi1 + phi, phi1)


def synthetic_laminate(rng, zero=(), aligned=False, coupling=1.0, h=1.0) -> LaminatePolar:
    """Random (A, B, D) with admissible A and D and a random coupling.

    ``zero`` lists moduli (``"R0A"``, ``"R1B"``, ...) forced to exactly zero.
    With ``aligned`` every angle is placed on its alignment grid.  The
    coupling moduli are drawn up to ``coupling`` times a size at which
    roughly half of the draws violate the bounds.
    """
    T0, T1 = rng.uniform(0.5, 2.0, 2)
    A = random_stiffness(rng, T0, T1, {k[:2] for k in zero if k.endswith("A")})
    D = random_stiffness(rng, T0, T1, {k[:2] for k in zero if k.endswith("D")})
    R0B = 0.0 if "R0B" in zero else rng.uniform(0, coupling * 0.8 * T0)
    R1B = 0.0 if "R1B" in zero else rng.uniform(0, coupling * 0.5 * math.sqrt(T0 * T1))
    B = PolarElastic4(0.0, 0.0, R0B, R1B, rng.uniform(-QUARTER, QUARTER), rng.uniform(-HALF, HALF))
    if aligned:
        base = rng.uniform(-HALF, HALF)
        A, B, D = (_align(rng, t, base) for t in (A, B, D))
    return LaminatePolar(A, B, D, h)


def _align(rng, t: PolarElastic4, base: float) -> PolarElastic4:
    phi1 = base + HALF * rng.integers(0, 2)
    phi0 = phi1 + QUARTER * rng.integers(0, 2)
    if t.R1 == 0:
        phi1 = phi0
    if t.R0 == 0:
        phi0 = phi1
    return PolarElastic4(t.T0, t.T1, t.R0, t.R1, phi0, phi1)


def rel_close(a, b, rtol, scale=None):
    scale = max(abs(a), abs(b)) if scale is None else scale
    return abs(a - b) <= rtol * max(scale, 1e-300)
