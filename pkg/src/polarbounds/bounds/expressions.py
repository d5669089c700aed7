"""Closed-form pieces of the positive-definiteness analysis.

The energy density of the plate is ``U = h/24 v.M.v`` with
``v = (t_eps, r_eps, t_kappa, r_kappa)`` the polar moduli of strain and
curvature and ``M`` a 4x4 matrix that depends on the strain and curvature
polar angles.  ``U > 0`` for every state iff ``M`` is positive definite for
every pair of angles, i.e. iff its leading principal minors are.  The
second and third minors reduce to explicit inequalities; the fourth is a
trigonometric polynomial in the two angles whose minimum must be found
numerically in general.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..lamination import DerivedAngles, LaminatePolar
from ..polar_core import Polar2, PolarElastic4

__all__ = [
    "MatrixM",
    "DET_M_CONSTANT",
    "FOUR_POINTS",
    "assemble_M",
    "sylvester_minors",
    "m2_margins",
    "m2_quadratic",
    "m3_margins",
    "m4_value",
    "aligned_m4_points",
    "square_b_m4",
    "r0_orthotropic_m4",
    "coupled_isotropic_m4",
    "full_square_m4",
]

# det M = DET_M_CONSTANT * h^4 * (quartic expression of the moduli)
DET_M_CONSTANT = 96 * 48 * 8 * 4

FOUR_POINTS = ((0.0, 0.0), (math.pi / 4, 0.0), (0.0, math.pi / 4), (math.pi / 4, math.pi / 4))


@dataclass(frozen=True)
class MatrixM:
    m: np.ndarray
    phi_eps: float
    phi_kap: float
    h: float

    def quadratic_form(self, eps: Polar2, kap: Polar2) -> float:
        """``h/24 v.M.v``; the polar angles of ``eps``/``kap`` are ignored."""
        v = np.array([eps.t, eps.r, kap.t, kap.r])
        return self.h / 24.0 * float(v @ self.m @ v)


def assemble_M(lp: LaminatePolar, phi_eps: float, phi_kap: float) -> MatrixM:
    A, B, D, h = lp.A, lp.B, lp.D, lp.h
    T0, T1 = lp.T0, lp.T1
    pe, pk = phi_eps, phi_kap
    m12 = 96 * A.R1 * math.cos(2 * (A.Phi1 - pe))
    m14 = 48 * h * B.R1 * math.cos(2 * (B.Phi1 - pk))
    m23 = 48 * h * B.R1 * math.cos(2 * (B.Phi1 - pe))
    m24 = 24 * h * B.R0 * math.cos(2 * (2 * B.Phi0 - pe - pk))
    m34 = 8 * h**2 * D.R1 * math.cos(2 * (D.Phi1 - pk))
    m = np.array(
        [
            [96 * T1, m12, 0.0, m14],
            [m12, 48 * (T0 + A.R0 * math.cos(4 * (A.Phi0 - pe))), m23, m24],
            [0.0, m23, 8 * h**2 * T1, m34],
            [m14, m24, m34, 4 * h**2 * (T0 + D.R0 * math.cos(4 * (D.Phi0 - pk)))],
        ]
    )
    return MatrixM(m, phi_eps, phi_kap, h)


def sylvester_minors(m: MatrixM) -> tuple[float, float, float, float]:
    """Leading principal minors of ``M``, in order."""
    a = m.m
    return tuple(float(np.linalg.det(a[:k, :k])) for k in range(1, 5))


def m2_margins(x: PolarElastic4, T0: float | None = None, T1: float | None = None):
    """The two conditions on the second minor for A (or D).

    Returns ``(T0 - R0, T1 (T0^2 - R0^2) - 2 R1^2 (T0 - R0 cos 4 Phi))``.
    ``T0, T1`` default to those stored in ``x``.
    """
    T0 = x.T0 if T0 is None else T0
    T1 = x.T1 if T1 is None else T1
    m_a = T0 - x.R0
    m_b = T1 * (T0**2 - x.R0**2) - 2 * x.R1**2 * (T0 - x.R0 * math.cos(4 * x.Phi))
    return m_a, m_b


def m2_quadratic(x: PolarElastic4, T0=None, T1=None) -> float:
    """``T0 T1 - R1^2``: implied by :func:`m2_margins`, reported for information."""
    T0 = x.T0 if T0 is None else T0
    T1 = x.T1 if T1 is None else T1
    return T0 * T1 - x.R1**2


def m3_margins(x: PolarElastic4, b: PolarElastic4, delta: float, T0=None, T1=None):
    """The two conditions on the third minor coupling A (or D) with B.

    ``delta`` is the shift angle ``Phi1(B) - Phi1(x)``.
    """
    T0 = x.T0 if T0 is None else T0
    T1 = x.T1 if T1 is None else T1
    R0, R1, R1B = x.R0, x.R1, b.R1
    phi = x.Phi
    m_a = T0 * T1 - R1**2 - 3 * R1B**2
    m_b = (
        T1**2 * (T0**2 - R0**2)
        + 6 * T1 * R0 * R1B**2 * math.cos(4 * (phi - delta))
        - 2 * R1**2 * (T1 * (T0 - R0 * math.cos(4 * phi)) - 3 * R1B**2)
        - 6 * R1B**2 * (T0 * T1 + R1**2 * math.cos(4 * delta))
    )
    return m_a, m_b


def m4_value(lp: LaminatePolar, da: DerivedAngles, phi_eps, phi_kap):
    """The fourth minor divided by ``DET_M_CONSTANT h^4``.

    Angles are measured from ``Phi1(B)``.  Vectorised over ``phi_eps`` and
    ``phi_kap``.
    """
    T0, T1 = lp.T0, lp.T1
    R0A, R1A = lp.A.R0, lp.A.R1
    R0B, R1B = lp.B.R0, lp.B.R1
    R0D, R1D = lp.D.R0, lp.D.R1
    PhiA, PhiB, PhiD, dA, dD = da.as_tuple()
    pe = np.asarray(phi_eps, dtype=float)
    pk = np.asarray(phi_kap, dtype=float)

    ce, ck = np.cos(2 * pe), np.cos(2 * pk)
    ca = np.cos(2 * (dA + pe))
    cd = np.cos(2 * (dD + pk))
    qa = np.cos(4 * (PhiA - dA - pe))
    qd = np.cos(4 * (PhiD - dD - pk))
    cb = np.cos(2 * (2 * PhiB - pe - pk))

    bracket_a = T0 * T1 + T1 * R0A * qa - 2 * R1A**2 * ca**2
    bracket_d = T0 * T1 + T1 * R0D * qd - 2 * R1D**2 * cd**2
    out = (
        bracket_a * bracket_d
        + 36 * R1B**4 * ce**2 * ck**2
        - 6 * T0 * T1 * R1B**2 * (ce**2 + ck**2)
        - 3 * T1**2 * R0B**2 * cb**2
        - 24 * R1A * R1B**2 * R1D * ca * ce * cd * ck
        - 6 * T1 * R1B**2 * (R0A * qa * ck**2 + R0D * qd * ce**2)
        + 12 * T1 * R0B * R1B * cb * (R1A * ca * ck + R1D * cd * ce)
    )
    return out if out.ndim else float(out)


def aligned_m4_points(lp: LaminatePolar, cfg) -> tuple[float, float, float, float]:
    """Closed-form values of the fourth minor at the four candidate points.

    ``cfg`` carries the orthotropy indices ``kA, kB, kD`` and the alignment
    indices ``lamA, lamD`` (see :class:`~polarbounds.bounds.AlignedConfig`).
    The points are ``(0,0), (pi/4,0), (0,pi/4), (pi/4,pi/4)`` in the frame of
    ``Phi1(B)``.
    """
    T0, T1 = lp.T0, lp.T1
    R0A, R1A = lp.A.R0, lp.A.R1
    R0B, R1B = lp.B.R0, lp.B.R1
    R0D, R1D = lp.D.R0, lp.D.R1
    sA, sB, sD = (-1) ** cfg.kA, (-1) ** cfg.kB, (-1) ** cfg.kD
    lA, lD = (-1) ** cfg.lamA, (-1) ** cfg.lamD

    m1 = (
        (T0 * T1 + sA * T1 * R0A - 2 * R1A**2) * (T0 * T1 + sD * T1 * R0D - 2 * R1D**2)
        + 36 * R1B**4
        - 3 * T1**2 * R0B**2
        - 6 * T1 * R1B**2 * (2 * T0 + sA * R0A + sD * R0D)
        + 12 * sB * T1 * R0B * R1B * (lA * R1A + lD * R1D)
        - 24 * lA * lD * R1A * R1B**2 * R1D
    )
    m2 = T1 * (T0 - sA * R0A) * (T1 * (T0 + sD * R0D) - 2 * R1D**2 - 6 * R1B**2)
    m3 = T1 * (T0 - sD * R0D) * (T1 * (T0 + sA * R0A) - 2 * R1A**2 - 6 * R1B**2)
    m4 = T1**2 * ((T0 - sA * R0A) * (T0 - sD * R0D) - 3 * R0B**2)
    return m1, m2, m3, m4


def square_b_m4(lp: LaminatePolar, da: DerivedAngles, phi_eps, phi_kap):
    """Fourth minor when the coupling tensor has ``R1(B) = 0``."""
    T0, T1 = lp.T0, lp.T1
    PhiA, PhiB, PhiD, dA, dD = da.as_tuple()
    pe = np.asarray(phi_eps, dtype=float)
    pk = np.asarray(phi_kap, dtype=float)
    bracket_a = T0 * T1 + T1 * lp.A.R0 * np.cos(4 * (PhiA - dA - pe)) - 2 * lp.A.R1**2 * np.cos(2 * (dA + pe)) ** 2
    bracket_d = T0 * T1 + T1 * lp.D.R0 * np.cos(4 * (PhiD - dD - pk)) - 2 * lp.D.R1**2 * np.cos(2 * (dD + pk)) ** 2
    return bracket_a * bracket_d - 3 * T1**2 * lp.B.R0**2 * np.cos(2 * (2 * PhiB - pe - pk)) ** 2


def full_square_m4(lp: LaminatePolar, da: DerivedAngles, phi_eps, phi_kap):
    """Fourth minor over ``T1^2`` when ``R1`` vanishes for A, B and D."""
    T0 = lp.T0
    PhiA, PhiB, PhiD, dA, dD = da.as_tuple()
    pe = np.asarray(phi_eps, dtype=float)
    pk = np.asarray(phi_kap, dtype=float)
    return (T0 + lp.A.R0 * np.cos(4 * (PhiA - dA - pe))) * (
        T0 + lp.D.R0 * np.cos(4 * (PhiD - dD - pk))
    ) - 3 * lp.B.R0**2 * np.cos(2 * (2 * PhiB - pe - pk)) ** 2


def r0_orthotropic_m4(lp: LaminatePolar, da: DerivedAngles, phi_eps, phi_kap):
    """Fourth minor when ``R0`` vanishes for A, B and D."""
    T0T1 = lp.T0 * lp.T1
    R1A, R1B, R1D = lp.A.R1, lp.B.R1, lp.D.R1
    dA, dD = da.deltaA, da.deltaD
    pe = np.asarray(phi_eps, dtype=float)
    pk = np.asarray(phi_kap, dtype=float)
    ce2, ck2 = np.cos(2 * pe) ** 2, np.cos(2 * pk) ** 2
    ca, cd = np.cos(2 * (dA + pe)), np.cos(2 * (dD + pk))
    return (
        (T0T1 - 2 * R1A**2 * ca**2) * (T0T1 - 2 * R1D**2 * cd**2)
        + 36 * R1B**4 * ce2 * ck2
        - 6 * T0T1 * R1B**2 * (ce2 + ck2)
        - 24 * R1A * R1B**2 * R1D * ca * np.cos(2 * pe) * cd * np.cos(2 * pk)
    )


def coupled_isotropic_m4(lp: LaminatePolar, da: DerivedAngles, phi_eps, phi_kap):
    """Fourth minor when A and D reduce to their isotropic part."""
    T0, T1 = lp.T0, lp.T1
    R0B, R1B = lp.B.R0, lp.B.R1
    pe = np.asarray(phi_eps, dtype=float)
    pk = np.asarray(phi_kap, dtype=float)
    ce2, ck2 = np.cos(2 * pe) ** 2, np.cos(2 * pk) ** 2
    return (
        T0**2 * T1**2
        + 36 * R1B**4 * ce2 * ck2
        - 6 * T0 * T1 * R1B**2 * (ce2 + ck2)
        - 3 * T1**2 * R0B**2 * np.cos(2 * (2 * da.PhiB - pe - pk)) ** 2
    )
