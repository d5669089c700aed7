"""Classical lamination theory for stacks of identical plies, in polar form.

The plate law is written with the normalisation

    N = h A eps + h^2/2 B kappa,   M = h^2/2 B eps + h^3/12 D kappa,

so that ``A``, ``B`` and ``D`` are tensors of the same kind as the ply
stiffness.  With plies numbered ``k = 1..n`` from the bottom face, the
laminate tensors are weighted sums of the rotated ply,

    A = (1/n)   sum a_k Q(delta_k),   a_k = 1
    B = (1/n^2) sum b_k Q(delta_k),   b_k = 2k - n - 1
    D = (1/n^3) sum d_k Q(delta_k),   d_k = 3 (2k - n - 1)^2 + 1

and since ``sum b_k = 0`` and ``sum d_k = n^3`` the isotropic moduli of A and
D are those of the ply while those of B vanish.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .polar_core import (
    Cartesian4,
    PolarElastic4,
    check_layer_bounds,
    layer_is_admissible,
    polar4_to_cartesian_at,
    polar_from_harmonics,
    rotate_polar4,
    wrap_angle,
)

__all__ = [
    "EmptyStackingError",
    "Stacking",
    "LaminatePolar",
    "DerivedAngles",
    "PlateLaw",
    "stacking_weights",
    "compute_abd_polar",
    "derived_angles",
    "plate_law_matrix",
    "rotate_laminate",
]


class EmptyStackingError(ValueError):
    pass


@dataclass(frozen=True)
class Stacking:
    """Identical plies at the given orientations, bottom to top."""

    ply: PolarElastic4
    angles: tuple[float, ...]
    h: float = 1.0
    label: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "angles", tuple(float(a) for a in self.angles))
        if not self.angles:
            raise EmptyStackingError("a stacking needs at least one ply")
        if not self.h > 0:
            raise ValueError(f"thickness must be positive, got {self.h}")
        if not layer_is_admissible(self.ply):
            raise ValueError(f"ply violates the layer bounds: {check_layer_bounds(self.ply)}")

    @property
    def n(self) -> int:
        return len(self.angles)

    @classmethod
    def from_degrees(cls, ply, angles_deg, h=1.0, label=""):
        return cls(ply, tuple(math.radians(a) for a in angles_deg), h, label)

    def reversed(self) -> "Stacking":
        return Stacking(self.ply, self.angles[::-1], self.h, self.label)

    def rotated(self, theta: float) -> "Stacking":
        """The same stack with every ply turned by ``theta``."""
        return Stacking(self.ply, tuple(a + theta for a in self.angles), self.h, self.label)


@dataclass(frozen=True)
class LaminatePolar:
    """Polar sets of the extension, coupling and bending tensors."""

    A: PolarElastic4
    B: PolarElastic4
    D: PolarElastic4
    h: float = 1.0

    @property
    def T0(self) -> float:
        return self.A.T0

    @property
    def T1(self) -> float:
        return self.A.T1

    def with_B(self, **moduli) -> "LaminatePolar":
        return LaminatePolar(self.A, self.B.with_moduli(**moduli), self.D, self.h)

    def with_h(self, h: float) -> "LaminatePolar":
        return LaminatePolar(self.A, self.B, self.D, h)

    def cartesian(self, theta: float = 0.0) -> tuple[Cartesian4, Cartesian4, Cartesian4]:
        return tuple(polar4_to_cartesian_at(t, theta) for t in (self.A, self.B, self.D))


@dataclass(frozen=True)
class DerivedAngles:
    """Invariant angles of A, B, D and the two shift angles.

    ``PhiA, PhiB, PhiD`` live in ``[-pi/4, pi/4)``; ``deltaA, deltaD`` in
    ``[-pi/2, pi/2)``.
    """

    PhiA: float
    PhiB: float
    PhiD: float
    deltaA: float
    deltaD: float

    def as_tuple(self):
        return (self.PhiA, self.PhiB, self.PhiD, self.deltaA, self.deltaD)


@dataclass(frozen=True)
class PlateLaw:
    """6x6 stiffness of the plate on ``(eps, kappa)`` in Kelvin coordinates."""

    K: np.ndarray
    h: float

    def energy(self, x) -> np.ndarray:
        """Energy density ``x.K.x / 2`` for one or many 6-vectors (last axis)."""
        x = np.asarray(x, dtype=float)
        return 0.5 * np.einsum("...i,ij,...j->...", x, self.K, x)


def stacking_weights(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Integer weights ``(a_k, b_k, d_k)`` of an n-ply stack."""
    if n < 1:
        raise EmptyStackingError("a stacking needs at least one ply")
    k = np.arange(1, n + 1)
    b = 2 * k - n - 1
    return np.ones(n, dtype=np.int64), b, 3 * b * b + 1


def compute_abd_polar(s: Stacking) -> LaminatePolar:
    ply = s.ply
    n = s.n
    angles = np.asarray(s.angles)
    z0 = ply.R0 * np.exp(4j * ply.Phi0) * np.exp(4j * angles)
    z1 = ply.R1 * np.exp(2j * ply.Phi1) * np.exp(2j * angles)
    ref = max(ply.T0, ply.T1, ply.R0, ply.R1)
    out = []
    for m, w in enumerate(stacking_weights(n), start=1):
        scale = float(n) ** m
        a = float(np.sum(w)) / scale
        out.append(
            polar_from_harmonics(
                ply.T0 * a,
                ply.T1 * a,
                complex(np.sum(w * z0)) / scale,
                complex(np.sum(w * z1)) / scale,
                ref=ref,
            )
        )
    A, B, D = out
    # the weight identities make these exact; pin them against round-off
    A = A.with_moduli(T0=ply.T0, T1=ply.T1)
    D = D.with_moduli(T0=ply.T0, T1=ply.T1)
    B = B.with_moduli(T0=0.0, T1=0.0)
    return LaminatePolar(A, B, D, s.h)


def derived_angles(lp: LaminatePolar) -> DerivedAngles:
    return DerivedAngles(
        PhiA=lp.A.Phi,
        PhiB=lp.B.Phi,
        PhiD=lp.D.Phi,
        deltaA=wrap_angle(lp.B.Phi1 - lp.A.Phi1, math.pi),
        deltaD=wrap_angle(lp.B.Phi1 - lp.D.Phi1, math.pi),
    )


def rotate_laminate(lp: LaminatePolar, theta: float) -> LaminatePolar:
    return LaminatePolar(*(rotate_polar4(t, theta) for t in (lp.A, lp.B, lp.D)), lp.h)


def plate_law_matrix(lp, h: float | None = None) -> PlateLaw:
    """Assemble the 6x6 plate law.

    ``lp`` is a :class:`LaminatePolar` or a triple of :class:`Cartesian4`
    (then ``h`` is required).
    """
    if isinstance(lp, LaminatePolar):
        A, B, D = lp.cartesian(0.0)
        h = lp.h if h is None else h
    else:
        A, B, D = lp
        if h is None:
            raise ValueError("thickness is required with Cartesian tensors")
    K = np.zeros((6, 6))
    K[:3, :3] = h * A.kelvin()
    K[:3, 3:] = K[3:, :3] = 0.5 * h**2 * B.kelvin()
    K[3:, 3:] = h**3 / 12.0 * D.kelvin()
    return PlateLaw(0.5 * (K + K.T), h)

