"""Polar representation of plane elastic tensors.

A fourth-rank plane tensor with major and minor symmetries is described by
two isotropic moduli ``T0, T1``, two anisotropic moduli ``R0, R1`` and two
angles ``Phi0, Phi1``.  Rotating the frame by ``theta`` just subtracts
``theta`` from both angles, which makes the moduli and ``Phi0 - Phi1``
tensor invariants.  Second-rank symmetric tensors get the analogous
``(t, r, phi)`` treatment (Mohr's circle).

All angles are in radians.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace

import numpy as np

__all__ = [
    "InvalidMaterialError",
    "PolarElastic4",
    "Cartesian4",
    "Cartesian2",
    "Polar2",
    "SymmetryClass",
    "EngineeringConstants",
    "wrap_angle",
    "engineering_to_cartesian",
    "cartesian_to_polar4",
    "polar4_to_cartesian_at",
    "rotate_polar4",
    "mohr_decompose",
    "mohr_compose",
    "classify_symmetry",
    "check_layer_bounds",
    "layer_is_admissible",
    "polar_from_harmonics",
]

QUARTER_PI = math.pi / 4
HALF_PI = math.pi / 2

# moduli below this multiple of eps times the reference size are round-off
ZERO_MODULUS_RTOL = 64 * np.finfo(float).eps


class InvalidMaterialError(ValueError):
    """Raised for engineering constants that do not describe an elastic ply."""


def wrap_angle(angle, period):
    """Map ``angle`` into ``[-period/2, period/2)``."""
    half = 0.5 * period
    wrapped = np.mod(np.asarray(angle, dtype=float) + half, period) - half
    if np.ndim(wrapped) == 0:
        return float(wrapped)
    return wrapped


@dataclass(frozen=True)
class PolarElastic4:
    """Polar parameters of a fourth-rank plane elastic tensor.

    ``Phi0`` is stored in ``[-pi/4, pi/4)`` and ``Phi1`` in ``[-pi/2, pi/2)``,
    the periods of the 4- and 2-harmonic.  The anisotropic moduli are expected
    to be non-negative; they are not clipped here so that feasibility reports
    can flag hand-written inputs that violate it.
    """

    T0: float
    T1: float
    R0: float
    R1: float
    Phi0: float = 0.0
    Phi1: float = 0.0

    def __post_init__(self):
        values = (self.T0, self.T1, self.R0, self.R1, self.Phi0, self.Phi1)
        if not all(math.isfinite(v) for v in values):
            raise InvalidMaterialError(f"non-finite polar parameter in {values}")
        for name in ("T0", "T1", "R0", "R1"):
            object.__setattr__(self, name, float(getattr(self, name)))
        object.__setattr__(self, "Phi0", wrap_angle(self.Phi0, HALF_PI))
        object.__setattr__(self, "Phi1", wrap_angle(self.Phi1, math.pi))

    @property
    def Phi(self) -> float:
        """The invariant angle ``Phi0 - Phi1``, wrapped to ``[-pi/4, pi/4)``."""
        return wrap_angle(self.Phi0 - self.Phi1, HALF_PI)

    def scaled(self, factor: float) -> "PolarElastic4":
        """Return the tensor multiplied by a scalar (angles follow the sign)."""
        return polar_from_harmonics(
            factor * self.T0,
            factor * self.T1,
            factor * self.R0 * np.exp(4j * self.Phi0),
            factor * self.R1 * np.exp(2j * self.Phi1),
        )

    def with_moduli(self, **moduli) -> "PolarElastic4":
        return replace(self, **moduli)


@dataclass(frozen=True)
class Cartesian4:
    """The six independent Cartesian components of a plane elastic tensor.

    Shear components are tensor components (``c1212 = G12`` for a ply), not
    engineering ones.  Fields may hold arrays when evaluated on many angles.
    """

    c1111: float
    c1112: float
    c1122: float
    c1212: float
    c1222: float
    c2222: float

    def kelvin(self) -> np.ndarray:
        """3x3 matrix acting on ``(e11, e22, sqrt(2) e12)``."""
        s = math.sqrt(2.0)
        return np.array(
            [
                [self.c1111, self.c1122, s * self.c1112],
                [self.c1122, self.c2222, s * self.c1222],
                [s * self.c1112, s * self.c1222, 2.0 * self.c1212],
            ]
        )

    @classmethod
    def from_kelvin(cls, k) -> "Cartesian4":
        k = np.asarray(k, dtype=float)
        s = math.sqrt(2.0)
        return cls(
            c1111=k[0, 0],
            c1112=k[0, 2] / s,
            c1122=k[0, 1],
            c1212=k[2, 2] / 2.0,
            c1222=k[1, 2] / s,
            c2222=k[1, 1],
        )

    def as_tuple(self):
        return (self.c1111, self.c1112, self.c1122, self.c1212, self.c1222, self.c2222)


@dataclass(frozen=True)
class Cartesian2:
    """Symmetric second-rank plane tensor (strain or curvature)."""

    e11: float
    e12: float
    e22: float

    def kelvin(self) -> np.ndarray:
        return np.array([self.e11, self.e22, math.sqrt(2.0) * self.e12])


@dataclass(frozen=True)
class Polar2:
    """Polar components ``(t, r, phi)`` of a symmetric second-rank tensor."""

    t: float
    r: float
    phi: float = 0.0


class SymmetryClass(enum.Enum):
    OrdinaryOrthotropyK0 = "ordinary orthotropy (k=0)"
    OrdinaryOrthotropyK1 = "ordinary orthotropy (k=1)"
    R0Orthotropy = "R0-orthotropy"
    SquareSymmetry = "square symmetry"
    Isotropy = "isotropy"
    GenericAnisotropy = "anisotropy"


@dataclass(frozen=True)
class EngineeringConstants:
    """In-plane engineering constants of an orthotropic ply."""

    E1: float
    E2: float
    G12: float
    nu12: float

    def __post_init__(self):
        if min(self.E1, self.E2, self.G12) <= 0:
            raise InvalidMaterialError("E1, E2 and G12 must be positive")
        if 1.0 - self.nu12 * self.nu21 <= 0:
            raise InvalidMaterialError("1 - nu12*nu21 must be positive")

    @property
    def nu21(self) -> float:
        return self.nu12 * self.E2 / self.E1


def engineering_to_cartesian(ec: EngineeringConstants) -> Cartesian4:
    """Reduced stiffness of an orthotropic ply in its material frame."""
    den = 1.0 - ec.nu12 * ec.nu21
    c2222 = ec.E2 / den
    return Cartesian4(
        c1111=ec.E1 / den,
        c1112=0.0,
        c1122=ec.nu12 * c2222,
        c1212=ec.G12,
        c1222=0.0,
        c2222=c2222,
    )


def polar_from_harmonics(T0, T1, z0, z1, ref=None) -> PolarElastic4:
    """Build a polar set from the complex harmonics ``R0 e^{4iPhi0}`` and
    ``R1 e^{2iPhi1}``.

    Moduli at round-off level relative to ``ref`` are set to zero and the
    undefined angle follows the other one (``Phi1 := Phi0`` if ``R1 = 0``,
    ``Phi0 := Phi1`` if ``R0 = 0``, both zero if both vanish).
    """
    if ref is None:
        ref = max(abs(T0), abs(T1), abs(z0), abs(z1))
    atol = ZERO_MODULUS_RTOL * ref
    R0, R1 = abs(z0), abs(z1)
    zero0, zero1 = R0 <= atol, R1 <= atol
    phi0 = 0.25 * math.atan2(z0.imag, z0.real)
    phi1 = 0.5 * math.atan2(z1.imag, z1.real)
    if zero0 and zero1:
        R0 = R1 = phi0 = phi1 = 0.0
    elif zero1:
        R1, phi1 = 0.0, phi0
    elif zero0:
        R0, phi0 = 0.0, phi1
    return PolarElastic4(T0, T1, R0, R1, phi0, phi1)


def cartesian_to_polar4(c: Cartesian4) -> PolarElastic4:
    """Polar parameters of a tensor given by its components at ``theta = 0``."""
    T0 = (c.c1111 - 2 * c.c1122 + 4 * c.c1212 + c.c2222) / 8
    T1 = (c.c1111 + 2 * c.c1122 + c.c2222) / 8
    z0 = complex(c.c1111 - 2 * c.c1122 - 4 * c.c1212 + c.c2222, 4 * (c.c1112 - c.c1222)) / 8
    z1 = complex(c.c1111 - c.c2222, 2 * (c.c1112 + c.c1222)) / 8
    ref = max(abs(v) for v in c.as_tuple())
    return polar_from_harmonics(T0, T1, z0, z1, ref=ref)


def polar4_to_cartesian_at(p: PolarElastic4, theta=0.0) -> Cartesian4:
    """Cartesian components in the frame rotated by ``theta``.

    ``theta`` may be an array, in which case every field is an array.
    """
    theta = np.asarray(theta, dtype=float)
    c4 = p.R0 * np.cos(4 * (p.Phi0 - theta))
    s4 = p.R0 * np.sin(4 * (p.Phi0 - theta))
    c2 = p.R1 * np.cos(2 * (p.Phi1 - theta))
    s2 = p.R1 * np.sin(2 * (p.Phi1 - theta))
    iso = p.T0 + 2 * p.T1
    out = Cartesian4(
        c1111=iso + c4 + 4 * c2,
        c1112=s4 + 2 * s2,
        c1122=-p.T0 + 2 * p.T1 - c4,
        c1212=p.T0 - c4,
        c1222=-s4 + 2 * s2,
        c2222=iso + c4 - 4 * c2,
    )
    if theta.ndim == 0:
        out = Cartesian4(*(float(v) for v in out.as_tuple()))
    return out


def rotate_polar4(p: PolarElastic4, theta: float) -> PolarElastic4:
    """The same tensor seen from a frame rotated by ``theta``."""
    return replace(p, Phi0=p.Phi0 - theta, Phi1=p.Phi1 - theta)


def mohr_decompose(l: Cartesian2) -> Polar2:
    t = 0.5 * (l.e11 + l.e22)
    z = complex(0.5 * (l.e11 - l.e22), l.e12)
    r = abs(z)
    phi = 0.5 * math.atan2(z.imag, z.real) if r > 0 else 0.0
    return Polar2(t, r, wrap_angle(phi, math.pi))


def mohr_compose(p: Polar2, theta: float = 0.0) -> Cartesian2:
    """Cartesian components of a polar second-rank tensor at ``theta``."""
    c = p.r * math.cos(2 * (p.phi - theta))
    return Cartesian2(e11=p.t + c, e12=p.r * math.sin(2 * (p.phi - theta)), e22=p.t - c)


def classify_symmetry(
    p: PolarElastic4, tol: float = 1e-8, angle_tol: float = 1e-8
) -> SymmetryClass:
    """Elastic symmetry of a polar set.

    Moduli are compared against ``tol * scale`` with ``scale`` the largest
    polar modulus, or ``R0 + R1`` for coupling-like tensors whose isotropic
    moduli vanish.  Vanishing moduli take precedence over angle tests.
    """
    scale = max(abs(p.T0), abs(p.T1), abs(p.R0), abs(p.R1))
    if p.T0 == 0 and p.T1 == 0:
        scale = abs(p.R0) + abs(p.R1)
    if scale == 0:
        return SymmetryClass.Isotropy
    small0 = abs(p.R0) <= tol * scale
    small1 = abs(p.R1) <= tol * scale
    if small0 and small1:
        return SymmetryClass.Isotropy
    if small1:
        return SymmetryClass.SquareSymmetry
    if small0:
        return SymmetryClass.R0Orthotropy
    steps = 4 * (p.Phi0 - p.Phi1) / math.pi
    k = round(steps)
    if abs(steps - k) * QUARTER_PI <= angle_tol:
        return SymmetryClass.OrdinaryOrthotropyK0 if k % 2 == 0 else SymmetryClass.OrdinaryOrthotropyK1
    return SymmetryClass.GenericAnisotropy


def check_layer_bounds(p: PolarElastic4) -> dict[str, float]:
    """Margins of the elastic bounds of a single layer; admissible iff all > 0."""
    m1 = p.T0 - p.R0
    m2 = p.T1 * (p.T0**2 - p.R0**2) - 2 * p.R1**2 * (p.T0 - p.R0 * math.cos(4 * (p.Phi0 - p.Phi1)))
    return {
        "T0_minus_R0": m1,
        "cubic": m2,
        "T0": p.T0,
        "T1": p.T1,
        "R0": p.R0,
        "R1": p.R1,
    }


def layer_is_admissible(p: PolarElastic4) -> bool:
    m = check_layer_bounds(p)
    return m["T0_minus_R0"] > 0 and m["cubic"] > 0 and p.T0 > 0 and p.T1 > 0 and p.R0 >= 0 and p.R1 >= 0
