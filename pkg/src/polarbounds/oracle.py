"""Independent ground truth for the bound sets.

Nothing here reuses the closed-form machinery of :mod:`polarbounds.bounds`:
positive definiteness is decided by the eigenvalues of the 6x6 plate law
(cyclic Jacobi), energies are evaluated from the polar bilinear form of each
tensor, and the minor expressions used as grid oracles are rebuilt from that
energy by polarisation and expanded by cofactors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np
from scipy.optimize import minimize_scalar

from .bounds.report import DEFAULT_TOL, Verdict
from .lamination import LaminatePolar, PlateLaw, Stacking, compute_abd_polar, plate_law_matrix
from .polar_core import Cartesian2, Polar2, PolarElastic4, layer_is_admissible, mohr_compose, mohr_decompose

__all__ = [
    "ContractViolation",
    "OracleVerdict",
    "EnergySample",
    "PlyBounds",
    "SampleSpec",
    "jacobi_eigenvalues",
    "cofactor_det",
    "kelvin_pd_check",
    "polar_bilinear",
    "polar_energy",
    "m_form_energy",
    "kelvin_energy",
    "energy_min_sample",
    "state_from_angles",
    "oracle_m_matrix",
    "EXPRESSIONS",
    "evaluate_expression",
    "grid_min_expression",
    "random_ply",
    "random_laminates",
    "coupling_scaled_laminates",
]


class ContractViolation(ValueError):
    pass


# -- eigenvalues ---------------------------------------------------------------


def jacobi_eigenvalues(a, tol: float = 1e-14, max_sweeps: int = 100) -> tuple[np.ndarray, int]:
    """Eigenvalues of a small symmetric matrix by cyclic Jacobi rotations.

    Sweeps over all off-diagonal pairs until the off-diagonal Frobenius norm
    falls below ``tol`` times the Frobenius norm of the matrix.  Returns the
    ascending eigenvalues and the number of rotations applied.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    total = math.sqrt(float(np.sum(a * a)))
    rotations = 0
    if total == 0.0:
        return np.zeros(n), 0
    for _ in range(max_sweeps):
        off = math.sqrt(float(np.sum(np.triu(a, 1) ** 2)) * 2.0)
        if off <= tol * total:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-18 * total:
                    a[p, q] = a[q, p] = 0.0
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                ap, aq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                rp, rq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                a[p, q] = a[q, p] = 0.0
                rotations += 1
    else:
        raise ArithmeticError("Jacobi iteration did not converge")
    return np.sort(np.diag(a)), rotations


def cofactor_det(a) -> np.ndarray:
    """Determinant by Laplace expansion along the first row.

    Works on stacks of matrices (shape ``(..., n, n)``).
    """
    a = np.asarray(a, dtype=float)
    n = a.shape[-1]
    if n == 1:
        return a[..., 0, 0]
    out = np.zeros(a.shape[:-2])
    for j in range(n):
        minor = np.delete(np.delete(a, 0, axis=-2), j, axis=-1)
        out = out + (-1) ** j * a[..., 0, j] * cofactor_det(minor)
    return out


@dataclass(frozen=True)
class OracleVerdict:
    min_eigenvalue: float
    verdict: Verdict
    iterations: int
    normalized: float = 0.0


def kelvin_pd_check(law, tol: float = DEFAULT_TOL) -> OracleVerdict:
    """Positive definiteness of a symmetric plate law from its eigenvalues.

    The smallest eigenvalue is divided by the largest absolute entry and the
    three-valued tolerance rule is applied to the result.
    """
    K = np.asarray(law.K if isinstance(law, PlateLaw) else law, dtype=float)
    if K.ndim != 2 or K.shape[0] != K.shape[1]:
        raise ContractViolation(f"expected a square matrix, got shape {K.shape}")
    scale = float(np.max(np.abs(K)))
    if not np.all(np.abs(K - K.T) <= 1e-12 * max(scale, 1e-300)):
        raise ContractViolation("plate law is not symmetric")
    if scale == 0.0:
        return OracleVerdict(0.0, Verdict.MARGINAL, 0, 0.0)
    eig, rotations = jacobi_eigenvalues(K)
    lam = float(eig[0])
    x = lam / scale
    if x < -tol:
        v = Verdict.INFEASIBLE
    elif x <= tol:
        v = Verdict.MARGINAL
    else:
        v = Verdict.FEASIBLE
    return OracleVerdict(lam, v, rotations, x)


# -- energies ------------------------------------------------------------------


def polar_bilinear(x: PolarElastic4, a: Polar2, b: Polar2):
    """``a : X : b`` for a plane elastic tensor and two symmetric tensors,
    all in polar form.  Vectorised over the fields of ``a`` and ``b``."""
    return (
        8 * x.T1 * a.t * b.t
        + 4 * a.r * b.r * (x.T0 * np.cos(2 * (a.phi - b.phi)) + x.R0 * np.cos(2 * (2 * x.Phi0 - a.phi - b.phi)))
        + 8 * x.R1 * (a.t * b.r * np.cos(2 * (x.Phi1 - b.phi)) + b.t * a.r * np.cos(2 * (x.Phi1 - a.phi)))
    )


def polar_energy(lp: LaminatePolar, eps: Polar2, kap: Polar2):
    """Energy density of the plate from the polar forms of A, B and D."""
    h = lp.h
    return (
        0.5 * h * polar_bilinear(lp.A, eps, eps)
        + 0.5 * h**2 * polar_bilinear(lp.B, eps, kap)
        + h**3 / 24.0 * polar_bilinear(lp.D, kap, kap)
    )


def m_form_energy(lp: LaminatePolar, eps: Polar2, kap: Polar2) -> float:
    """``h/24 v.M.v`` through the bound module's assembled matrix."""
    from .bounds.expressions import assemble_M

    return assemble_M(lp, eps.phi, kap.phi).quadratic_form(eps, kap)


def kelvin_energy(law: PlateLaw, eps: Cartesian2, kap: Cartesian2) -> float:
    x = np.concatenate([eps.kelvin(), kap.kelvin()])
    return float(law.energy(x))


@dataclass(frozen=True)
class EnergySample:
    min_energy: float
    state: tuple[Cartesian2, Cartesian2]
    max_discrepancy: float
    count: int


def _unit_states(n: int, seed) -> np.ndarray:
    rng = np.random.default_rng(seed)
    x = rng.standard_normal((n, 6))
    return x / np.linalg.norm(x, axis=1, keepdims=True)


def _from_kelvin(v) -> Cartesian2:
    return Cartesian2(e11=float(v[0]), e12=float(v[2]) / math.sqrt(2.0), e22=float(v[1]))


def energy_min_sample(lp: LaminatePolar, n: int, seed=0, extra_states=(), rtol: float = 1e-10) -> EnergySample:
    """Smallest energy over ``n`` random unit states (Kelvin norm).

    Every state is evaluated three ways: polar forms of A, B, D; the 4x4
    matrix of polar strain moduli; and the 6x6 plate law.  Disagreement above
    ``rtol`` relative to the largest plate-law entry raises
    :class:`ArithmeticError`.  The returned energy is divided by that entry.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    law = plate_law_matrix(lp)
    scale = float(np.max(np.abs(law.K)))
    states = [(_from_kelvin(v[:3]), _from_kelvin(v[3:])) for v in _unit_states(n, seed)]
    for e, k in extra_states:
        norm = float(np.linalg.norm(np.concatenate([e.kelvin(), k.kelvin()])))
        states.append(
            (Cartesian2(e.e11 / norm, e.e12 / norm, e.e22 / norm), Cartesian2(k.e11 / norm, k.e12 / norm, k.e22 / norm))
        )
    best, best_state, worst = math.inf, None, 0.0
    for e, k in states:
        pe, pk = mohr_decompose(e), mohr_decompose(k)
        u1 = float(polar_energy(lp, pe, pk))
        u2 = m_form_energy(lp, pe, pk)
        u3 = kelvin_energy(law, e, k)
        d = max(abs(u1 - u3), abs(u2 - u3)) / scale
        worst = max(worst, d)
        if d > rtol:
            raise ArithmeticError(f"energy routes disagree by {d:.3e} (relative)")
        if u3 < best:
            best, best_state = u3, (e, k)
    return EnergySample(best / scale, best_state, worst, len(states))


def oracle_m_matrix(lp: LaminatePolar, phi_eps, phi_kap) -> np.ndarray:
    """The 4x4 matrix of ``24/h U`` on ``(t_eps, r_eps, t_kap, r_kap)``, by
    polarisation of the polar energy.  Angles in the laboratory frame;
    vectorised (result shape ``(..., 4, 4)``)."""
    pe = np.asarray(phi_eps, dtype=float)
    pk = np.asarray(phi_kap, dtype=float)
    pe, pk = np.broadcast_arrays(pe, pk)
    zero, one = np.zeros_like(pe), np.ones_like(pe)
    basis = [
        (Polar2(one, zero, pe), Polar2(zero, zero, pk)),
        (Polar2(zero, one, pe), Polar2(zero, zero, pk)),
        (Polar2(zero, zero, pe), Polar2(one, zero, pk)),
        (Polar2(zero, zero, pe), Polar2(zero, one, pk)),
    ]
    c = 24.0 / lp.h
    diag = [polar_energy(lp, e, k) for e, k in basis]
    out = np.empty(pe.shape + (4, 4))
    for i, (ei, ki) in enumerate(basis):
        out[..., i, i] = c * diag[i]
        for j in range(i + 1, 4):
            ej, kj = basis[j]
            both = polar_energy(lp, Polar2(ei.t + ej.t, ei.r + ej.r, pe), Polar2(ki.t + kj.t, ki.r + kj.r, pk))
            out[..., i, j] = out[..., j, i] = 0.5 * c * (both - diag[i] - diag[j])
    return out


def state_from_angles(lp: LaminatePolar, phi_eps: float, phi_kap: float) -> tuple[Cartesian2, Cartesian2]:
    """The lowest-energy state with the given strain/curvature directions
    (laboratory frame): eigenvector of the smallest eigenvalue of the 4x4
    matrix, turned back into Cartesian tensors."""
    m = oracle_m_matrix(lp, phi_eps, phi_kap)
    eig, vec = np.linalg.eigh(m)
    t_e, r_e, t_k, r_k = vec[:, 0]
    # a negative polar radius is the same tensor turned by a right angle
    pe = phi_eps + (math.pi / 2 if r_e < 0 else 0.0)
    pk = phi_kap + (math.pi / 2 if r_k < 0 else 0.0)
    return (mohr_compose(Polar2(t_e, abs(r_e), pe)), mohr_compose(Polar2(t_k, abs(r_k), pk)))


# -- grid oracles ----------------------------------------------------------------


def _expr_second_a(lp, pe, pk=None):
    m = oracle_m_matrix(lp, pe, 0.0)
    return cofactor_det(m[..., :2, :2]) / (96 * 48)


def _expr_second_d(lp, pk, _=None):
    # the D block alone, with the curvature angle as the free variable
    m = oracle_m_matrix(lp, 0.0, pk)
    return cofactor_det(m[..., 2:, 2:]) / (8 * 4 * lp.h**4)


def _expr_third(lp, pe, pk=None):
    m = oracle_m_matrix(lp, pe, 0.0)
    return cofactor_det(m[..., :3, :3]) / (96 * 48 * 8 * lp.h**2) / lp.T1


def _expr_fourth(lp, pe, pk):
    m = oracle_m_matrix(lp, pe, pk)
    return cofactor_det(m) / (96 * 48 * 8 * 4 * lp.h**4)


EXPRESSIONS = {
    "second-A": (_expr_second_a, 1),
    "second-D": (_expr_second_d, 1),
    "third": (_expr_third, 1),
    "fourth": (_expr_fourth, 2),
}


def evaluate_expression(name: str, lp: LaminatePolar, *angles):
    """Value of one of :data:`EXPRESSIONS` at laboratory-frame angles."""
    fn, dim = EXPRESSIONS[name]
    if len(angles) != dim:
        raise ValueError(f"{name} takes {dim} angle(s)")
    return fn(lp, *(np.asarray(a, dtype=float) for a in angles))


def grid_min_expression(name: str, lp: LaminatePolar, grid_step: float = math.pi / 720, refine: bool = True):
    """Exhaustive grid minimum of a minor expression over its period.

    ``name`` is one of ``second-A``, ``second-D``, ``third`` (functions of
    the strain angle) or ``fourth`` (both angles).  One-angle expressions
    are refined with a bounded scalar search around the best node.  Returns
    ``(value, argmin)`` with laboratory-frame angles.
    """
    fn, dim = EXPRESSIONS[name]
    period = math.pi / 2
    n = int(round(period / grid_step))
    if n < 1 or abs(n * grid_step - period) > 1e-9 * period:
        raise ValueError(f"grid step {grid_step} does not divide {period}")
    g = np.arange(n) * (period / n)
    if dim == 1:
        v = np.asarray(fn(lp, g), dtype=float)
        i = int(np.argmin(v))
        best, arg = float(v[i]), float(g[i])
        if refine:
            res = minimize_scalar(
                lambda x: float(fn(lp, np.array(x))),
                bounds=(g[i] - grid_step, g[i] + grid_step),
                method="bounded",
                options={"xatol": 1e-12},
            )
            if res.fun < best:
                best, arg = float(res.fun), float(res.x)
        return best, (arg,)
    X, Y = np.meshgrid(g, g, indexing="ij")
    v = np.asarray(fn(lp, X, Y), dtype=float)
    i, j = np.unravel_index(np.argmin(v), v.shape)
    return float(v[i, j]), (float(g[i]), float(g[j]))


# -- random laminates --------------------------------------------------------------


@dataclass(frozen=True)
class PlyBounds:
    """Ranges for random plies: ``T0, T1`` uniform in ``t_range``, ``R0``
    uniform up to ``r0_fraction * T0``, ``R1`` uniform up to ``(1 - r1_margin)``
    times its admissible maximum."""

    t_range: tuple[float, float] = (0.5, 2.0)
    r0_fraction: float = 0.95
    r1_margin: float = 0.05


@dataclass(frozen=True)
class SampleSpec:
    count: int
    seed: int = 0
    ply_bounds: PlyBounds = field(default_factory=PlyBounds)
    max_plies: int = 16
    min_plies: int = 2

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("count must be positive")
        if not 1 <= self.min_plies <= self.max_plies:
            raise ValueError("need 1 <= min_plies <= max_plies")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


FAMILIES = ("generic", "palindrome", "aligned", "pm60")


def random_ply(rng: np.random.Generator, bounds: PlyBounds = PlyBounds(), orthotropic: bool = False) -> PolarElastic4:
    """Random admissible ply; ``orthotropic`` restricts ``Phi0 - Phi1`` to
    ``{0, pi/4}``."""
    lo, hi = bounds.t_range
    T0, T1 = rng.uniform(lo, hi), rng.uniform(lo, hi)
    R0 = rng.uniform(0.0, bounds.r0_fraction * T0)
    if orthotropic:
        phi = math.pi / 4 * int(rng.integers(0, 2))
    else:
        phi = rng.uniform(-math.pi / 4, math.pi / 4)
    r1_max = math.sqrt(T1 * (T0**2 - R0**2) / (2 * (T0 - R0 * math.cos(4 * phi))))
    R1 = rng.uniform(0.0, (1 - bounds.r1_margin) * r1_max)
    phi1 = rng.uniform(-math.pi / 2, math.pi / 2)
    ply = PolarElastic4(T0, T1, R0, R1, phi1 + phi, phi1)
    assert layer_is_admissible(ply)
    return ply


def _angles(rng, family: str, n: int) -> list[float]:
    if family == "generic":
        return list(rng.uniform(-90.0, 90.0, n))
    if family == "palindrome":
        half = list(rng.uniform(-90.0, 90.0, (n + 1) // 2))
        return half + half[: n // 2][::-1]
    if family == "aligned":
        return list(rng.choice([0.0, 90.0], n))
    return list(rng.choice([0.0, 60.0, -60.0], n))


def random_laminates(spec: SampleSpec) -> Iterator[Stacking]:
    """Deterministic stream of random stacks for differential testing.

    The families generic, palindromic, ``{0, 90}`` and ``{0, +60, -60}``
    are cycled in that order.  The ``{0, 90}`` family uses orthotropic
    plies, so its laminates are aligned orthotropic.
    """
    rng = np.random.default_rng(spec.seed)
    for i in range(spec.count):
        family = FAMILIES[i % len(FAMILIES)]
        ply = random_ply(rng, spec.ply_bounds, orthotropic=family == "aligned")
        n = int(rng.integers(spec.min_plies, spec.max_plies + 1))
        yield Stacking.from_degrees(ply, _angles(rng, family, n), label=f"{family}-{i}")


def coupling_scaled_laminates(spec: SampleSpec, max_factor: float = 3.0) -> Iterator[tuple[LaminatePolar, float]]:
    """Random laminates with the coupling moduli multiplied by a factor drawn
    uniformly from ``[0, max_factor]``.

    Real stacks are always feasible; inflating B produces the infeasible
    and near-boundary cases that a differential test needs.
    """
    rng = np.random.default_rng([spec.seed, 1])
    for s in random_laminates(spec):
        lp = compute_abd_polar(s)
        f = float(rng.uniform(0.0, max_factor))
        yield lp.with_B(R0=lp.B.R0 * f, R1=lp.B.R1 * f), f
