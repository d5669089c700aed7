"""Feasibility of an (A, B, D) triple: the general bound set, the aligned
orthotropic closed forms, the special material-symmetry cases and a
dispatcher that picks the most specific one.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from ..lamination import LaminatePolar, derived_angles
from ..polar_core import PolarElastic4
from .expressions import (
    FOUR_POINTS,
    aligned_m4_points,
    coupled_isotropic_m4,
    full_square_m4,
    m2_margins,
    m2_quadratic,
    m3_margins,
    m4_value,
    r0_orthotropic_m4,
    square_b_m4,
)
from .minimize import DEFAULT_GRID_STEP, minimize_m4, minimize_torus
from .report import DEFAULT_TOL, BoundsReport, ConditionMargin, Verdict, judge

__all__ = [
    "PATTERN_TOL",
    "ANGLE_TOL",
    "AlignedConfig",
    "SpecialCase",
    "NotAlignedError",
    "CaseNotApplicableError",
    "VerificationError",
    "laminate_moduli",
    "snap_moduli",
    "aligned_config",
    "feasibility_general",
    "feasibility_aligned",
    "feasibility_special",
    "dispatch_check",
]

# pattern detection is kept apart from the verdict band so that a coarse
# --tol does not change which closed form applies
PATTERN_TOL = DEFAULT_TOL
ANGLE_TOL = 1e-8

GENERAL = "general"
UNCOUPLED = "general (uncoupled reduction)"
ALIGNED = "aligned orthotropic"


class NotAlignedError(ValueError):
    pass


class CaseNotApplicableError(ValueError):
    pass


class VerificationError(AssertionError):
    pass


@dataclass(frozen=True)
class AlignedConfig:
    """Indices of an aligned orthotropic laminate.

    ``Phi_X = k_X pi/4`` and ``delta_X = lam_X pi/2``.  Where the modulus an
    angle multiplies vanishes, the index is read from the combination that
    actually appears in the fourth minor (or set to 0 if nothing depends on
    it).
    """

    kA: int = 0
    kB: int = 0
    kD: int = 0
    lamA: int = 0
    lamD: int = 0


class SpecialCase(str, enum.Enum):
    SQUARE_B = "square-b"
    FULL_SQUARE = "full-square"
    R0_ORTHOTROPIC = "r0"
    COUPLED_ISOTROPIC = "isotropic"

    @property
    def title(self) -> str:
        return _CASE_TITLES[self]

    @property
    def defining(self) -> tuple[str, ...]:
        return _CASE_PATTERNS[self]


_CASE_TITLES = {
    SpecialCase.SQUARE_B: "square-symmetric coupling",
    SpecialCase.FULL_SQUARE: "fully square symmetric",
    SpecialCase.R0_ORTHOTROPIC: "R0-orthotropic",
    SpecialCase.COUPLED_ISOTROPIC: "coupled isotropic",
}

_CASE_PATTERNS = {
    SpecialCase.SQUARE_B: ("R1B",),
    SpecialCase.FULL_SQUARE: ("R1A", "R1B", "R1D"),
    SpecialCase.R0_ORTHOTROPIC: ("R0A", "R0B", "R0D"),
    SpecialCase.COUPLED_ISOTROPIC: ("R0A", "R1A", "R0D", "R1D"),
}

_MODULUS_NAMES = ("R0A", "R1A", "R0B", "R1B", "R0D", "R1D")


def laminate_moduli(lp: LaminatePolar) -> dict[str, float]:
    return {
        "R0A": lp.A.R0,
        "R1A": lp.A.R1,
        "R0B": lp.B.R0,
        "R1B": lp.B.R1,
        "R0D": lp.D.R0,
        "R1D": lp.D.R1,
    }


def _modulus_scale(lp: LaminatePolar) -> float:
    return max(lp.T0, lp.T1)


def _tiny(lp: LaminatePolar, pattern_tol: float) -> dict[str, bool]:
    atol = pattern_tol * _modulus_scale(lp)
    return {k: abs(v) <= atol for k, v in laminate_moduli(lp).items()}


def _rebuild(t: PolarElastic4, zero0: bool, zero1: bool) -> PolarElastic4:
    R0 = 0.0 if zero0 else t.R0
    R1 = 0.0 if zero1 else t.R1
    phi0, phi1 = t.Phi0, t.Phi1
    if zero0 and zero1:
        phi0 = phi1 = 0.0
    elif zero1:
        phi1 = phi0
    elif zero0:
        phi0 = phi1
    return PolarElastic4(t.T0, t.T1, R0, R1, phi0, phi1)


def snap_moduli(lp: LaminatePolar, names) -> LaminatePolar:
    """Set the named anisotropic moduli to zero, re-applying the angle
    convention for vanishing moduli."""
    names = set(names)
    unknown = names - set(_MODULUS_NAMES)
    if unknown:
        raise KeyError(f"unknown moduli {sorted(unknown)}")
    tensors = []
    for tag, t in (("A", lp.A), ("B", lp.B), ("D", lp.D)):
        z0, z1 = f"R0{tag}" in names, f"R1{tag}" in names
        tensors.append(_rebuild(t, z0, z1) if (z0 or z1) else t)
    return LaminatePolar(*tensors, lp.h)


def _require_layer_moduli(lp: LaminatePolar) -> None:
    if not (lp.T0 > 0 and lp.T1 > 0):
        raise ValueError(f"isotropic moduli must be positive, got T0={lp.T0}, T1={lp.T1}")
    if lp.A.T0 != lp.D.T0 or lp.A.T1 != lp.D.T1:
        raise ValueError("A and D must share the isotropic moduli of the ply")


def _index(angle: float, quantum: float, angle_tol: float) -> int | None:
    steps = angle / quantum
    k = round(steps)
    if abs(steps - k) * quantum > angle_tol:
        return None
    return int(k)


def aligned_config(
    lp: LaminatePolar,
    pattern_tol: float = PATTERN_TOL,
    angle_tol: float = ANGLE_TOL,
) -> AlignedConfig:
    """Orthotropy and alignment indices, or :class:`NotAlignedError`."""
    da = derived_angles(lp)
    tiny = _tiny(lp, pattern_tol)
    failures = []

    def side(tag, phi, delta):
        if not tiny[f"R1{tag}"]:
            lam = _index(delta, math.pi / 2, angle_tol)
            k = _index(phi, math.pi / 4, angle_tol) if not tiny[f"R0{tag}"] else 0
            if lam is None:
                failures.append(f"delta{tag}")
            if k is None:
                failures.append(f"Phi{tag}")
            return (k or 0) % 2, (lam or 0) % 2
        if not tiny[f"R0{tag}"]:
            k = _index(phi - delta, math.pi / 4, angle_tol)
            if k is None:
                failures.append(f"Phi{tag}-delta{tag}")
            return (k or 0) % 2, 0
        return 0, 0

    kA, lamA = side("A", da.PhiA, da.deltaA)
    kD, lamD = side("D", da.PhiD, da.deltaD)
    kB = 0
    if not tiny["R0B"]:
        kB = _index(da.PhiB, math.pi / 4, angle_tol)
        if kB is None:
            failures.append("PhiB")
        kB = (kB or 0) % 2
    if failures:
        raise NotAlignedError(f"angles off the alignment grid: {', '.join(failures)}")
    return AlignedConfig(kA=kA, kB=kB, kD=kD, lamA=lamA, lamD=lamD)


def _aligned_frame(lp: LaminatePolar, pattern_tol: float, angle_tol: float):
    """``(laminate, config, turned)`` for an aligned laminate, else raises.

    With ``R1(B) = 0`` the angle ``Phi1(B)`` only fixes the reference frame
    of the fourth-minor expression, so ``Phi0(B) + pi/4`` is as good a
    choice as the conventional ``Phi0(B)``; whichever puts the shift angles
    on their grid is used.
    """
    try:
        return lp, aligned_config(lp, pattern_tol, angle_tol), False
    except NotAlignedError:
        if not _tiny(lp, pattern_tol)["R1B"]:
            raise
    B = lp.B
    turned = LaminatePolar(lp.A, PolarElastic4(B.T0, B.T1, B.R0, 0.0, B.Phi0, B.Phi0 + math.pi / 4), lp.D, lp.h)
    return turned, aligned_config(turned, pattern_tol, angle_tol), True


# -- margin builders ----------------------------------------------------------


def _nonneg(lp: LaminatePolar, names, active=True):
    mod = laminate_moduli(lp)
    return [ConditionMargin(f"{n}_nonneg", mod[n], norm=lp.T0, strict=False, active=active) for n in names]


def _four_point_margins(lp, values, norm, use, guard_fn, tol, grid_step, refine_tol, guard):
    """``min`` of the closed-form candidate values plus an optional numeric
    guard.

    The candidate points are only guaranteed to contain the global minimum
    when the coupling has ``R0(B) = 0``; otherwise the numeric minimum of
    ``guard_fn`` is added and becomes active when it is lower.
    """
    pts = [(i, values[i]) for i in use]
    i_min, v_min = min(pts, key=lambda p: p[1])
    out = [ConditionMargin("min_M4_points", v_min, norm=norm, argmin=FOUR_POINTS[i_min])]
    out += [ConditionMargin(f"M4_P{i + 1}", values[i], norm=norm, argmin=FOUR_POINTS[i], active=False) for i in range(len(values))]
    converged = True
    if guard and lp.B.R0 > 0:
        res = minimize_torus(guard_fn, grid_step, refine_tol)
        lower = res.value < v_min - tol * norm
        converged = res.converged
        out.append(
            ConditionMargin(
                "min_M4_numeric",
                res.value,
                norm=norm,
                argmin=res.argmin,
                active=lower,
                note="global minimum below the candidate points" if lower else "agrees with the candidate points",
            )
        )
    return out, converged


def _report(margins, case_used, lp, tol, variant="", notes=(), converged=True) -> BoundsReport:
    notes = tuple(notes)
    if not converged:
        notes += ("minimiser refinement did not converge; grid value used (see certified bound)",)
    return BoundsReport(
        margins=tuple(margins),
        verdict=judge(margins, tol),
        case_used=case_used,
        scale=(lp.T0 * lp.T1) ** 2,
        tol=tol,
        variant=variant,
        notes=notes,
        converged=converged,
    )


# -- general ------------------------------------------------------------------


def feasibility_general(
    lp: LaminatePolar,
    tol: float = DEFAULT_TOL,
    grid_step: float = DEFAULT_GRID_STEP,
    refine_tol: float = 1e-12,
    pattern_tol: float = PATTERN_TOL,
) -> BoundsReport:
    """The complete bound set for an arbitrary laminate.

    With a vanishing coupling tensor the active set reduces to the separate
    bounds of A and D and the fourth minor is not minimised.  The D-side
    conditions on the second and third minors are always reported, but only
    as information: they are implied by the A-side ones and the fourth minor.
    """
    _require_layer_moduli(lp)
    T0, T1 = lp.T0, lp.T1
    da = derived_angles(lp)
    tiny = _tiny(lp, pattern_tol)
    uncoupled = tiny["R0B"] and tiny["R1B"]
    coupled = not uncoupled

    a_lin, a_cub = m2_margins(lp.A, T0, T1)
    d_lin, d_cub = m2_margins(lp.D, T0, T1)
    ab_quad, ab_quart = m3_margins(lp.A, lp.B, da.deltaA, T0, T1)
    db_quad, db_quart = m3_margins(lp.D, lp.B, da.deltaD, T0, T1)

    margins = _nonneg(lp, ("R0A", "R1A"))
    margins += _nonneg(lp, ("R0B", "R1B"), active=coupled)
    margins += _nonneg(lp, ("R0D", "R1D"))
    margins += [
        ConditionMargin("A_T0_minus_R0", a_lin, norm=T0),
        ConditionMargin("A_cubic", a_cub, norm=T0**2 * T1),
        ConditionMargin("AB_quadratic", ab_quad, norm=T0 * T1, active=coupled),
        ConditionMargin("AB_quartic", ab_quart, norm=(T0 * T1) ** 2, active=coupled),
        ConditionMargin("D_T0_minus_R0", d_lin, norm=T0, active=uncoupled),
        ConditionMargin("D_cubic", d_cub, norm=T0**2 * T1, active=uncoupled),
        ConditionMargin("A_quadratic", m2_quadratic(lp.A, T0, T1), norm=T0 * T1, active=False),
        ConditionMargin("DB_quadratic", db_quad, norm=T0 * T1, active=False),
        ConditionMargin("DB_quartic", db_quart, norm=(T0 * T1) ** 2, active=False),
    ]
    notes = []
    converged = True
    if coupled:
        res = minimize_m4(lp, da, grid_step, refine_tol)
        converged = res.converged
        margins.append(
            ConditionMargin(
                "min_M4",
                res.value,
                norm=(T0 * T1) ** 2,
                argmin=res.argmin,
                note=f"certified lower bound {res.certified_lower!r}",
            )
        )
    else:
        notes.append("coupling tensor vanishes: bounds of A and D apply separately")
    return _report(margins, UNCOUPLED if uncoupled else GENERAL, lp, tol, "minimised" if coupled else "closed form", notes, converged)


# -- aligned orthotropic ------------------------------------------------------


def feasibility_aligned(
    lp: LaminatePolar,
    cfg: AlignedConfig | None = None,
    tol: float = DEFAULT_TOL,
    grid_step: float = DEFAULT_GRID_STEP,
    refine_tol: float = 1e-12,
    pattern_tol: float = PATTERN_TOL,
    angle_tol: float = ANGLE_TOL,
    guard: bool = True,
) -> BoundsReport:
    """Closed-form bound set for mutually aligned orthotropic A, B, D.

    When every polar angle sits on its orthotropy/alignment grid the fourth
    minor is stationary only at ``(0,0), (pi/4,0), (0,pi/4), (pi/4,pi/4)``
    and its minimum is the least of the four closed-form values.
    """
    _require_layer_moduli(lp)
    tiny = _tiny(lp, pattern_tol)
    snapped = [k for k, v in tiny.items() if v and laminate_moduli(lp)[k] != 0]
    lp = snap_moduli(lp, snapped)
    lp, found, turned = _aligned_frame(lp, pattern_tol, angle_tol)
    if cfg is not None and cfg != found:
        raise NotAlignedError(f"laminate angles give {found}, not {cfg}")
    cfg = found
    T0, T1 = lp.T0, lp.T1
    R0A, R1A, R1B = lp.A.R0, lp.A.R1, lp.B.R1
    sA = (-1) ** cfg.kA

    margins = _nonneg(lp, _MODULUS_NAMES)
    margins += [
        ConditionMargin("A_T0_minus_R0", T0 - R0A, norm=T0),
        ConditionMargin("AB_quadratic", T0 * T1 - R1A**2 - 3 * R1B**2, norm=T0 * T1),
        ConditionMargin("AB_aligned", T1 * (T0 + sA * R0A) - 2 * R1A**2 - 6 * R1B**2, norm=T0 * T1),
    ]
    da = derived_angles(lp)
    pts, converged = _four_point_margins(
        lp,
        aligned_m4_points(lp, cfg),
        (T0 * T1) ** 2,
        (0, 1, 2, 3),
        lambda x, y: m4_value(lp, da, x, y),
        tol,
        grid_step,
        refine_tol,
        guard,
    )
    margins += pts
    notes = [f"aligned indices {cfg}"]
    if turned:
        notes.append("square-symmetric coupling referred to Phi0(B) + pi/4")
    if snapped:
        notes.append(f"snapped to zero: {', '.join(snapped)}")
    return _report(margins, ALIGNED, lp, tol, "closed form (aligned)", notes, converged)


# -- special symmetry cases ---------------------------------------------------


def feasibility_special(
    lp: LaminatePolar,
    case: SpecialCase | str,
    tol: float = DEFAULT_TOL,
    grid_step: float = DEFAULT_GRID_STEP,
    refine_tol: float = 1e-12,
    pattern_tol: float = PATTERN_TOL,
    angle_tol: float = ANGLE_TOL,
    guard: bool = True,
) -> BoundsReport:
    """Bound set of one of the special cases defined by vanishing moduli.

    Aligned laminates get the closed-form candidate values; otherwise the
    reduced fourth-minor expression of the case is minimised numerically.
    """
    case = SpecialCase(case)
    _require_layer_moduli(lp)
    tiny = _tiny(lp, pattern_tol)
    failed = [n for n in case.defining if not tiny[n]]
    if failed:
        raise CaseNotApplicableError(f"{case.title}: moduli {', '.join(failed)} do not vanish")
    moduli = laminate_moduli(lp)
    snapped = [n for n in case.defining if moduli[n] != 0]
    lp = snap_moduli(lp, case.defining)
    turned = False
    try:
        lp, cfg, turned = _aligned_frame(lp, pattern_tol, angle_tol)
    except NotAlignedError:
        cfg = None
    da = derived_angles(lp)

    builder = {
        SpecialCase.SQUARE_B: _square_b,
        SpecialCase.FULL_SQUARE: _full_square,
        SpecialCase.R0_ORTHOTROPIC: _r0_orthotropic,
        SpecialCase.COUPLED_ISOTROPIC: _coupled_isotropic,
    }[case]
    margins, converged = builder(lp, da, cfg, tol, grid_step, refine_tol, guard)
    notes = []
    if cfg is not None:
        notes.append(f"aligned indices {cfg}")
    if turned:
        notes.append("square-symmetric coupling referred to Phi0(B) + pi/4")
    if snapped:
        notes.append(f"snapped to zero: {', '.join(snapped)}")
    variant = "closed form (aligned)" if cfg is not None else "minimised"
    return _report(margins, case.title, lp, tol, variant, notes, converged)


def _minimised(name, fn, norm, grid_step, refine_tol):
    res = minimize_torus(fn, grid_step, refine_tol)
    m = ConditionMargin(name, res.value, norm=norm, argmin=res.argmin, note=f"certified lower bound {res.certified_lower!r}")
    return m, res.converged


def _square_b(lp, da, cfg, tol, grid_step, refine_tol, guard):
    T0, T1 = lp.T0, lp.T1
    R0A, R1A = lp.A.R0, lp.A.R1
    margins = _nonneg(lp, ("R0A", "R1A", "R0B", "R0D", "R1D"))
    margins.append(ConditionMargin("A_T0_minus_R0", T0 - R0A, norm=T0))
    if cfg is None:
        margins.append(ConditionMargin("A_cubic", m2_margins(lp.A, T0, T1)[1], norm=T0**2 * T1))
        m, conv = _minimised("min_M4", lambda x, y: square_b_m4(lp, da, x, y), (T0 * T1) ** 2, grid_step, refine_tol)
        return margins + [m], conv
    sA = (-1) ** cfg.kA
    margins.append(ConditionMargin("A_aligned", T1 * (T0 + sA * R0A) - 2 * R1A**2, norm=T0 * T1))
    pts, conv = _four_point_margins(
        lp, aligned_m4_points(lp, cfg), (T0 * T1) ** 2, (0, 1, 2, 3),
        lambda x, y: square_b_m4(lp, da, x, y), tol, grid_step, refine_tol, guard,
    )
    return margins + pts, conv


def _full_square(lp, da, cfg, tol, grid_step, refine_tol, guard):
    T0 = lp.T0
    margins = _nonneg(lp, ("R0A", "R0B", "R0D"))
    margins.append(ConditionMargin("A_T0_minus_R0", T0 - lp.A.R0, norm=T0))
    fn = lambda x, y: full_square_m4(lp, da, x, y)  # noqa: E731
    if cfg is None:
        m, conv = _minimised("min_M4", fn, T0**2, grid_step, refine_tol)
        return margins + [m], conv
    sA, sD = (-1) ** cfg.kA, (-1) ** cfg.kD
    R0A, R0B, R0D = lp.A.R0, lp.B.R0, lp.D.R0
    values = (
        (T0 + sA * R0A) * (T0 + sD * R0D) - 3 * R0B**2,
        (T0 - sA * R0A) * (T0 + sD * R0D),
        (T0 - sD * R0D) * (T0 + sA * R0A),
        (T0 - sA * R0A) * (T0 - sD * R0D) - 3 * R0B**2,
    )
    pts, conv = _four_point_margins(lp, values, T0**2, (0, 1, 2, 3), fn, tol, grid_step, refine_tol, guard)
    return margins + pts, conv


def _r0_orthotropic(lp, da, cfg, tol, grid_step, refine_tol, guard):
    T0, T1 = lp.T0, lp.T1
    T0T1 = T0 * T1
    R1A, R1B, R1D = lp.A.R1, lp.B.R1, lp.D.R1
    margins = _nonneg(lp, ("R1A", "R1B", "R1D"))
    margins.append(ConditionMargin("AB_quadratic", T0T1 - R1A**2 - 3 * R1B**2, norm=T0T1))
    if cfg is None:
        quartic = T0T1**2 - 2 * R1A**2 * (T0T1 - 3 * R1B**2) - 6 * R1B**2 * (T0T1 + R1A**2 * math.cos(4 * da.deltaA))
        margins += [
            ConditionMargin("A_r0_quadratic", T0T1 - 2 * R1A**2, norm=T0T1),
            ConditionMargin("AB_quartic", quartic, norm=T0T1**2),
        ]
        m, conv = _minimised("min_M4", lambda x, y: r0_orthotropic_m4(lp, da, x, y), T0T1**2, grid_step, refine_tol)
        return margins + [m], conv
    lA, lD = (-1) ** cfg.lamA, (-1) ** cfg.lamD
    values = (
        (T0T1 - 2 * R1A**2) * (T0T1 - 2 * R1D**2) - 12 * R1B**2 * (T0T1 - 3 * R1B**2 + 2 * lA * lD * R1A * R1D),
        T0T1 * (T0T1 - 2 * R1D**2 - 6 * R1B**2),
        T0T1 * (T0T1 - 2 * R1A**2 - 6 * R1B**2),
        T0T1**2,
    )
    margins.append(ConditionMargin("AB_r0_aligned", T0T1 - 2 * R1A**2 - 6 * R1B**2, norm=T0T1))
    # the fourth candidate value is always positive
    pts, conv = _four_point_margins(
        lp, values, T0T1**2, (0, 1, 2), lambda x, y: r0_orthotropic_m4(lp, da, x, y),
        tol, grid_step, refine_tol, guard,
    )
    return margins + pts, conv


def _coupled_isotropic(lp, da, cfg, tol, grid_step, refine_tol, guard):
    T0, T1 = lp.T0, lp.T1
    T0T1 = T0 * T1
    R0B, R1B = lp.B.R0, lp.B.R1
    margins = _nonneg(lp, ("R0B", "R1B"))
    margins.append(ConditionMargin("B_isotropic_quadratic", T0T1 - 6 * R1B**2, norm=T0T1))
    fn = lambda x, y: coupled_isotropic_m4(lp, da, x, y)  # noqa: E731
    if cfg is None:
        m, conv = _minimised("min_M4", fn, T0T1**2, grid_step, refine_tol)
        return margins + [m], conv
    m4_1 = T1**2 * (T0**2 - 3 * R0B**2) - 12 * R1B**2 * (T0T1 - 3 * R1B**2)
    m4_2 = T0T1 * (T0T1 - 6 * R1B**2)
    m4_4 = T1**2 * (T0**2 - 3 * R0B**2)
    pts, conv = _four_point_margins(lp, (m4_1, m4_2, m4_2, m4_4), T0T1**2, (0, 1, 3), fn, tol, grid_step, refine_tol, guard)
    return margins + pts, conv


# -- dispatch -----------------------------------------------------------------


def dispatch_check(
    lp: LaminatePolar,
    tol: float = DEFAULT_TOL,
    grid_step: float = DEFAULT_GRID_STEP,
    refine_tol: float = 1e-12,
    pattern_tol: float = PATTERN_TOL,
    angle_tol: float = ANGLE_TOL,
    verify: bool = False,
) -> BoundsReport:
    """Route to the most specific applicable bound set.

    Order: vanishing coupling, coupled isotropic, fully square symmetric,
    R0-orthotropic, square-symmetric coupling, aligned orthotropic, general.
    With ``verify=True`` the general set is also evaluated and a decided
    disagreement raises :class:`VerificationError`.
    """
    _require_layer_moduli(lp)
    tiny = _tiny(lp, pattern_tol)
    kw = dict(tol=tol, grid_step=grid_step, refine_tol=refine_tol, pattern_tol=pattern_tol)

    def all_tiny(names):
        return all(tiny[n] for n in names)

    if all_tiny(("R0B", "R1B")):
        report = feasibility_general(lp, **kw)
    else:
        report = None
        for case in (
            SpecialCase.COUPLED_ISOTROPIC,
            SpecialCase.FULL_SQUARE,
            SpecialCase.R0_ORTHOTROPIC,
            SpecialCase.SQUARE_B,
        ):
            if all_tiny(case.defining):
                report = feasibility_special(lp, case, angle_tol=angle_tol, **kw)
                break
        if report is None:
            try:
                report = feasibility_aligned(lp, angle_tol=angle_tol, **kw)
            except NotAlignedError:
                report = feasibility_general(lp, **kw)

    if verify and report.case_used not in (GENERAL, UNCOUPLED):
        general = feasibility_general(lp, **kw)
        decided = {report.verdict, general.verdict} <= {Verdict.FEASIBLE, Verdict.INFEASIBLE}
        if decided and report.verdict != general.verdict:
            raise VerificationError(
                f"{report.case_used} says {report.verdict.value}, general set says {general.verdict.value}"
            )
    return report
