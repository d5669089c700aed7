from __future__ import annotations

import enum
from dataclasses import dataclass, field

__all__ = ["Verdict", "ConditionMargin", "BoundsReport", "DEFAULT_TOL", "judge"]

DEFAULT_TOL = 1e-9


class Verdict(str, enum.Enum):
    FEASIBLE = "feasible"
    MARGINAL = "marginal"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class ConditionMargin:
    """One inequality of a bound set, as ``value > 0`` (strict) or ``>= 0``.

    ``norm`` is the product of isotropic moduli with the same polynomial
    degree as ``value``; tolerance decisions use ``value / norm``.
    Informational margins (``active=False``) never enter the verdict.
    """

    name: str
    value: float
    norm: float = 1.0
    strict: bool = True
    argmin: tuple[float, float] | None = None
    active: bool = True
    note: str = ""

    @property
    def kind(self) -> str:
        return "strict" if self.strict else "non-strict"

    @property
    def normalized(self) -> float:
        return self.value / self.norm

    def verdict(self, tol: float = DEFAULT_TOL) -> Verdict:
        x = self.normalized
        if x < -tol:
            return Verdict.INFEASIBLE
        if self.strict and x <= tol:
            return Verdict.MARGINAL
        return Verdict.FEASIBLE


def judge(margins, tol: float = DEFAULT_TOL) -> Verdict:
    verdicts = {m.verdict(tol) for m in margins if m.active}
    if Verdict.INFEASIBLE in verdicts:
        return Verdict.INFEASIBLE
    if Verdict.MARGINAL in verdicts:
        return Verdict.MARGINAL
    return Verdict.FEASIBLE


@dataclass(frozen=True)
class BoundsReport:
    margins: tuple[ConditionMargin, ...]
    verdict: Verdict
    case_used: str
    scale: float
    tol: float = DEFAULT_TOL
    variant: str = ""
    notes: tuple[str, ...] = field(default_factory=tuple)
    converged: bool = True

    @property
    def active(self) -> tuple[ConditionMargin, ...]:
        return tuple(m for m in self.margins if m.active)

    @property
    def active_names(self) -> tuple[str, ...]:
        return tuple(m.name for m in self.active)

    def margin(self, name: str) -> ConditionMargin:
        for m in self.margins:
            if m.name == name:
                return m
        raise KeyError(name)

    @property
    def worst(self) -> ConditionMargin:
        """Decisive active margin: the smallest normalised strict margin, or a
        violated non-strict one if that is lower."""
        pool = [m for m in self.active if m.strict or m.value < 0] or list(self.active)
        return min(pool, key=lambda m: m.normalized)
