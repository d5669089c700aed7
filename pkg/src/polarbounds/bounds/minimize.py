"""Global minimisation of low-degree trigonometric polynomials on a torus.

The fourth-minor expressions only contain the harmonics ``exp(4i(m x + n y))``
with ``m, n`` in ``{-1, 0, 1}``, so they have period ``pi/2`` in each angle.
An exhaustive grid scan is followed by Nelder-Mead refinement around the
best grid nodes.  The Fourier coefficients, recovered exactly from an 8x8
sample, give a Lipschitz constant and hence a certified lower bound
``grid_min - L * step / sqrt(2)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.optimize import minimize

from ..lamination import derived_angles
from .expressions import m4_value

__all__ = ["TorusMinimum", "DEFAULT_GRID_STEP", "trig_coefficients", "minimize_torus", "minimize_m4"]

DEFAULT_GRID_STEP = math.pi / 360
PERIOD = math.pi / 2


@dataclass(frozen=True)
class TorusMinimum:
    value: float
    argmin: tuple[float, float]
    grid_value: float
    grid_argmin: tuple[float, float]
    lipschitz: float
    certified_lower: float
    converged: bool
    grid_step: float


def trig_coefficients(f: Callable, period: float = PERIOD, samples: int = 8):
    """2D DFT of ``f`` on a ``samples x samples`` grid over one period.

    Returns ``(coeffs, leakage)`` where ``coeffs[m, n]`` multiplies
    ``exp(2 pi i (m x + n y) / period)`` (FFT index order) and ``leakage`` is
    the largest coefficient magnitude outside the harmonics ``|m|, |n| <= 1``,
    zero up to round-off for the expressions handled here.
    """
    g = np.arange(samples) * (period / samples)
    X, Y = np.meshgrid(g, g, indexing="ij")
    c = np.fft.fft2(f(X, Y)) / samples**2
    freq = np.fft.fftfreq(samples, d=1.0 / samples)
    band = (np.abs(freq)[:, None] <= 1) & (np.abs(freq)[None, :] <= 1)
    leakage = float(np.max(np.abs(c[~band]))) if np.any(~band) else 0.0
    return c, leakage


def _lipschitz(f: Callable, period: float) -> float:
    c, _ = trig_coefficients(f, period)
    samples = c.shape[0]
    freq = np.fft.fftfreq(samples, d=1.0 / samples) * (2 * math.pi / period)
    radius = np.hypot(freq[:, None], freq[None, :])
    return float(np.sum(np.abs(c) * radius))


def _grid(period: float, grid_step: float) -> np.ndarray:
    n = int(round(period / grid_step))
    if n < 1 or abs(n * grid_step - period) > 1e-9 * period:
        raise ValueError(f"grid step {grid_step} does not divide the period {period}")
    return np.arange(n) * (period / n)


def minimize_torus(
    f: Callable,
    grid_step: float = DEFAULT_GRID_STEP,
    refine_tol: float = 1e-12,
    period: float = PERIOD,
    max_starts: int = 4,
) -> TorusMinimum:
    """Global minimum of a vectorised ``f(x, y)`` over ``[0, period)^2``."""
    if refine_tol <= 0:
        raise ValueError("refine_tol must be positive")
    g = _grid(period, grid_step)
    step = g[1] - g[0] if len(g) > 1 else period
    X, Y = np.meshgrid(g, g, indexing="ij")
    V = np.asarray(f(X, Y), dtype=float)
    i, j = np.unravel_index(np.argmin(V), V.shape)
    grid_value = float(V[i, j])
    grid_argmin = (float(g[i]), float(g[j]))

    L = _lipschitz(f, period)
    slack = L * step / math.sqrt(2)

    is_local = np.ones_like(V, dtype=bool)
    for di in (-1, 0, 1):
        for dj in (-1, 0, 1):
            if di or dj:
                is_local &= V <= np.roll(np.roll(V, di, axis=0), dj, axis=1)
    cand = np.argwhere(is_local)
    cand = cand[np.argsort(V[is_local], kind="stable")]
    starts = [(i, j)] + [
        (a, b) for a, b in cand if (a, b) != (i, j) and V[a, b] <= grid_value + slack
    ]
    starts = starts[:max_starts]

    scale = max(float(np.max(np.abs(V))), 1e-300)
    best_value, best_arg = grid_value, grid_argmin
    converged = True
    for a, b in starts:
        x0 = np.array([g[a], g[b]])
        simplex = np.array([x0, x0 + [0.5 * step, 0.0], x0 + [0.0, 0.5 * step]])
        res = minimize(
            lambda p: float(f(p[0], p[1])),
            x0,
            method="Nelder-Mead",
            bounds=[(x0[0] - step, x0[0] + step), (x0[1] - step, x0[1] + step)],
            options={
                "xatol": refine_tol,
                "fatol": 1e-15 * scale,
                "maxiter": 2000,
                "initial_simplex": simplex,
            },
        )
        if not res.success:
            converged = False
            continue
        if res.fun < best_value:
            best_value = float(res.fun)
            best_arg = (float(res.x[0] % period), float(res.x[1] % period))

    return TorusMinimum(
        value=best_value,
        argmin=best_arg,
        grid_value=grid_value,
        grid_argmin=grid_argmin,
        lipschitz=L,
        certified_lower=grid_value - slack,
        converged=converged,
        grid_step=float(step),
    )


def minimize_m4(lp, da=None, grid_step: float = DEFAULT_GRID_STEP, refine_tol: float = 1e-12) -> TorusMinimum:
    """Global minimum of the fourth-minor expression over both angles.

    The argmin is expressed in the frame of ``Phi1(B)``.
    """
    da = derived_angles(lp) if da is None else da
    return minimize_torus(lambda x, y: m4_value(lp, da, x, y), grid_step, refine_tol)
