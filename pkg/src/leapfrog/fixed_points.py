"""Fixed points of the (z, w) map.

The fixed-point system

    alpha1 z - beta1 w + b1 sigmoid(c z) = 0
    alpha1 w - beta1 z - a1 sigmoid(c z) = 0

is linear in ``w`` once ``sigmoid(c z)`` is eliminated, which gives
``w = k z`` with ``k = (a1 alpha1 - b1 beta1) / (a1 beta1 - b1 alpha1)``.
Substituting back leaves one scalar equation in ``z`` that is bracketed on a
grid and polished with Brent's method.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np
from scipy.special import expit

from .errors import DegenerateSlope, NoSignChange
from .model import TransformedParams, sigmoid

__all__ = [
    "FixedPointResult",
    "BracketingInterval",
    "SweepRow",
    "linear_slope",
    "scalar_residual",
    "fixed_point_residuals",
    "brent_root",
    "find_fixed_points",
    "fixed_point_sweep",
    "sweep_table",
    "RESIDUAL_TOL",
]

RESIDUAL_TOL = 1e-10
DEGENERACY_TOL = 1e-14
_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class FixedPointResult:
    z0: float
    w0: float
    residual7a: float
    residual7b: float
    converged: bool


@dataclass(frozen=True)
class BracketingInterval:
    lo: float
    hi: float
    g_lo: float
    g_hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise NoSignChange(f"bracket needs lo < hi, got [{self.lo}, {self.hi}]")
        if self.g_lo * self.g_hi > 0.0:
            raise NoSignChange(
                f"no sign change on [{self.lo}, {self.hi}]: g_lo={self.g_lo}, g_hi={self.g_hi}"
            )

    @classmethod
    def from_function(cls, g: Callable[[float], float], lo: float, hi: float) -> BracketingInterval:
        return cls(lo, hi, g(lo), g(hi))


def linear_slope(tp: TransformedParams) -> float:
    """Slope ``k`` of the line ``w0 = k z0`` on which every fixed point lies."""
    denom = tp.a1 * tp.beta1 - tp.b1 * tp.alpha1
    if abs(denom) < DEGENERACY_TOL:
        raise DegenerateSlope(
            f"a1*beta1 - b1*alpha1 = {denom:.3g}; fixed points are not confined to a line"
        )
    return (tp.a1 * tp.alpha1 - tp.b1 * tp.beta1) / denom


def scalar_residual(z: float, tp: TransformedParams, k: float | None = None) -> float:
    """Reduced fixed-point equation ``g(z) = (alpha1 - beta1 k) z + b1 sigmoid(c z)``."""
    if k is None:
        k = linear_slope(tp)
    return (tp.alpha1 - tp.beta1 * k) * z + tp.b1 * sigmoid(tp.c * z)


def fixed_point_residuals(z0: float, w0: float, tp: TransformedParams) -> tuple[float, float]:
    """Absolute residuals of both unreduced fixed-point equations."""
    s = sigmoid(tp.c * z0)
    r_a = tp.alpha1 * z0 - tp.beta1 * w0 + tp.b1 * s
    r_b = tp.alpha1 * w0 - tp.beta1 * z0 - tp.a1 * s
    return abs(r_a), abs(r_b)


def brent_root(
    g: Callable[[float], float],
    bracket: BracketingInterval,
    tol: float = 1e-12,
    maxiter: int = 200,
) -> float:
    """Root of ``g`` inside ``bracket`` by Brent's method.

    Inverse quadratic interpolation or secant steps are taken when they land
    inside the bracket and shrink it fast enough; otherwise the step is a
    bisection. The bracket always keeps a sign change, so the iteration
    converges for any continuous ``g``. Stops when ``g`` hits zero exactly or
    the bracket half-width drops below ``tol`` plus a few ulps of the iterate.
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    a, b = bracket.lo, bracket.hi
    fa, fb = bracket.g_lo, bracket.g_hi
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if fa * fb > 0.0:
        raise NoSignChange(f"no sign change on [{a}, {b}]")

    # b: best estimate, a: previous iterate, c: contrapoint with sign(fc) != sign(fb)
    c, fc = a, fa
    d = e = b - a
    for _ in range(maxiter):
        if fb * fc > 0.0:
            c, fc = a, fa
            d = e = b - a
        if abs(fc) < abs(fb):
            a, b, c = b, c, b
            fa, fb, fc = fb, fc, fb

        tol1 = 2.0 * _EPS * abs(b) + 0.5 * tol
        m = 0.5 * (c - b)
        if abs(m) <= tol1 or fb == 0.0:
            return b

        if abs(e) >= tol1 and abs(fa) > abs(fb):
            s = fb / fa
            if a == c:
                p = 2.0 * m * s
                q = 1.0 - s
            else:
                q = fa / fc
                r = fb / fc
                p = s * (2.0 * m * q * (q - r) - (b - a) * (r - 1.0))
                q = (q - 1.0) * (r - 1.0) * (s - 1.0)
            if p > 0.0:
                q = -q
            else:
                p = -p
            if 2.0 * p < min(3.0 * m * q - abs(tol1 * q), abs(e * q)):
                e, d = d, p / q
            else:
                d = e = m
        else:
            d = e = m

        a, fa = b, fb
        b += d if abs(d) > tol1 else math.copysign(tol1, m)
        fb = g(b)
    return b


def find_fixed_points(
    tp: TransformedParams,
    z_range: tuple[float, float] = (-5.0, 5.0),
    n_grid: int = 2001,
    tol: float = 1e-12,
    dedup: float = 1e-8,
) -> list[FixedPointResult]:
    """All fixed points whose ``z0`` lies in ``z_range``, sorted by ``z0``.

    Returns an empty list when the reduced equation has no sign change on
    the grid.
    """
    k = linear_slope(tp)
    lin = tp.alpha1 - tp.beta1 * k

    def g(z: float) -> float:
        return lin * z + tp.b1 * sigmoid(tp.c * z)

    grid = np.linspace(z_range[0], z_range[1], n_grid)
    vals = lin * grid + tp.b1 * expit(tp.c * grid)

    roots: list[float] = []
    for i in np.flatnonzero(vals[:-1] * vals[1:] <= 0.0):
        br = BracketingInterval(float(grid[i]), float(grid[i + 1]), float(vals[i]), float(vals[i + 1]))
        r = brent_root(g, br, tol=tol)
        if not roots or abs(r - roots[-1]) > dedup:
            roots.append(r)

    out = []
    for z0 in roots:
        w0 = k * z0
        r_a, r_b = fixed_point_residuals(z0, w0, tp)
        out.append(
            FixedPointResult(z0, w0, r_a, r_b, r_a <= RESIDUAL_TOL and r_b <= RESIDUAL_TOL)
        )
    return out


@dataclass(frozen=True)
class SweepRow:
    """Fixed points at one elasticity value. ``error`` names a degenerate cell."""

    c: float
    points: list[FixedPointResult] = field(default_factory=list)
    error: str | None = None


def fixed_point_sweep(
    tp_base: TransformedParams,
    c_values: Iterable[float],
    **kwargs,
) -> list[SweepRow]:
    """Run :func:`find_fixed_points` for each ``c``; rows come back ordered by ``c``."""
    rows = []
    for c in sorted(float(v) for v in c_values):
        try:
            pts = find_fixed_points(tp_base.with_c(c), **kwargs)
        except DegenerateSlope:
            rows.append(SweepRow(c, [], "degenerate-slope"))
            continue
        except ValueError as exc:
            rows.append(SweepRow(c, [], f"invalid: {exc}"))
            continue
        rows.append(SweepRow(c, pts, None if pts else "no-root"))
    return rows


def sweep_table(rows: Sequence[SweepRow]) -> list[dict]:
    """Flatten sweep rows to records with keys ``c,z0,w0,residual7a,residual7b,converged``.

    Cells without a root get NaN numbers and the error tag in ``converged``.
    """
    table = []
    for row in rows:
        if row.error is not None:
            nan = float("nan")
            table.append(dict(c=row.c, z0=nan, w0=nan, residual7a=nan, residual7b=nan,
                              converged=row.error))
            continue
        for fp in row.points:
            table.append(dict(c=row.c, z0=fp.z0, w0=fp.w0, residual7a=fp.residual7a,
                              residual7b=fp.residual7b, converged=fp.converged))
    return table
