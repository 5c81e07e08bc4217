"""Linear stability of the (z, w) map.

Eigenvalue modulus of the Jacobian is the stability test used everywhere in
this package. The trace-based period-one condition and the closed-form
critical elasticity ``(16 + 8 alpha1) / b1`` are provided as diagnostics
only; they do not in general coincide with the eigenvalue crossing (see
:func:`flip_elasticity`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import Diverged, InsufficientSamples, NoSignChange, NotConverged, ZeroB1
from .fixed_points import BracketingInterval, FixedPointResult, brent_root, find_fixed_points
from .model import DiffSumState, TransformedParams, _step_zw_raw, sech2

__all__ = [
    "Jacobian2x2",
    "StabilityReport",
    "jacobian_at",
    "classify_fixed_point",
    "stability_of",
    "period_one_condition",
    "trace_condition_elasticities",
    "critical_elasticity",
    "flip_elasticity",
    "lyapunov_largest",
    "CHAOS_THRESHOLD",
]

MARGINAL_TOL = 1e-12
CHAOS_THRESHOLD = 1e-3


@dataclass(frozen=True)
class Jacobian2x2:
    j11: float
    j12: float
    j21: float
    j22: float

    @property
    def trace(self) -> float:
        return self.j11 + self.j22

    @property
    def det(self) -> float:
        return self.j11 * self.j22 - self.j12 * self.j21

    def as_array(self) -> np.ndarray:
        return np.array([[self.j11, self.j12], [self.j21, self.j22]])


@dataclass(frozen=True)
class StabilityReport:
    eigenvalues: tuple[complex, complex]
    spectral_radius: float
    classification: str  # stable-node | stable-spiral | unstable | marginal
    trace: float
    determinant: float

    @property
    def is_stable(self) -> bool:
        return self.classification.startswith("stable")


def jacobian_at(z: float, tp: TransformedParams) -> Jacobian2x2:
    """Jacobian of the (z, w) map. It does not depend on ``w``."""
    keep = 1.0 - tp.alpha1
    gain = tp.c * sech2(tp.c * z / 2.0) / 4.0
    return Jacobian2x2(keep - gain * tp.b1, tp.beta1, tp.beta1 + gain * tp.a1, keep)


def stability_of(jac: Jacobian2x2) -> StabilityReport:
    ev = np.linalg.eigvals(jac.as_array()).astype(complex)
    ev = tuple(sorted(ev, key=lambda v: (abs(v), v.real)))
    rho = max(abs(v) for v in ev)
    if abs(rho - 1.0) <= MARGINAL_TOL:
        label = "marginal"
    elif rho < 1.0 - MARGINAL_TOL:
        label = "stable-spiral" if any(v.imag != 0.0 for v in ev) else "stable-node"
    else:
        label = "unstable"
    return StabilityReport(ev, float(rho), label, jac.trace, jac.det)


def classify_fixed_point(fp: FixedPointResult, tp: TransformedParams) -> StabilityReport:
    if not fp.converged:
        raise NotConverged(
            f"fixed point z0={fp.z0} has residuals {fp.residual7a:.3g}, {fp.residual7b:.3g}"
        )
    return stability_of(jacobian_at(fp.z0, tp))


def period_one_condition(z0: float, tp: TransformedParams) -> tuple[float, float]:
    """Trace expression ``8(1 - alpha1) - c b1 sech^2(c z0 / 2)`` and its distance to ±8.

    A distance of zero puts ``(z0, c)`` on the trace boundary ``|tr J| = 2``.
    """
    value = 8.0 * (1.0 - tp.alpha1) - tp.c * tp.b1 * sech2(tp.c * z0 / 2.0)
    return value, min(abs(value - 8.0), abs(value + 8.0))


def trace_condition_elasticities(tp: TransformedParams) -> tuple[float, float]:
    """Values of ``c`` that solve the trace condition at ``z0 = 0`` for +8 and -8."""
    if abs(tp.b1) < 1e-14:
        raise ZeroB1("b1 = 0: the trace condition does not depend on c")
    return -8.0 * tp.alpha1 / tp.b1, (16.0 - 8.0 * tp.alpha1) / tp.b1


def critical_elasticity(tp: TransformedParams) -> float:
    """Closed-form threshold ``(16 + 8 alpha1) / b1``.

    Negative values carry no meaning (``c`` is non-negative); callers should
    treat them as not applicable.
    """
    if abs(tp.b1) < 1e-14:
        raise ZeroB1("b1 = b - a is zero; critical elasticity undefined")
    return (16.0 + 8.0 * tp.alpha1) / tp.b1


def _flip_margin(tp: TransformedParams) -> float:
    # characteristic polynomial at -1: zero when an eigenvalue crosses -1
    pts = find_fixed_points(tp)
    if not pts:
        raise NoSignChange("no fixed point")
    jac = jacobian_at(pts[0].z0, tp)
    return 1.0 + jac.trace + jac.det


def flip_elasticity(
    tp: TransformedParams,
    c_max: float = 200.0,
    n_grid: int = 400,
    tol: float = 1e-10,
) -> float | None:
    """Smallest ``c`` in ``(0, c_max]`` where the fixed-point Jacobian has eigenvalue -1.

    This is where the period-one orbit actually loses stability through a
    period doubling. Assumes a single fixed point. Returns None if no
    crossing is found on the grid.
    """
    cs = np.linspace(0.0, c_max, n_grid + 1)
    prev = _flip_margin(tp.with_c(cs[0]))
    for lo, hi in zip(cs[:-1], cs[1:]):
        cur = _flip_margin(tp.with_c(hi))
        if prev * cur <= 0.0:
            br = BracketingInterval(float(lo), float(hi), prev, cur)
            return brent_root(lambda c: _flip_margin(tp.with_c(c)), br, tol=tol)
        prev = cur
    return None


def lyapunov_largest(
    initial: DiffSumState,
    tp: TransformedParams,
    n_transient: int = 1000,
    n_sample: int = 10000,
    divergence_bound: float = 1e12,
) -> float:
    """Largest Lyapunov exponent from a renormalised tangent vector."""
    if n_sample < 1000:
        raise InsufficientSamples(f"n_sample must be >= 1000, got {n_sample}")
    a1, b1, beta1, c = tp.a1, tp.b1, tp.beta1, tp.c
    keep = 1.0 - tp.alpha1
    z, w = initial.z, initial.w
    for n in range(n_transient):
        z, w = _step_zw_raw(z, w, a1, b1, keep, beta1, c)
        if not (abs(z) <= divergence_bound and abs(w) <= divergence_bound):
            raise Diverged(n + 1, z, w, divergence_bound)

    vz, vw = 1.0, 0.0
    total = 0.0
    for n in range(n_sample):
        gain = c * sech2(c * z / 2.0) / 4.0
        vz, vw = (keep - gain * b1) * vz + beta1 * vw, (beta1 + gain * a1) * vz + keep * vw
        norm = math.hypot(vz, vw)
        if norm == 0.0:
            # tangent collapsed onto the kernel; exponent is -inf
            return float("-inf")
        total += math.log(norm)
        vz, vw = vz / norm, vw / norm
        z, w = _step_zw_raw(z, w, a1, b1, keep, beta1, c)
        if not (abs(z) <= divergence_bound and abs(w) <= divergence_bound):
            raise Diverged(n_transient + n + 1, z, w, divergence_bound)
    return total / n_sample
