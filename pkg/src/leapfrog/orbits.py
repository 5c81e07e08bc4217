"""Orbits, period detection, bifurcation sweeps and regime labels.

A regime label is assigned from the post-transient orbit in this order:

1. ``diverged``            the orbit left the divergence bound
2. ``fixed-point``         detected period 1
3. ``chaotic``             no period up to ``max_period`` and Lyapunov exponent > 1e-3
4. ``leapfrogging``        ``z`` takes both signs beyond the deadband
5. ``periodic-one-sided``  one-signed ``z`` with a finite period > 1
6. ``monopoly-X`` / ``monopoly-Y``
                           one-signed ``z`` without a finite period (quasi-periodic)

Orbits that neither settle on a period nor show a positive exponent (invariant
circles, exponent ~ 0) go through the sign tests like periodic ones.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import Diverged, InsufficientSamples, ParameterError
from .model import (
    DiffSumState,
    ModelParams,
    TransformedParams,
    _step_zw_raw,
    sigmoid,
    transform_params,
)
from .stability import CHAOS_THRESHOLD, lyapunov_largest

__all__ = [
    "OrbitConfig",
    "BifurcationRow",
    "RegimeReport",
    "GridCell",
    "REGIME_LABELS",
    "iterate_orbit",
    "iterate_orbit_xy",
    "detect_period",
    "bifurcation_sweep",
    "sign_changes_per_period",
    "label_orbit",
    "classify_regime",
    "parameter_grid",
    "regime_grid",
]

REGIME_LABELS = (
    "fixed-point",
    "leapfrogging",
    "monopoly-X",
    "monopoly-Y",
    "periodic-one-sided",
    "chaotic",
    "diverged",
)

DEFAULT_INITIAL = DiffSumState(-0.1, 0.3)  # (x0, y0) = (0.1, 0.2)


@dataclass(frozen=True)
class OrbitConfig:
    initial: DiffSumState = DEFAULT_INITIAL
    n_transient: int = 1000
    n_sample: int = 500
    divergence_bound: float = 1e12

    def __post_init__(self):
        if self.n_transient < 1 or self.n_sample < 1:
            raise ParameterError("n_transient and n_sample must be >= 1")
        if not self.divergence_bound > 0.0:
            raise ParameterError("divergence_bound must be positive")

    @classmethod
    def from_sales(cls, x0: float, y0: float, **kwargs) -> OrbitConfig:
        return cls(initial=DiffSumState(x0 - y0, x0 + y0), **kwargs)


def iterate_orbit(
    cfg: OrbitConfig,
    tp: TransformedParams,
    include_transient: bool = False,
) -> tuple[np.ndarray, np.ndarray]:
    """Apply the (z, w) map ``n_transient + n_sample`` times from ``cfg.initial``.

    Returns the last ``n_sample`` states (or every state after the initial
    one if ``include_transient``).

    Raises:
        Diverged: if ``|z|`` or ``|w|`` exceeds ``cfg.divergence_bound``.
    """
    n_total = cfg.n_transient + cfg.n_sample
    zs = np.empty(n_total)
    ws = np.empty(n_total)
    a1, b1, beta1, c = tp.a1, tp.b1, tp.beta1, tp.c
    keep = 1.0 - tp.alpha1
    bound = cfg.divergence_bound
    z, w = cfg.initial.z, cfg.initial.w
    for n in range(n_total):
        z, w = _step_zw_raw(z, w, a1, b1, keep, beta1, c)
        if not (abs(z) <= bound and abs(w) <= bound):
            raise Diverged(n + 1, z, w, bound)
        zs[n] = z
        ws[n] = w
    if include_transient:
        return zs, ws
    return zs[cfg.n_transient:], ws[cfg.n_transient:]


def iterate_orbit_xy(cfg: OrbitConfig, p: ModelParams) -> tuple[np.ndarray, np.ndarray]:
    """Same orbit as :func:`iterate_orbit`, computed with the original sales map."""
    x = (cfg.initial.w + cfg.initial.z) / 2.0
    y = (cfg.initial.w - cfg.initial.z) / 2.0
    keep_x, keep_y = 1.0 - p.alpha, 1.0 - p.beta
    xs = np.empty(cfg.n_sample)
    ys = np.empty(cfg.n_sample)
    for n in range(cfg.n_transient + cfg.n_sample):
        s = sigmoid(p.c * (x - y))
        x, y = keep_x * x + p.a * s, keep_y * y + p.b * s
        if not (abs(x) <= cfg.divergence_bound and abs(y) <= cfg.divergence_bound):
            raise Diverged(n + 1, x - y, x + y, cfg.divergence_bound)
        if n >= cfg.n_transient:
            xs[n - cfg.n_transient] = x
            ys[n - cfg.n_transient] = y
    return xs, ys


def detect_period(z: Sequence[float], tol: float = 1e-6, max_period: int = 64) -> int | None:
    """Smallest ``p <= max_period`` with ``|z[n+p] - z[n]| <= tol`` over the tail.

    The tail window is the last ``2 * max_period`` samples. Returns None for
    an aperiodic sequence.
    """
    z = np.asarray(z, dtype=float)
    if len(z) < 4 * max_period:
        raise InsufficientSamples(
            f"need at least {4 * max_period} samples for max_period={max_period}, got {len(z)}"
        )
    window = 2 * max_period
    tail = z[-window:]
    for p in range(1, max_period + 1):
        if np.all(np.abs(tail - z[-window - p:-p]) <= tol):
            return p
    return None


@dataclass(frozen=True)
class BifurcationRow:
    c: float
    samples_z: np.ndarray
    samples_w: np.ndarray
    detected_period: int | None
    error: str | None = None


def bifurcation_sweep(
    tp_base: TransformedParams,
    c_min: float,
    c_max: float,
    n_c: int,
    cfg: OrbitConfig = OrbitConfig(),
    tol: float = 1e-6,
    max_period: int = 64,
) -> list[BifurcationRow]:
    """Post-transient samples and detected period on a uniform grid of ``c``.

    Diverged cells come back with empty samples and ``error`` set; the sweep
    carries on. If ``cfg.n_sample`` is too short for ``max_period`` the
    period search is shortened to ``n_sample // 4``.
    """
    if not c_min < c_max:
        raise ParameterError(f"need c_min < c_max, got {c_min}, {c_max}")
    if n_c < 2:
        raise ParameterError(f"n_c must be >= 2, got {n_c}")
    mp = min(max_period, cfg.n_sample // 4)
    rows = []
    for c in np.linspace(c_min, c_max, n_c):
        c = float(c)
        try:
            z, w = iterate_orbit(cfg, tp_base.with_c(c))
        except Diverged as exc:
            rows.append(BifurcationRow(c, np.empty(0), np.empty(0), None, f"diverged at step {exc.step}"))
            continue
        period = detect_period(z, tol, mp) if mp >= 1 else None
        rows.append(BifurcationRow(c, z, w, period))
    return rows


@dataclass(frozen=True)
class RegimeReport:
    label: str
    period: int | None
    sign_changes_per_period: int
    min_w: float
    lyapunov: float


def _signs(z: np.ndarray, deadband: float) -> np.ndarray:
    s = np.where(z > deadband, 1, np.where(z < -deadband, -1, 0))
    return s[s != 0]


def sign_changes_per_period(z: Sequence[float], period: int | None, deadband: float = 1e-9) -> int:
    """Sign changes of ``z`` over one period, counted cyclically.

    Without a finite period this is the mean number of sign changes per
    oscillation cycle, where a cycle runs from one upward zero crossing to
    the next.
    """
    z = np.asarray(z, dtype=float)
    if period is not None:
        s = _signs(z[-period:], deadband)
        if len(s) < 2:
            return 0
        return int(np.count_nonzero(s != np.roll(s, 1)))
    s = _signs(z, deadband)
    changes = np.count_nonzero(s[1:] != s[:-1])
    ups = np.count_nonzero((s[:-1] < 0) & (s[1:] > 0))
    if ups == 0:
        return int(changes)
    return int(round(changes / ups))


def label_orbit(
    z: Sequence[float],
    period: int | None,
    lyapunov: float,
    deadband: float = 1e-9,
) -> str:
    z = np.asarray(z, dtype=float)
    if period == 1:
        return "fixed-point"
    if period is None and lyapunov > CHAOS_THRESHOLD:
        return "chaotic"
    if np.any(z > deadband) and np.any(z < -deadband):
        return "leapfrogging"
    if period is None:
        if np.all(z > deadband):
            return "monopoly-X"
        if np.all(z < -deadband):
            return "monopoly-Y"
    return "periodic-one-sided"


def classify_regime(
    tp: TransformedParams,
    cfg: OrbitConfig = OrbitConfig(),
    deadband: float = 1e-9,
    tol: float = 1e-6,
    max_period: int = 64,
    lyapunov_samples: int = 10000,
) -> RegimeReport:
    try:
        z, w = iterate_orbit(cfg, tp)
        lyap = lyapunov_largest(cfg.initial, tp, cfg.n_transient, lyapunov_samples,
                                cfg.divergence_bound)
    except Diverged:
        return RegimeReport("diverged", None, 0, float("nan"), float("nan"))
    period = detect_period(z, tol, max_period)
    return RegimeReport(
        label=label_orbit(z, period, lyap, deadband),
        period=period,
        sign_changes_per_period=sign_changes_per_period(z, period, deadband),
        min_w=float(np.min(w)),
        lyapunov=lyap,
    )


def parameter_grid(
    a: Iterable[float],
    b: Iterable[float],
    alpha: Iterable[float],
    beta: Iterable[float],
    c: Iterable[float],
) -> list[dict[str, float]]:
    """Cartesian product of parameter values, ``c`` varying fastest."""
    names = ("a", "b", "alpha", "beta", "c")
    return [dict(zip(names, vals)) for vals in itertools.product(a, b, alpha, beta, c)]


@dataclass(frozen=True)
class GridCell:
    params: dict[str, float]
    report: RegimeReport | None = None
    error: str | None = None


def regime_grid(
    cells: Iterable[Mapping[str, float] | ModelParams],
    cfg: OrbitConfig = OrbitConfig(),
    **kwargs,
) -> list[GridCell]:
    """:func:`classify_regime` on each parameter set, in input order.

    A cell with invalid parameters (or any other failure) carries ``error``
    and does not stop the grid.
    """
    out = []
    for cell in cells:
        raw = cell.as_dict() if isinstance(cell, ModelParams) else dict(cell)
        try:
            p = cell if isinstance(cell, ModelParams) else ModelParams(**raw)
            out.append(GridCell(raw, classify_regime(transform_params(p), cfg, **kwargs)))
        except Exception as exc:  # isolate per-cell failures
            out.append(GridCell(raw, None, f"{type(exc).__name__}: {exc}"))
    return out
