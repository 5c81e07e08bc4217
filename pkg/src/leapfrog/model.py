"""Behrens-Feichtinger duopoly map in sales and difference/sum coordinates.

Two firms X and Y with relative sales ``x`` and ``y`` evolve as

    x' = (1 - alpha) x + a * sigmoid(c (x - y))
    y' = (1 - beta)  y + b * sigmoid(c (x - y))

With ``z = x - y`` (sale difference) and ``w = x + y`` (sale sum) the same
map reads

    z' = (1 - alpha1) z + beta1 w - b1 * sigmoid(c z)
    w' = (1 - alpha1) w + beta1 z + a1 * sigmoid(c z)

where ``a1 = a + b``, ``b1 = b - a``, ``alpha1 = (alpha + beta)/2`` and
``beta1 = (beta - alpha)/2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ParameterError

__all__ = [
    "ModelParams",
    "TransformedParams",
    "SaleState",
    "DiffSumState",
    "sigmoid",
    "sech2",
    "step_xy",
    "step_zw",
    "transform_params",
    "to_diffsum",
    "from_diffsum",
]


def _require_finite(**values: float) -> None:
    for name, v in values.items():
        if not math.isfinite(v):
            raise ParameterError(f"{name} must be finite, got {v!r}")


@dataclass(frozen=True)
class ModelParams:
    """Investment scales ``a``, ``b``, decay rates ``alpha``, ``beta`` and elasticity ``c``."""

    a: float
    b: float
    alpha: float
    beta: float
    c: float

    def __post_init__(self):
        for name in ("a", "b", "alpha", "beta", "c"):
            object.__setattr__(self, name, float(getattr(self, name)))
        _require_finite(a=self.a, b=self.b, alpha=self.alpha, beta=self.beta, c=self.c)
        if not 0.0 < self.alpha <= 1.0:
            raise ParameterError(f"alpha must lie in (0, 1], got {self.alpha}")
        if not 0.0 < self.beta <= 1.0:
            raise ParameterError(f"beta must lie in (0, 1], got {self.beta}")
        if self.a <= 0.0:
            raise ParameterError(f"a must be positive, got {self.a}")
        if self.b <= 0.0:
            raise ParameterError(f"b must be positive, got {self.b}")
        if self.c < 0.0:
            raise ParameterError(f"c must be non-negative, got {self.c}")

    def with_c(self, c: float) -> ModelParams:
        return ModelParams(self.a, self.b, self.alpha, self.beta, c)

    def as_dict(self) -> dict[str, float]:
        return {"a": self.a, "b": self.b, "alpha": self.alpha, "beta": self.beta, "c": self.c}


@dataclass(frozen=True)
class TransformedParams:
    """Parameters of the (z, w) map. Build these with :func:`transform_params`."""

    a1: float
    b1: float
    alpha1: float
    beta1: float
    c: float

    def __post_init__(self):
        _require_finite(a1=self.a1, b1=self.b1, alpha1=self.alpha1, beta1=self.beta1, c=self.c)
        if self.a1 <= 0.0:
            raise ParameterError(f"a1 must be positive, got {self.a1}")
        if self.c < 0.0:
            raise ParameterError(f"c must be non-negative, got {self.c}")

    def with_c(self, c: float) -> TransformedParams:
        return TransformedParams(self.a1, self.b1, self.alpha1, self.beta1, float(c))

    def to_model(self) -> ModelParams:
        """Invert the parameter transform (exact up to rounding)."""
        return ModelParams(
            a=(self.a1 - self.b1) / 2.0,
            b=(self.a1 + self.b1) / 2.0,
            alpha=self.alpha1 - self.beta1,
            beta=self.alpha1 + self.beta1,
            c=self.c,
        )


@dataclass(frozen=True)
class SaleState:
    x: float
    y: float

    def __post_init__(self):
        _require_finite(x=self.x, y=self.y)


@dataclass(frozen=True)
class DiffSumState:
    z: float
    w: float

    def __post_init__(self):
        _require_finite(z=self.z, w=self.w)


def sigmoid(u: float) -> float:
    """Logistic function ``1 / (1 + exp(-u))`` without overflow for large ``|u|``."""
    if u >= 0.0:
        return 1.0 / (1.0 + math.exp(-u))
    e = math.exp(u)
    return e / (1.0 + e)


def sech2(u: float) -> float:
    """``sech(u)**2``, returning 0 once ``|u| > 400``."""
    if abs(u) > 400.0:
        return 0.0
    return (2.0 / (math.exp(u) + math.exp(-u))) ** 2


def transform_params(p: ModelParams) -> TransformedParams:
    return TransformedParams(
        a1=p.a + p.b,
        b1=p.b - p.a,
        alpha1=(p.alpha + p.beta) / 2.0,
        beta1=(p.beta - p.alpha) / 2.0,
        c=p.c,
    )


def step_xy(s: SaleState, p: ModelParams) -> SaleState:
    s_inv = sigmoid(p.c * (s.x - s.y))
    return SaleState(
        (1.0 - p.alpha) * s.x + p.a * s_inv,
        (1.0 - p.beta) * s.y + p.b * s_inv,
    )


def step_zw(s: DiffSumState, tp: TransformedParams) -> DiffSumState:
    z, w = _step_zw_raw(s.z, s.w, tp.a1, tp.b1, 1.0 - tp.alpha1, tp.beta1, tp.c)
    return DiffSumState(z, w)


def _step_zw_raw(z, w, a1, b1, keep, beta1, c):
    # float-only inner step shared by the orbit loops
    s = sigmoid(c * z)
    return keep * z + beta1 * w - b1 * s, keep * w + beta1 * z + a1 * s


def to_diffsum(s: SaleState) -> DiffSumState:
    return DiffSumState(s.x - s.y, s.x + s.y)


def from_diffsum(d: DiffSumState) -> SaleState:
    return SaleState((d.w + d.z) / 2.0, (d.w - d.z) / 2.0)
