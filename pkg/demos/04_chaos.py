"""Chaos at high elasticity, measured by the largest Lyapunov exponent.

Run with:  python3 demos/04_chaos.py
"""

import numpy as np

from leapfrog import ModelParams, OrbitConfig, classify_regime, lyapunov_largest, transform_params

tp = transform_params(ModelParams(0.16, 0.9, 0.46, 0.7, 105.0))
seed = OrbitConfig().initial

rep = classify_regime(tp)
print(f"c = 105: {rep.label}, lyapunov = {rep.lyapunov:.4f}")

# The exponent settles as the sample grows.
for n in (1_000, 10_000, 100_000):
    print(f"  n_sample = {n:6d}: {lyapunov_largest(seed, tp, n_sample=n):+.5f}")

# Scan the elasticity: negative exponents (settled orbits) give way to positive ones.
print("\n    c   lyapunov  label")
for c in np.arange(10.0, 201.0, 15.0):
    r = classify_regime(tp.with_c(c))
    print(f"{c:5.0f}  {r.lyapunov:+8.4f}  {r.label}")
