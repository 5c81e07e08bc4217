"""Leapfrogging versus one-sided dominance.

Run with:  python3 demos/03_leapfrogging.py
"""

import numpy as np

from leapfrog import ModelParams, OrbitConfig, iterate_orbit, parameter_grid, regime_grid, transform_params

# Three parameter sets where the leader keeps changing, and one where it never does.
sets = {
    "leapfrog A": (0.7, 0.45, 0.7, 0.4),
    "leapfrog B": (0.9, 0.6, 0.7, 0.46),
    "leapfrog C": (0.95, 0.35, 0.85, 0.15),
    "one-sided": (0.16, 0.9, 0.46, 0.7),
}

print(f"{'set':12s} {'c':>5s}  {'label':20s} {'period':>9s} {'changes':>7s} {'min w':>8s}")
for name, (a, b, alpha, beta) in sets.items():
    cells = regime_grid(parameter_grid([a], [b], [alpha], [beta], [10.0, 20.0, 150.0]))
    for cell in cells:
        r = cell.report
        period = "-" if r.period is None else str(r.period)
        print(f"{name:12s} {cell.params['c']:5.0f}  {r.label:20s} {period:>9s} "
              f"{r.sign_changes_per_period:7d} {r.min_w:8.4f}")

# A short stretch of the leapfrogging time series: z flips sign, w stays positive.
z, w = iterate_orbit(OrbitConfig(n_sample=24), transform_params(ModelParams(0.9, 0.6, 0.7, 0.46, 150.0)))
print("\nz:", np.array2string(z, precision=3, max_line_width=100))
print("w:", np.array2string(w, precision=3, max_line_width=100))
