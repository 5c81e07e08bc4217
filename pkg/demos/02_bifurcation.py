"""A bifurcation diagram in numbers: detected period as the elasticity grows.

Run with:  python3 demos/02_bifurcation.py
"""

from itertools import groupby

from leapfrog import ModelParams, OrbitConfig, bifurcation_sweep, critical_elasticity, transform_params

tp = transform_params(ModelParams(0.16, 0.9, 0.46, 0.7, 0.0))
rows = bifurcation_sweep(tp, 0.0, 200.0, 800, OrbitConfig())

# Collapse consecutive rows with the same period into c-intervals.
print("   c from     c to   period")
for period, group in groupby(rows, key=lambda r: r.detected_period):
    group = list(group)
    label = "aperiodic" if period is None else str(period)
    print(f"{group[0].c:9.3f} {group[-1].c:9.3f}   {label}")

first = next(r.c for r in rows if r.detected_period and r.detected_period >= 2)
print(f"\nfirst period >= 2 at c = {first:.4f}; closed-form value {critical_elasticity(tp):.4f}")

# The sum of sales never goes negative anywhere in the sweep.
print("min w over the whole sweep:", min(r.samples_w.min() for r in rows))

# For a plot, write the same data with:
#   leapfrog bifurcation --config configs/fig4.cfg --out fig4.csv
