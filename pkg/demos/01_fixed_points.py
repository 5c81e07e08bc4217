"""Where the fixed point sits and when it stops attracting.

Run with:  python3 demos/01_fixed_points.py
"""

import numpy as np

from leapfrog import (
    ModelParams,
    classify_fixed_point,
    critical_elasticity,
    find_fixed_points,
    fixed_point_sweep,
    flip_elasticity,
    linear_slope,
    transform_params,
)
from leapfrog.stability import trace_condition_elasticities

# Firm X invests little (a = 0.16) and loses sales fast (alpha = 0.46);
# firm Y invests more (b = 0.9) and loses sales faster (beta = 0.7).
p = ModelParams(a=0.16, b=0.9, alpha=0.46, beta=0.7, c=105.0)
tp = transform_params(p)
print("transformed parameters:", tp)

# Every fixed point lies on the line w = k z.
k = linear_slope(tp)
print(f"slope k = {k:.9f}")

# At c = 105 there is exactly one fixed point and it repels.
for fp in find_fixed_points(tp):
    rep = classify_fixed_point(fp, tp)
    x, y = (fp.w0 + fp.z0) / 2, (fp.w0 - fp.z0) / 2
    print(f"z0 = {fp.z0:.7f}  w0 = {fp.w0:.7f}  (x, y) = ({x:.7f}, {y:.7f})")
    print(f"  residuals {fp.residual7a:.1e} {fp.residual7b:.1e}  -> {rep.classification}, "
          f"eigenvalues {np.round(rep.eigenvalues, 4)}")

# As c grows the fixed point slides toward the origin: z0 up to 0-, w0 down to 0+.
print("\n    c        z0          w0")
for row in fixed_point_sweep(tp, [0, 25, 50, 100, 200, 1000]):
    fp = row.points[0]
    print(f"{row.c:6.0f}  {fp.z0:+.6f}  {fp.w0:+.6f}")

# Three candidate thresholds for the loss of stability of the fixed point.
print(f"\nclosed-form critical elasticity (16 + 8 alpha1)/b1 : {critical_elasticity(tp):.9f}")
print(f"trace condition at z0 = 0, (16 - 8 alpha1)/b1    : {trace_condition_elasticities(tp)[1]:.6f}")
print(f"eigenvalue -1 crossing at the true fixed point     : {flip_elasticity(tp):.6f}")
