"""The full pipeline: sweep -> fit the log law -> recommend a dimension.

Runs the default sweep grid (subsample sizes 10..80, every feasible
target dimension) on a synthetic Gaussian dataset, fits
accuracy = c0 * ln(n/m) + c1, and inverts the fit to recommend the
smallest dimension reaching a requested accuracy.
"""

import numpy as np

from opdr import (
    SweepConfig,
    VectorSet,
    fit_law,
    recommend_dim,
    run_sweep,
    summarize,
)

rng = np.random.default_rng(42)
x = VectorSet(rng.normal(size=(400, 48)))

records = run_sweep(x, SweepConfig(seed=7, repeats=3))
print(f"{len(records)} sweep records")

print("\nratio    mean accuracy (every 10th bin)")
for ratio, acc in summarize(records)[::10]:
    print(f"{ratio:.3f}    {acc:.4f}")

fit = fit_law([(r.n, r.m, r.accuracy) for r in records])
print(f"\nfit: accuracy = {fit.c0:.4f} * ln(n/m) + {fit.c1:.4f}"
      f"   (r^2 = {fit.r_squared:.3f}, {fit.n_points} points)")

print("\ntarget accuracy -> recommended dim (m = 200, original d = 48)")
for target in (0.6, 0.8, 0.9, 0.95):
    rec = recommend_dim(fit, target, m=200, max_dim=48)
    flag = " (clamped)" if rec.clamped else ""
    print(f"  {target:.2f} -> {rec.recommended_dim}{flag}")
