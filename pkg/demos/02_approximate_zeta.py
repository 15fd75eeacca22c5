"""Approximating zeta(s) by a short Dirichlet polynomial, with a certified radius.

Run with ``python demos/02_approximate_zeta.py``.
"""

# %%
import numpy as np

from zetabound import HypothesisViolation, approx_zeta, verify_point, zeta_oracle

# %% [markdown]
# Near the first zero on the critical line.  With x = 100 the radius is
# (29/14) / 10; the Euler-Maclaurin oracle shows the actual error is far smaller.

# %%
s = (0.5, 14.134725)
res = approx_zeta(s, 100)
oracle = zeta_oracle(s, res.radius / 1000)
print(f"D(100, s)   = {res.value:.12f}")
print(f"oracle      = {oracle.value:.12f}  (M = {oracle.M}, bound {oracle.error_bound:.1e})")
print(f"radius      = {res.radius:.6f}")
print(f"|error|/rad = {abs(res.value - oracle.value) / res.radius:.4f}")

# %% [markdown]
# How the ratio behaves as x grows past t.  At sigma = 0 the radius does not
# shrink, but the observed error does.

# %%
for sigma in (0.0, 0.5, 1.0):
    ratios = [verify_point((sigma, 20.0), x).ratio for x in (20, 40, 200, 2000)]
    print(f"sigma={sigma}: " + "  ".join(f"{r:.4f}" for r in ratios))

# %% [markdown]
# The statement needs 0 < t <= x.  Outside that range the library refuses.

# %%
try:
    approx_zeta((0.5, 50.0), 10.0)
except HypothesisViolation as exc:
    print("refused:", exc)

# %% [markdown]
# A small grid of points, all of them inside the radius.

# %%
ts = np.geomspace(1, 500, 8)
rows = [verify_point((0.25, t), 2 * t) for t in ts]
print("max ratio over grid:", max(r.ratio for r in rows))
