"""The first-derivative bound |int g e^{if}| <= 2 max g/f' and a case where it is attained.

Run with ``python demos/03_first_derivative_sharpness.py``.
"""

# %%
import math

import numpy as np

from zetabound import WeightFunction, check_lemma43
from zetabound.families import lemma43_family, linear_phase, log_phase

# %% [markdown]
# With g = 1 and f(x) = x on [0, pi], the integral is 2i, so |lhs| = 2 = bound.

# %%
r = check_lemma43(None, linear_phase(1.0), 0.0, math.pi)
print(f"lhs = {r.lhs:.15f}, bound = {r.error_bound}, ratio = {r.ratio:.12f}")

# %% [markdown]
# Moving the end point off pi loses the equality.

# %%
for b in (0.5 * math.pi, 0.9 * math.pi, math.pi, 1.5 * math.pi, 2 * math.pi):
    print(f"b = {b / math.pi:.2f} pi: ratio {check_lemma43(None, linear_phase(1.0), 0.0, b).ratio:.6f}")

# %% [markdown]
# A constant g/f': g = 1/x with f = 20 log x.

# %%
g = WeightFunction(lambda x: 1.0 / x, lambda x: -1.0 / x ** 2)
r = check_lemma43(g, log_phase(20.0), 1.0, math.e)
print(f"|lhs| = {r.observed_error:.6f}  bound = {r.error_bound:.6f}")

# %% [markdown]
# A seeded family of power weights against log and quadratic phases.

# %%
ratios = np.array([check_lemma43(g, f, a, b).ratio for _, g, f, a, b in lemma43_family(200)])
print(f"200 cases: max ratio {ratios.max():.4f}, median {np.median(ratios):.4f}")
