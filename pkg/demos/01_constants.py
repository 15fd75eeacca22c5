"""The three constants in the zeta approximation and how they are ordered.

Run with ``python demos/01_constants.py``.
"""

# %% [markdown]
# The error term is K x^{-sigma}.  The proof produces a constant C from
# pi, Euler's gamma and 1/(2 pi); it is rounded up to 29/14 for the
# published statement and to 3 for the easy-to-remember one.

# %%
import math

from zetabound import EULER_GAMMA, MEMORABLE_CONSTANT, PUBLISHED_CONSTANT, digamma, theorem_constant

c = theorem_constant()
print(f"C      = {c:.15f}")
print(f"29/14  = {PUBLISHED_CONSTANT:.15f}")
print(f"3      = {MEMORABLE_CONSTANT}")
print("C < 29/14 < 3:", c < PUBLISHED_CONSTANT < MEMORABLE_CONSTANT)

# %% [markdown]
# The margin between C and 29/14 is under 1e-3, so 29/14 is essentially tight
# for this proof.

# %%
print(f"29/14 - C = {PUBLISHED_CONSTANT - c:.3e}")

# %% [markdown]
# The gamma in C comes from the harmonic-sum estimate
# sum_{k<=n} 1/k = log n + gamma + O(1/n); digamma gives the exact value.

# %%
for n in (10, 100, 1000):
    h = math.fsum(1.0 / k for k in range(1, n + 1))
    print(f"n={n:5d}  H_n - digamma(n+1) = {h - digamma(n + 1):.16f}  (gamma = {EULER_GAMMA:.16f})")
