# coding: utf-8

# # Cross-checking the numerical radius
#
# The production routine refines grid maxima of the support function by
# golden-section search. Two independent oracles check it: a brute-force
# grid of 10^5 angles and a power-type ascent on the unit sphere that can
# only ever give lower bounds.

# In[1]:

import time

import numpy as np

from numrange.fov import numerical_radius
from numrange.oracle import radius_ascent_oracle, radius_grid_oracle

rng = np.random.default_rng(0)
worst_grid = worst_ascent = 0.0
t0 = time.perf_counter()
for i in range(20):
    n = int(rng.integers(2, 11))
    A = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    r = numerical_radius(A).radius
    grid = radius_grid_oracle(A).value
    ascent = radius_ascent_oracle(A, restarts=8, iters=300, seed=i).value
    worst_grid = max(worst_grid, abs(r - grid))
    worst_ascent = max(worst_ascent, ascent - r)
print(f"20 matrices in {time.perf_counter() - t0:.1f} s")
print("max |refined - grid oracle|  =", worst_grid)
print("max (ascent - refined)       =", worst_ascent)
