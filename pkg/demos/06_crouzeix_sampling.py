# coding: utf-8

# # Sampling Crouzeix ratios
#
# ||p(A)|| / max |p| over W(A) is known to stay below 1 + sqrt 2 and is
# conjectured to stay below 2. Random matrices and polynomials come nowhere
# near either value; half-radial matrices never exceed 2.

# In[1]:

import numpy as np

from numrange.crouzeix import CROUZEIX_PALENCIA, crouzeix_poly_ratio
from numrange.halfradial import synthesize_half_radial

rng = np.random.default_rng(2)
ratios = []
for _ in range(200):
    n = int(rng.integers(2, 7))
    A = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    deg = int(rng.integers(1, 5))
    c = rng.standard_normal(deg + 1) + 1j * rng.standard_normal(deg + 1)
    ratios.append(crouzeix_poly_ratio(A, c, boundary_count=512).ratio)
print("random: max ratio", max(ratios), " proven bound", CROUZEIX_PALENCIA)


# In[2]:

hr = []
for seed in range(30):
    A = synthesize_half_radial(6, 2, 1.0, 0.9, seed=seed)
    c = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    hr.append(crouzeix_poly_ratio(A, c, boundary_count=512).ratio)
print("half-radial: max ratio", max(hr))
print("p(z) = z on a half-radial matrix:",
      crouzeix_poly_ratio(synthesize_half_radial(6, 2, seed=1), [0, 1]).ratio)
