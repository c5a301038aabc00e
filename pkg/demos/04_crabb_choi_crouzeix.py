# coding: utf-8

# # Matrices that reach ratio 2 for a monomial
#
# The Crabb-Choi-Crouzeix matrix C_n has numerical radius 1 while
# ||C_n^n|| = 2, so z^n reaches ratio 2 in Crouzeix's inequality. Powers of
# C_n applied to the last basis vector produce a chain with norms
# 2, sqrt 2, ..., sqrt 2, 1 that are mutually orthogonal.

# In[1]:

import numpy as np

from numrange.crouzeix import (
    ccc_matrix,
    crabb_chain,
    crabb_decomposition,
    crouzeix_monomial_ratio,
    ratio_table,
    synthesize_crabb_form,
)

for n in range(1, 6):
    C = ccc_matrix(n)
    print(n, "superdiagonal:", np.round(np.diag(C, 1).real, 4),
          " ratio at k=n:", round(crouzeix_monomial_ratio(C, n).ratio, 12))


# In[2]:

ch = crabb_chain(ccc_matrix(4), 4)
print("norm profile:", np.round(ch.norm_profile, 12))
print("largest off-diagonal Gram entry:", ch.gram_offdiag)


# Ratio table for C_3: only k = 3 is extremal, and k = 4 gives a zero power.

# In[3]:

for row in ratio_table(ccc_matrix(3), 4):
    print(row["k"], round(row["ratio"], 10), row["extremal"])


# Hide r (C_3 (+) B) behind a random unitary and recover it.

# In[4]:

A = synthesize_crabb_form(n=7, k=3, scale=1.4, b_radius=0.7, seed=5)
dec = crabb_decomposition(A, 3)
print("scale r(A) =", dec.scale)
print("B is", dec.B.shape, " r(B) =", dec.b_radius, " ||B^3|| =", dec.b_power_norm)
print("residual =", dec.residual)
