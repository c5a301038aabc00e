# coding: utf-8

# # Building and taking apart half-radial matrices
#
# Every half-radial matrix is unitarily similar to a direct sum of scaled
# shifts and a smaller block B. We synthesise such a matrix with a random
# unitary, then recover the block form without being told the unitary.

# In[1]:

import numpy as np

from numrange.halfradial import canonical_decomposition, is_half_radial, synthesize_half_radial

A = synthesize_half_radial(n=9, m=3, sigma=2.0, b_radius_frac=0.8, seed=11)
rep = is_half_radial(A)
print("||A|| =", rep.norm, " r(A) =", rep.radius, " multiplicity m =", rep.multiplicity)


# In[2]:

dec = canonical_decomposition(A)
print("m =", dec.m, " size of B =", dec.B.shape[0])
print("||B|| =", dec.B_norm, "< ||A||;  r(B) =", dec.B_radius, "<= ||A||/2")
print("residual ||Q^* A Q - block form|| =", dec.residual)


# The top-left of Q^* A Q is 2 (I_3 (x) J). Print its magnitudes, rounded.

# In[3]:

T = dec.Q.conj().T @ A @ dec.Q
print(np.round(np.abs(T[:6, :6]), 12))


# A matrix that is not half-radial is refused with a report.

# In[4]:

from numrange.errors import NotHalfRadialError

try:
    canonical_decomposition(np.diag([1.0, 0.5, 0.2]))
except NotHalfRadialError as exc:
    print("refused:", exc)
