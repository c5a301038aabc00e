# coding: utf-8

# # The shift and two 3x3 matrices
#
# A nonzero matrix is half-radial when its norm is exactly twice its
# numerical radius. The 2x2 shift is the simplest one. Below we check it and
# then look at two 3x3 matrices that share the same singular structure but
# land on opposite sides of the question.

# In[1]:

import numpy as np

from numrange.fov import numerical_radius
from numrange.halfradial import is_half_radial, is_in_theta

J = np.array([[0, 1], [0, 0]], dtype=complex)
res = numerical_radius(J)
print("r(J) =", res.radius, " ||J|| =", np.linalg.norm(J, 2))
print("half-radial:", is_half_radial(J).verdict)


# The first 3x3 matrix has norm 1, and its maximal singular vectors sit in
# the right null spaces. Every structural test passes, yet the radius is 0.9
# because the block view is J (+) [0.9].

# In[2]:

A2 = np.array([[0, 0, 0], [0, 0.9, 0], [1, 0, 0]], dtype=complex)
rep = is_half_radial(A2)
print("r =", rep.radius, " ||A|| =", rep.norm, " verdict:", rep.verdict)
for name, chk in rep.diagnostics.items():
    print(f"  {name:24s} {'ok' if chk.ok else 'FAILS'}  residual={chk.residual:.2e}")


# Moving the 1 from the corner into the top row and shrinking the diagonal
# entry to 1/2 gives a half-radial matrix.

# In[3]:

A3 = np.array([[0, 1, 0], [0, 0, 0], [0, 0, 0.5]], dtype=complex)
rep = is_half_radial(A3)
print("r =", rep.radius, " ||A|| =", rep.norm, " verdict:", rep.verdict)


# e_3 attains the numerical radius of A3, but it does not have the special
# form the theory singles out: its R(A^*) component x has <Ax, x> = 1/2.

# In[4]:

e3 = np.array([0, 0, 1], dtype=complex)
print("|<A e3, e3>| =", abs(np.vdot(e3, A3 @ e3)))
chk = is_in_theta(A3, e3)
print("in Theta:", chk.ok, " <Ax, x> =", chk.detail["axx"])
