# coding: utf-8

# # Sweeping the boundary of W(A)
#
# For each angle theta the largest eigenvalue of the rotated Hermitian part
# gives a supporting line of W(A), and its eigenvector gives a boundary
# point. The sweep below writes the boundary of a random matrix to CSV and
# compares the polygon with random Rayleigh quotients.

# In[1]:

import sys

import numpy as np

from numrange.fov import fov_boundary, fov_disk_check, max_poly_on_fov, numerical_radius
from numrange.oracle import wa_sample_points

rng = np.random.default_rng(3)
A = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
bd = fov_boundary(A, 720)
print("max |boundary point| =", np.abs(bd.points).max())
print("numerical radius     =", numerical_radius(A).radius)


# Random unit vectors land inside W(A). `outer_violation` measures how far a
# point sticks out of the half-planes, so it should be <= 0 up to rounding.

# In[2]:

pts = wa_sample_points(A, 5000, seed=1)
print("worst violation:", bd.outer_violation(pts).max())


# The shift has a disk for its field of values, a random matrix does not.

# In[3]:

J = np.array([[0, 1], [0, 0]], dtype=complex)
print("J disk:", fov_disk_check(J).ok, "  A disk:", fov_disk_check(A).ok)


# Polynomials: the maximum of |p| on W(A) for p(z) = z^2 - 1.

# In[4]:

print("max |z^2 - 1| on W(A) =", max_poly_on_fov(A, [-1, 0, 1]))


# In[5]:

if len(sys.argv) > 1:
    with open(sys.argv[1], "w") as fh:
        fh.write("theta,support,re,im\n")
        for th, s, p in zip(bd.theta, bd.support, bd.points):
            fh.write(f"{th:.17g},{s:.17g},{p.real:.17g},{p.imag:.17g}\n")
    print("boundary written to", sys.argv[1])
