"""
Counting subspaces by singularity index
=======================================

Every j-space of a space carrying a non-degenerate form has a radical,
and the dimension of that radical sorts the j-spaces into classes.
"""

# The closed forms take the base parameter q.  A hermitian geometry with
# q = 2 lives over GF(4).
from anzahl import Q, alpha_h, alpha_s, gauss

print("hermitian points of GF(4)^3 by index:", [alpha_h(i, 1, 3, 2) for i in (0, 1)])
print("all points:", gauss(3, 1, 4))

# The same count with an indeterminate q gives a polynomial.
print("isotropic points of the unitary plane:", alpha_h(1, 1, 3, Q))

# Symplectic dimensions are raw, so GF(2)^4 is ``two_n = 4``.  Every
# 2-space is either non-singular or totally isotropic.
for i in range(3):
    print(f"  {i}-singular 2-spaces of GF(2)^4:", alpha_s(i, 2, 4, 2))

# Summing over the index recovers the Gaussian binomial.
print(sum(alpha_s(i, 2, 4, 2) for i in range(3)), "==", gauss(4, 2, 2))
