"""
How often is a pair of non-singular spaces good?
================================================

rho is the fraction of ordered pairs of non-singular spaces that meet
trivially and span a non-singular space.  It tends to 1 as q grows.
"""

from anzahl import rho_h, rho_s
from anzahl.bounds import check_literature_constants, check_rho_h_bounds, sweep

for q in (2, 3, 4, 5, 7, 8, 9):
    print(f"q={q:2d}  hermitian rho_(1,1,2) = {str(rho_h(1, 1, 2, q)):>7}   symplectic rho_(2,2,4) = {rho_s(1, 1, 2, q)}")

# Each bound check keeps both sides as exact fractions.
c = check_rho_h_bounds(2, 2, 4, 2)
print(c.bound_id, c.lhs, ">=", c.rhs, c.holds)

# At q = 3 the 3/2 constant is attained exactly.
for c in check_literature_constants("hermitian", 1, 1, 2, 3):
    print(f"{c.bound_id:28} {c.lhs} vs {c.rhs}  equality={c.is_equality}")

checks = sweep("rho-symplectic")
print(len(checks), "symplectic checks,", sum(not c.holds for c in checks), "violations")
