"""
Recursions verified with an indeterminate q
===========================================

The exponents in the formulas depend on i, j and n, so each identity is
checked per index tuple with q left symbolic.  Rational functions are
compared by cross-multiplication.
"""

from anzahl import Q, RationalFunction, gamma_h_span, rho_h
from anzahl.identity import identity_sweep, verify_hermitian_recursion

print("gamma_(0,1,2) =", gamma_h_span(0, 1, 2, Q))

r = rho_h(1, 1, 2, Q)
print("rho_(1,1,2) =", r, "  at q=3:", r(3))
print("equals 1 - q/(q^2 (q-1)):", r == 1 - RationalFunction(Q, Q**2 * (Q - 1)))

result = verify_hermitian_recursion(0, 3, 7)
print(result.name, result.parameters, result.holds)

results = identity_sweep("symplectic", 5, 10)
print(len(results), "symplectic checks,", sum(not r.holds for r in results), "failures")
