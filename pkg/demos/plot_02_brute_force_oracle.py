"""
Checking formulas against brute force
=====================================

The oracle enumerates subspaces in reduced row echelon form and classifies
each one, so it shares no code with the closed forms.
"""

from anzahl import construct_field, standard_form
from anzahl.oracle import oracle_gamma, oracle_rho, run_campaign

form = standard_form("symplectic", 4, construct_field(2))

# Fix a non-singular plane and count the non-singular planes that complete it.
print("gamma:", oracle_gamma(form, 0, 2, 2))

# The proportion of good ordered pairs among all non-singular pairs.
print("rho:", oracle_rho(form, 2, 2))

# A campaign compares every tuple in the formula domain.
reports = run_campaign(standard_form("hermitian", 3, construct_field(4)))
for r in reports[:6]:
    print(r.statistic, r.parameters, r.oracle_value, r.formula_value, r.status)
print(sum(r.status == "pass" for r in reports), "of", len(reports), "agree")

# Instances over the budget are skipped with a reason, not failed.
skipped = run_campaign(form, budget=30)
print(sum(r.status == "skipped" for r in skipped), "skipped at budget 30")
