"""
Sweeping the identity catalogue
===============================

Eleven identity families tie the three polynomial families and the
weighted Stirling tables together. Each check clears denominators and
asks whether the difference is the literal zero polynomial, so a pass is
an exact statement about every q, rho and z at once.

One of the reciprocity relations is worth spelling out. With c_n the
first kind and g_n the second kind, the sweep certifies

    (-1)^n c_n(z)/n! = sum_{m=1..n} C(n-1, m-1) rho^(n-m) g_m(z)/m!

and its mirror image, for all n up to the sweep bound. The rho^(n-m)
factor is essential: without it the two sides differ by a multiple of
(1 - rho), as the failure witness below demonstrates.
"""

from collections import Counter
from fractions import Fraction

from qpoly import (
    ParamPoly,
    check_kind_reciprocity,
    format_param_poly,
    poly_cauchy1,
    poly_cauchy2,
    reports_to_json_lines,
    run_identity_sweep,
)
from math import comb, factorial

# a quick run over a small window; bump nmax for the full battery
reports = run_identity_sweep(nmax=6, nmax_mixed=5, k_values=range(-1, 3))
by_family = Counter(r.identity_id for r in reports)
failed = [r for r in reports if r.status != "verified"]

print("reports: %d, failed: %d" % (len(reports), len(failed)))
for identity_id in sorted(by_family):
    print("  %-8s x%d" % (identity_id, by_family[identity_id]))
print()

# machine-readable output, one JSON object per line
print(reports_to_json_lines(reports[:3]))
print()

# drop the rho^(n-m) factor on purpose and watch the identity break
n, k = 2, 1
lhs = poly_cauchy1(n, k).scale(Fraction((-1) ** n, factorial(n)))
rhs = ParamPoly.zero()
for m in range(1, n + 1):
    c = Fraction(comb(n - 1, m - 1), factorial(m))
    rhs = rhs + poly_cauchy2(m, k).scale(c)  # no rho gap here
print("broken variant witness:", format_param_poly(lhs - rhs))

# the shipped check keeps the factor and verifies exactly
for r in check_kind_reciprocity(n, k):
    print(r.identity_id, r.status)
