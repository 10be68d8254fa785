"""
Exact symbolic values of the three polynomial families
======================================================

Every value is a sparse polynomial in rho and z whose coefficients are
reduced rational functions of q. Nothing here is floating point until we
ask for a numeric sample at the very end.
"""

from fractions import Fraction

from qpoly import (
    classical_number,
    eval_numeric,
    family_value,
    format_param_poly,
    latex_param_poly,
    poly_bernoulli,
)

# the first few Bernoulli-type values, fully symbolic
for n in range(4):
    print("B_%d =" % n, format_param_poly(poly_bernoulli(n, 1)))
print()

# the same machinery runs at any integer depth k, negative included
print("depth -2:", format_param_poly(poly_bernoulli(2, -2)))
print()

# specializing q -> 1, rho = 1, z = 0 recovers the classical numbers;
# the depth-1 Bernoulli row uses the +1/2 sign convention
row = [classical_number("polyBernoulli", n, 1) for n in range(9)]
print("classical Bernoulli row:", [str(v) for v in row])

row = [classical_number("polyCauchy1", n, 1) for n in range(7)]
print("classical Cauchy row:   ", [str(v) for v in row])
print()

# substitution is exact: rho and z accept Fractions
v = family_value("polyCauchy2", 3, 1).substitute(rho=Fraction(1, 2))
print("second kind, n=3, rho=1/2:", format_param_poly(v))
print()

# floats only appear on demand
x = eval_numeric(poly_bernoulli(3, 1), q=0.5, rho=1.0, z=0.25)
print("numeric sample at q=0.5, z=1/4:", x)
print()

# LaTeX output for write-ups
print(latex_param_poly(poly_bernoulli(2, 1)))
