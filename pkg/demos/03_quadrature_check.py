"""
Checking the symbolic engine against a numeric quadrature
=========================================================

The first-kind and second-kind families have an integral description:
an iterated q-integral of a falling factorial. Truncating the defining
geometric sum gives a floating-point oracle that knows nothing about
Stirling tables, so a match to ten digits is strong outside evidence.
"""

from qpoly import (
    OracleConfig,
    eval_numeric,
    family_value,
    jackson_integral_1d,
    oracle_family,
    q_number,
)

cfg = OracleConfig(q=0.7, truncation=200, tolerance=1e-9)

# the quadrature is exact on monomials: integral of x^m equals 1/[m+1]
for m in (1, 4, 9):
    got = jackson_integral_1d(lambda x, m=m: x ** m, cfg)
    want = 1.0 / q_number(m + 1).evaluate(0.7)
    print("x^%d: quadrature %.12f  closed %.12f  tail < %.1e"
          % (m, got.value, want, got.tail_bound))
print()

# family values, symbolic route vs iterated quadrature
for family in ("polyCauchy1", "polyCauchy2"):
    for n, k, rho, z in ((2, 1, 1.0, 0.0), (4, 2, -0.5, 1 / 3), (5, 1, 2.0, 1 / 3)):
        closed = eval_numeric(family_value(family, n, k),
                              q=cfg.q, rho=rho, z=z)
        oracle = oracle_family(family, n, k, rho, z, cfg)
        print("%-11s n=%d k=%d rho=%+.1f z=%.3f  |diff| = %.3g"
              % (family, n, k, rho, z, abs(closed - oracle)))
