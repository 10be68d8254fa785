"""Numeric path: truncated Jackson integrals as an outside check."""

import math

import pytest

import oracles as O
from qpoly import (
    NonconvergedTruncation,
    OracleConfig,
    eval_numeric,
    family_value,
    jackson_integral_1d,
    oracle_family,
    q_number,
)

TOL = 1e-9


def test_config_validation():
    with pytest.raises(ValueError):
        OracleConfig(q=0.0)
    with pytest.raises(ValueError):
        OracleConfig(q=1.0)
    with pytest.raises(ValueError):
        OracleConfig(q=0.5, truncation=0)
    with pytest.raises(ValueError):
        OracleConfig(q=0.5, tolerance=0.0)


def test_monomial_rule():
    # the quadrature is exact on monomials: integral of x^m is 1/[m+1]
    for q in (0.3, 0.7):
        cfg = OracleConfig(q=q)
        for m in range(11):
            got = jackson_integral_1d(lambda x, m=m: x ** m, cfg)
            want = 1.0 / q_number(m + 1).evaluate(q)
            assert abs(got.value - want) < TOL, (q, m)
            assert got.tail_bound < TOL


def test_quadrature_matches_plain_python_reference():
    cfg = OracleConfig(q=0.6, truncation=120)
    f = lambda x: math.sin(x) + x ** 2
    got = jackson_integral_1d(f, cfg)
    want = O.jackson_integral_reference(f, 0.6, 120)
    assert got.value == pytest.approx(want, abs=1e-12)


def test_closed_forms_match_oracle_grid():
    for family in ("polyCauchy1", "polyCauchy2"):
        for n in range(5):
            for k in (1, 2):
                closed = family_value(family, n, k)
                for q in (0.3, 0.7):
                    cfg = OracleConfig(q=q)
                    for rho in (1.0, 2.0, -0.5):
                        for z in (0.0, 1.0 / 3.0):
                            got = oracle_family(family, n, k, rho, z, cfg)
                            want = eval_numeric(closed, q=q, rho=rho, z=z)
                            assert abs(got - want) < TOL, \
                                (family, n, k, q, rho, z)


def test_oracle_rejects_unsupported_depth():
    cfg = OracleConfig(q=0.5)
    with pytest.raises(ValueError):
        oracle_family("polyCauchy1", 2, 0, 1.0, 0.0, cfg)
    with pytest.raises(ValueError):
        oracle_family("polyBernoulli", 2, 1, 1.0, 0.0, cfg)


def test_truncation_failure_is_loud():
    # a short q near 1 tail cannot meet a 1e-12 demand
    cfg = OracleConfig(q=0.97, truncation=30, tolerance=1e-12)
    with pytest.raises(NonconvergedTruncation):
        oracle_family("polyCauchy1", 5, 1, 0.5, 0.0, cfg)


def test_quad_result_shape():
    cfg = OracleConfig(q=0.5, truncation=60)
    r = jackson_integral_1d(lambda x: 1.0, cfg)
    assert r.value == pytest.approx(1.0)
    assert r.tail_bound >= 0.0
    value, tail = r
    assert value == r.value and tail == r.tail_bound
