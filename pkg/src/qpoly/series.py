"""Truncated formal power series over ParamPoly coefficients.

This is the second, independent computation path for the families: their
exponential generating functions are expanded here with exact arithmetic
and compared coefficient by coefficient against the closed forms. Order-N
truncation is exact because every composition argument has zero constant
term, so no discarded term can feed back into a kept one.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Sequence

from .core import ParamPoly, QRat, q_number_power_inverse

__all__ = [
    "NonInvertibleConstantTerm",
    "NonZeroConstantTerm",
    "TruncSeries",
    "egf_coefficient",
    "gf_poly_bernoulli",
    "gf_poly_cauchy1",
    "gf_poly_cauchy2",
    "gf_weighted_stirling",
    "series_compose",
    "series_exp",
    "series_inverse",
    "series_log1p",
]


class NonZeroConstantTerm(ValueError):
    """Composition or logarithm argument has a nonzero constant term."""


class NonInvertibleConstantTerm(ValueError):
    """Series inversion needs a constant term that is a nonzero rational
    function of q alone."""


def _coerce_coeff(c) -> ParamPoly:
    if isinstance(c, ParamPoly):
        return c
    return ParamPoly.const(c)


class TruncSeries:
    """Power series in t truncated at a fixed order.

    Arithmetic between two series yields the smaller of the two orders, so
    a result never claims coefficients that were not actually computed.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence) -> None:
        if not coeffs:
            raise ValueError("a series needs at least its constant term")
        self.coeffs: tuple[ParamPoly, ...] = tuple(_coerce_coeff(c) for c in coeffs)

    @classmethod
    def zero(cls, order: int) -> "TruncSeries":
        return cls([ParamPoly.zero()] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls([ParamPoly.const(1)] + [ParamPoly.zero()] * order)

    @classmethod
    def identity(cls, order: int) -> "TruncSeries":
        """The series t."""
        if order < 1:
            raise ValueError("order must be at least 1")
        coeffs = [ParamPoly.zero()] * (order + 1)
        coeffs[1] = ParamPoly.const(1)
        return cls(coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> ParamPoly:
        if not 0 <= i <= self.order:
            raise IndexError("coefficient beyond truncation order")
        return self.coeffs[i]

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncSeries(self.coeffs[: order + 1])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return "TruncSeries(order=%d)" % self.order

    def __neg__(self) -> "TruncSeries":
        return TruncSeries([-c for c in self.coeffs])

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return TruncSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.order, other.order)
        out = [ParamPoly.zero()] * (n + 1)
        for i in range(n + 1):
            a = self.coeffs[i]
            if a.is_zero():
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b.is_zero():
                    continue
                out[i + j] = out[i + j] + a * b
        return TruncSeries(out)

    def __pow__(self, exponent: int) -> "TruncSeries":
        if exponent < 0:
            raise ValueError("negative series power; use series_inverse")
        result = TruncSeries.one(self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c) -> "TruncSeries":
        factor = _coerce_coeff(c)
        return TruncSeries([coeff * factor for coeff in self.coeffs])


def series_compose(outer: TruncSeries, inner: TruncSeries) -> TruncSeries:
    """outer(inner(t)), requiring inner to have zero constant term."""
    if not inner.coeffs[0].is_zero():
        raise NonZeroConstantTerm("composition argument must vanish at t=0")
    n = min(outer.order, inner.order)
    inner = inner.truncate(n)
    acc = TruncSeries([outer.coeffs[n]] + [ParamPoly.zero()] * n)
    for i in range(n - 1, -1, -1):
        acc = acc * inner
        acc = TruncSeries([acc.coeffs[0] + outer.coeffs[i]] + list(acc.coeffs[1:]))
    return acc


def series_exp(f: TruncSeries) -> TruncSeries:
    """exp(f) for f with zero constant term."""
    if not f.coeffs[0].is_zero():
        raise NonZeroConstantTerm("exponential argument must vanish at t=0")
    n = f.order
    outer = TruncSeries([ParamPoly.const(Fraction(1, factorial(i)))
                         for i in range(n + 1)])
    return series_compose(outer, f)


def series_log1p(f: TruncSeries) -> TruncSeries:
    """log(1 + f) for f with zero constant term."""
    if not f.coeffs[0].is_zero():
        raise NonZeroConstantTerm("logarithm argument must vanish at t=0")
    n = f.order
    coeffs = [ParamPoly.zero()]
    for i in range(1, n + 1):
        c = Fraction(1, i) if i % 2 else Fraction(-1, i)
        coeffs.append(ParamPoly.const(c))
    return series_compose(TruncSeries(coeffs), f)


def series_inverse(f: TruncSeries) -> TruncSeries:
    """Multiplicative inverse, requiring an invertible constant term.

    The constant term must be a nonzero rational function of q alone; any
    dependence on rho, z or y would make the inverse leave the polynomial
    coefficient ring.
    """
    c0 = f.coeffs[0]
    if c0.is_zero() or not c0.is_constant():
        raise NonInvertibleConstantTerm("constant term is not a q-unit")
    g0 = c0.constant_term().inverse()
    n = f.order
    out = [ParamPoly.const(g0)]
    neg_g0 = -g0
    for i in range(1, n + 1):
        acc = ParamPoly.zero()
        for j in range(1, i + 1):
            fj = f.coeffs[j]
            if not fj.is_zero():
                acc = acc + fj * out[i - j]
        out.append(acc.scale(neg_g0))
    return TruncSeries(out)


def egf_coefficient(series: TruncSeries, n: int) -> ParamPoly:
    """n! times the t^n coefficient."""
    return series.coefficient(n).scale(Fraction(factorial(n)))


# ---------------------------------------------------------------------------
# generating functions


def _bernoulli_argument(order: int) -> TruncSeries:
    """(1 - e^(-rho t)) / rho: coefficient of t^n is (-1)^(n+1) rho^(n-1) / n!."""
    coeffs = [ParamPoly.zero()]
    for n in range(1, order + 1):
        c = Fraction(1, factorial(n)) if n % 2 else Fraction(-1, factorial(n))
        coeffs.append(ParamPoly.monomial(c, rho=n - 1))
    return TruncSeries(coeffs)


def _cauchy_argument(order: int) -> TruncSeries:
    """log(1 + rho t) / rho: coefficient of t^n is (-1)^(n-1) rho^(n-1) / n."""
    coeffs = [ParamPoly.zero()]
    for n in range(1, order + 1):
        c = Fraction(1, n) if n % 2 else Fraction(-1, n)
        coeffs.append(ParamPoly.monomial(c, rho=n - 1))
    return TruncSeries(coeffs)


def _exp_linear(order: int, sign: int, slot: str) -> TruncSeries:
    """exp(sign * v * t) with v the slot variable: t^n picks v^n sign^n / n!."""
    coeffs = []
    for n in range(order + 1):
        c = Fraction(sign ** n, factorial(n))
        if slot == "z":
            coeffs.append(ParamPoly.monomial(c, z=n))
        else:
            coeffs.append(ParamPoly.monomial(c, y=n))
    return TruncSeries(coeffs)


def gf_poly_bernoulli(k: int, order: int) -> TruncSeries:
    """Exponential generating function of the Bernoulli-type family.

    With w = (1 - e^(-rho t))/rho this is

        [ sum_{j>=0} w^j / [j+1]_q^k ] * e^(-z t)

    where the bracket is the k-th q-polylogarithm of w divided by w,
    expanded pole-free.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    w = _bernoulli_argument(order)
    outer = TruncSeries([ParamPoly.const(q_number_power_inverse(j, k))
                         for j in range(order + 1)])
    head = series_compose(outer, w)
    return head * _exp_linear(order, -1, "z")


def gf_poly_cauchy1(k: int, order: int) -> TruncSeries:
    """Exponential generating function of the first Cauchy-type family.

    With u = log(1 + rho t)/rho this is

        (1 + rho t)^(-z/rho) * sum_{j>=0} u^j / (j! [j+1]_q^k)

    and the prefactor is realized as exp(-z u), which keeps every
    coefficient polynomial in rho and z.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    u = _cauchy_argument(order)
    outer = TruncSeries([ParamPoly.const(q_number_power_inverse(j, k)
                                         * Fraction(1, factorial(j)))
                         for j in range(order + 1)])
    lif = series_compose(outer, u)
    prefactor = series_exp(u.scale(ParamPoly.monomial(-1, z=1)))
    return lif * prefactor


def gf_poly_cauchy2(k: int, order: int) -> TruncSeries:
    """Exponential generating function of the second Cauchy-type family:
    the mirror of the first kind, exp(z u) times the sum over (-u)^j."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    u = _cauchy_argument(order)
    outer = TruncSeries([ParamPoly.const(q_number_power_inverse(j, k)
                                         * Fraction(1, factorial(j)))
                         for j in range(order + 1)])
    lif = series_compose(outer, -u)
    prefactor = series_exp(u.scale(ParamPoly.monomial(1, z=1)))
    return lif * prefactor


def gf_weighted_stirling(kind: str, m: int, order: int) -> TruncSeries:
    """Generating function of one weighted Stirling column, weight in the
    z slot: e^(x t)(e^t - 1)^m / m! for the second kind and
    (1-t)^(-x) (-log(1-t))^m / m! for the first."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if order < m:
        raise ValueError("order must be at least m")
    if kind == "second":
        base = TruncSeries([ParamPoly.zero()]
                           + [ParamPoly.const(Fraction(1, factorial(i)))
                              for i in range(1, order + 1)])
        front = _exp_linear(order, 1, "z")
    elif kind == "first":
        base = TruncSeries([ParamPoly.zero()]
                           + [ParamPoly.const(Fraction(1, i))
                              for i in range(1, order + 1)])
        front = series_exp(base.scale(ParamPoly.monomial(1, z=1)))
    else:
        raise ValueError("kind must be 'first' or 'second'")
    column = (base ** m).scale(Fraction(1, factorial(m)))
    return front * column
