"""Numeric oracle: truncated Jackson q-integrals on [0, 1].

The infinite Jackson sum (1-q) sum_{i>=0} f(q^i) q^i is cut at a fixed
number of nodes; the discarded tail of a bounded integrand is a geometric
series, so its size is at most max|f| * q^T per integration level. This
module is deliberately independent of the symbolic layer: plain floats,
literal nested sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

__all__ = [
    "NonconvergedTruncation",
    "OracleConfig",
    "QuadResult",
    "jackson_integral_1d",
    "oracle_family",
]


class NonconvergedTruncation(RuntimeError):
    """The geometric tail estimate exceeds the configured tolerance."""


@dataclass(frozen=True)
class OracleConfig:
    q: float
    truncation: int = 200
    tolerance: float = 1e-9

    def __post_init__(self) -> None:
        if not 0.0 < self.q < 1.0:
            raise ValueError("q must lie strictly between 0 and 1")
        if self.truncation < 1:
            raise ValueError("truncation must be positive")
        if self.tolerance <= 0.0:
            raise ValueError("tolerance must be positive")


class QuadResult(NamedTuple):
    value: float
    tail_bound: float


def jackson_integral_1d(f: Callable[[float], float],
                        cfg: OracleConfig) -> QuadResult:
    """Truncated Jackson integral of f over [0, 1] with its tail bound."""
    nodes = cfg.q ** np.arange(cfg.truncation)
    vals = np.array([f(x) for x in nodes], dtype=float)
    value = (1.0 - cfg.q) * float(np.dot(vals, nodes))
    tail = float(np.max(np.abs(vals))) * cfg.q ** cfg.truncation
    return QuadResult(value, tail)


def _falling_factorial(u: np.ndarray, n: int) -> np.ndarray:
    out = np.ones_like(u)
    for i in range(n):
        out = out * (u - i)
    return out


def oracle_family(family: str, n: int, k: int, rho: float, z: float,
                  cfg: OracleConfig) -> float:
    """Defining k-fold q-integral of one Cauchy-type value, evaluated by
    literal truncated Jackson sums. Only k = 1 and k = 2 are supported;
    this path exists to check the symbolic ones, not to replace them.
    """
    if family not in ("polyCauchy1", "polyCauchy2"):
        raise ValueError("the integral oracle covers the two Cauchy kinds")
    if k not in (1, 2):
        raise ValueError("oracle supports k = 1 or k = 2 only")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if rho == 0.0:
        raise ValueError("rho must be nonzero")
    nodes = cfg.q ** np.arange(cfg.truncation)
    if k == 1:
        u = nodes
        weights = (1.0 - cfg.q) * nodes
    else:
        u = np.outer(nodes, nodes).ravel()
        weights = ((1.0 - cfg.q) ** 2) * u
    if family == "polyCauchy1":
        arg = (u - z) / rho
    else:
        arg = (z - u) / rho
    g = _falling_factorial(arg, n)
    scale = rho ** n
    tail = abs(scale) * float(np.max(np.abs(g))) * k * cfg.q ** cfg.truncation
    if tail > cfg.tolerance:
        raise NonconvergedTruncation(
            "tail bound %.3g exceeds tolerance %.3g" % (tail, cfg.tolerance))
    return scale * float(np.dot(g, weights))
