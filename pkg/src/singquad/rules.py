"""Clenshaw-Curtis and Gauss-Legendre quadrature rule construction."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import NumericError, SizeError
from .transform import ChebGrid, dct1, is_supported_size

__all__ = [
    "RuleKind",
    "QuadratureRule",
    "DeltaCoeff",
    "cc_rule_direct",
    "cc_rule_fast",
    "gl_rule",
]


class RuleKind(enum.Enum):
    CLENSHAW_CURTIS = "cc"
    GAUSS_LEGENDRE = "gl"


@dataclass(frozen=True)
class DeltaCoeff:
    """End-halving coefficient: value 1/2 at j = 0 or j = n, else 1."""

    value: float

    @classmethod
    def at(cls, j: int, n: int) -> "DeltaCoeff":
        return cls(0.5 if j in (0, n) else 1.0)


@dataclass(frozen=True)
class QuadratureRule:
    """An immutable quadrature rule on [-1, 1].

    For Clenshaw-Curtis, ``n`` counts intervals (n + 1 points, nodes
    decreasing from +1); for Gauss-Legendre it counts points (nodes
    increasing).
    """

    kind: RuleKind
    n: int
    nodes: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        if self.weights.min() <= 0.0:
            raise NumericError(f"{self.kind.value} rule n={self.n}: non-positive weight")
        total = float(self.weights.sum())
        if abs(total - 2.0) > 1e-12:
            raise NumericError(f"{self.kind.value} rule n={self.n}: weights sum to {total!r}")

    @property
    def npoints(self) -> int:
        return len(self.nodes)


def cc_rule_direct(n: int) -> QuadratureRule:
    """Clenshaw-Curtis rule by direct O(n^2) evaluation of the weight formula.

    w_j = (4 delta_j / n) * sum_{k=0}^{floor(n/2)} delta_{2k} cos(2jk*pi/n) / (1 - 4k^2),
    where delta halves the terms at the ends of its index range (j in
    {0, n}; 2k in {0, n}).  Serves as the reference oracle for
    cc_rule_fast.
    """
    if n < 1:
        raise SizeError(f"rule size must be >= 1, got {n}")
    k = np.arange(n // 2 + 1)
    term = 1.0 / (1.0 - 4.0 * k * k)
    term[0] *= 0.5
    if n % 2 == 0:
        term[-1] *= 0.5  # 2k = n happens only for even n
    j = np.arange(n + 1)
    cosines = np.cos(np.outer(j, k) * (2.0 * np.pi / n))
    w = (4.0 / n) * (cosines @ term)
    w[0] *= 0.5
    w[-1] *= 0.5
    return QuadratureRule(RuleKind.CLENSHAW_CURTIS, n, ChebGrid(n).nodes, w)


def cc_rule_fast(n: int) -> QuadratureRule:
    """Clenshaw-Curtis rule in O(n log n) via the DCT-I.

    For even n the half-range weights are (2 delta_j / n) * dct1(v)_j
    with v_k = 2/(1 - 4k^2), k = 0..n/2; the rest follow from the
    symmetry w_j = w_{n-j}.  The odd supported sizes (1, 3, 5) fall back
    to the direct formula.
    """
    if not is_supported_size(n):
        raise SizeError(
            f"unsupported rule size n={n}; supported sizes are m*2**k with m in {{1, 3, 5}}"
        )
    if n % 2 == 1:
        return cc_rule_direct(n)
    k = np.arange(n // 2 + 1)
    v = 2.0 / (1.0 - 4.0 * k * k)
    w_half = (2.0 / n) * dct1(v)
    w_half[0] *= 0.5
    w = np.concatenate([w_half, w_half[-2::-1]])
    return QuadratureRule(RuleKind.CLENSHAW_CURTIS, n, ChebGrid(n).nodes, w)


def gl_rule(n: int) -> QuadratureRule:
    """Gauss-Legendre rule: Newton iteration on the Legendre recurrence.

    Nodes are the roots of P_n found by Newton's method started from the
    Chebyshev roots cos((2i+1)pi/(2n)); weights are
    w_i = 2 / ((1 - x_i^2) P_n'(x_i)^2).  Nodes are stored increasing.
    Exact for polynomials of degree <= 2n - 1.
    """
    if n < 1:
        raise SizeError(f"rule size must be >= 1, got {n}")
    i = np.arange(n)
    x = -np.cos((2.0 * i + 1.0) * np.pi / (2.0 * n))  # increasing initial guesses
    for _ in range(100):
        p, p_prev = _legendre_pair(n, x)
        deriv = n * (x * p - p_prev) / (x * x - 1.0)
        dx = p / deriv
        x -= dx
        if np.max(np.abs(dx)) < 1e-15:
            break
    else:
        raise NumericError(f"Legendre root search did not converge for n={n}")
    p, p_prev = _legendre_pair(n, x)
    deriv = n * (x * p - p_prev) / (x * x - 1.0)
    w = 2.0 / ((1.0 - x * x) * deriv * deriv)
    # enforce the exact +/- symmetry of the true roots and weights
    x = 0.5 * (x - x[::-1])
    w = 0.5 * (w + w[::-1])
    return QuadratureRule(RuleKind.GAUSS_LEGENDRE, n, x, w)


def _legendre_pair(n: int, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(P_n(x), P_{n-1}(x)) by the three-term recurrence."""
    p_prev = np.ones_like(x)
    p = x.copy()
    if n == 1:
        return p, p_prev
    for k in range(2, n + 1):
        p, p_prev = ((2.0 * k - 1.0) * x * p - (k - 1.0) * p_prev) / k, p
    return p, p_prev
