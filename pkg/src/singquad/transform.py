"""Chebyshev-Lobatto grids, the DCT-I, and Chebyshev coefficient transforms."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, InputError, SizeError

__all__ = [
    "HALVED_ENDS",
    "ChebGrid",
    "ChebCoeffs",
    "is_supported_size",
    "dct1",
    "cheb_coeffs",
    "cheb_eval",
]

#: Coefficient convention marker:
#: f ~ a_0/2 + sum_{k=1}^{n-1} a_k T_k + a_n T_n / 2.
HALVED_ENDS = "halved-ends"


def is_supported_size(n: int) -> bool:
    """True when n = m * 2**k with odd part m in {1, 3, 5}."""
    if n < 1:
        return False
    while n % 2 == 0:
        n //= 2
    return n in (1, 3, 5)


def _check_size(n: int) -> None:
    if not is_supported_size(n):
        raise SizeError(
            f"unsupported transform size n={n}; supported sizes are m*2**k with m in {{1, 3, 5}}"
        )


class ChebGrid:
    """Chebyshev-Lobatto angles theta_j = j*pi/n for j = 0..n.

    The corresponding quadrature nodes cos(theta_j) run decreasing from
    +1 to -1.  Grids built with linspace stay nested bit-exactly under
    doubling: angle j/n coincides with angle 2j/(2n).
    """

    __slots__ = ("n", "angles")

    def __init__(self, n: int):
        if n < 1:
            raise SizeError(f"grid size must be >= 1, got {n}")
        self.n = int(n)
        self.angles = np.linspace(0.0, np.pi, self.n + 1)

    @property
    def nodes(self) -> np.ndarray:
        return np.cos(self.angles)

    def __len__(self) -> int:
        return self.n + 1

    def __repr__(self) -> str:
        return f"ChebGrid(n={self.n})"


@dataclass(frozen=True)
class ChebCoeffs:
    """Chebyshev coefficients a_0..a_n in the halved-ends convention."""

    coeffs: np.ndarray
    convention: str = field(default=HALVED_ENDS)

    @property
    def n(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)


def dct1(values) -> np.ndarray:
    """Type-I discrete cosine transform with halved end terms.

    Computes c_k = sum''_{j=0}^{n} v_j cos(j*k*pi/n) for k = 0..n, where
    the double prime halves the j = 0 and j = n terms, in O(n log n)
    operations.

    Parameters
    ----------
    values : array_like
        The n + 1 real samples v_0..v_n.  The size n must be of the form
        m * 2**k with m in {1, 3, 5}.

    Returns
    -------
    numpy.ndarray
        The n + 1 transform values c_0..c_n.

    Raises
    ------
    SizeError
        If n is not a supported transform size.
    InputError
        If any sample is not finite.
    """
    v = np.asarray(values, dtype=float)
    if v.ndim != 1 or v.size < 2:
        raise InputError(f"expected a 1-d array of at least 2 values, got shape {v.shape}")
    n = v.size - 1
    _check_size(n)
    if not np.isfinite(v).all():
        bad = int(np.flatnonzero(~np.isfinite(v))[0])
        raise InputError(f"non-finite sample at index {bad}")
    # The even extension [v_0..v_n, v_{n-1}..v_1] of length 2n turns the
    # DCT-I into one real FFT: Re rfft(ext)_k = 2 c_k.
    ext = np.concatenate([v, v[-2:0:-1]])
    return np.fft.rfft(ext).real / 2.0


def cheb_coeffs(samples) -> ChebCoeffs:
    """Chebyshev interpolation coefficients from Lobatto-grid samples.

    Given samples_j = f(cos(j*pi/n)), returns coefficients a_k = (2/n) c_k
    such that f ~ a_0/2 + sum_{k=1}^{n-1} a_k T_k + a_n T_n / 2.  Exact
    (up to round-off) for polynomials of degree <= n.
    """
    c = dct1(samples)
    n = c.size - 1
    return ChebCoeffs(coeffs=(2.0 / n) * c)


def _two_sum(a, b):
    # Error-free: s + e == a + b exactly in 64-bit arithmetic.
    s = a + b
    t = s - a
    e = (a - (s - t)) + (b - t)
    return s, e


_SPLITTER = 134217729.0  # 2**27 + 1, Dekker splitting constant


def _two_prod(a, b):
    # Error-free: p + e == a * b exactly (Dekker split, no fma needed).
    p = a * b
    c = _SPLITTER * a
    ah = c - (c - a)
    al = a - ah
    c = _SPLITTER * b
    bh = c - (c - b)
    bl = b - bh
    e = al * bl - (((p - ah * bh) - al * bh) - ah * bl)
    return p, e


def _clenshaw_mid(c, xv):
    # Compensated Clenshaw; the eb accumulators carry the per-step
    # rounding residue through the same recurrence.
    two_x = 2.0 * xv
    z = np.zeros_like(xv)
    b1, b2, eb1, eb2 = z, z.copy(), z.copy(), z.copy()
    for k in range(c.size - 1, 0, -1):
        p, pe = _two_prod(two_x, b1)
        s1, e1 = _two_sum(p, -b2)
        s2, e2 = _two_sum(s1, c[k])
        eb1, eb2 = pe + e1 + e2 + two_x * eb1 - eb2, eb1
        b1, b2 = s2, b1
    p, pe = _two_prod(xv, b1)
    s1, e1 = _two_sum(p, -b2)
    s2, e2 = _two_sum(s1, 0.5 * c[0])
    return s2 + (pe + e1 + e2 + xv * eb1 - eb2)


def _reinsch_plus(c, xv):
    # Reinsch variant, stable near x = +1: track d_k = b_k - b_{k+1}.
    u = 2.0 * (xv - 1.0)
    z = np.zeros_like(xv)
    d, b, ed, eb = z, z.copy(), z.copy(), z.copy()
    for k in range(c.size - 1, 0, -1):
        p, pe = _two_prod(u, b)
        s1, e1 = _two_sum(p, d)
        s2, e2 = _two_sum(s1, c[k])
        ed = ed + pe + e1 + e2 + u * eb
        t1, e3 = _two_sum(s2, b)
        eb = eb + ed + e3
        d, b = s2, t1
    p, pe = _two_prod(0.5 * u, b)
    s1, e1 = _two_sum(p, d)
    s2, e2 = _two_sum(s1, 0.5 * c[0])
    return s2 + (pe + e1 + e2 + 0.5 * u * eb + ed)


def _reinsch_minus(c, xv):
    # Mirrored Reinsch variant, stable near x = -1: track e_k = b_k + b_{k+1}.
    u = 2.0 * (xv + 1.0)
    z = np.zeros_like(xv)
    e, b, ee, eb = z, z.copy(), z.copy(), z.copy()
    for k in range(c.size - 1, 0, -1):
        p, pe = _two_prod(u, b)
        s1, e1 = _two_sum(p, -e)
        s2, e2 = _two_sum(s1, c[k])
        ee_new = pe + e1 + e2 + u * eb - ee
        t1, e3 = _two_sum(s2, -b)
        eb = ee_new - eb + e3
        e, ee = s2, ee_new
        b = t1
    p, pe = _two_prod(0.5 * u, b)
    s1, e1 = _two_sum(p, -e)
    s2, e2 = _two_sum(s1, 0.5 * c[0])
    return s2 + (pe + e1 + e2 + 0.5 * u * eb - ee)


def cheb_eval(coeffs, x):
    """Evaluate a halved-ends Chebyshev sum by backward recurrence.

    Uses compensated Clenshaw for |x| < 1/2 and the Reinsch-modified
    recurrences (also compensated) on the outer intervals, which stay
    accurate up to x = +-1 where plain Clenshaw loses ~n^2 eps.  All
    operations remain 64-bit; the compensation terms only capture the
    exact per-step rounding residue.

    Parameters
    ----------
    coeffs : ChebCoeffs or array_like
        Coefficients a_0..a_n in the halved-ends convention.
    x : float or array_like
        Evaluation points with |x| <= 1.

    Returns
    -------
    float or numpy.ndarray
        The sum a_0/2 + sum_{k=1}^{n-1} a_k T_k(x) + a_n T_n(x) / 2,
        scalar for scalar x.
    """
    a = np.asarray(coeffs.coeffs if isinstance(coeffs, ChebCoeffs) else coeffs, dtype=float)
    xv = np.asarray(x, dtype=float)
    if np.any(np.abs(xv) > 1.0):
        raise DomainError("cheb_eval requires |x| <= 1")
    n = a.size - 1
    if n == 0:
        out = np.full_like(xv, 0.5 * a[0])
        return float(out) if xv.ndim == 0 else out
    c = a.copy()
    c[-1] *= 0.5  # fold the convention halving of a_n into the recurrence
    if xv.ndim == 0:
        xs = float(xv)
        if xs >= 0.5:
            return float(_reinsch_plus(c, xv))
        if xs <= -0.5:
            return float(_reinsch_minus(c, xv))
        return float(_clenshaw_mid(c, xv))
    out = np.empty_like(xv)
    hi = xv >= 0.5
    lo = xv <= -0.5
    mid = ~(hi | lo)
    if hi.any():
        out[hi] = _reinsch_plus(c, xv[hi])
    if lo.any():
        out[lo] = _reinsch_minus(c, xv[lo])
    if mid.any():
        out[mid] = _clenshaw_mid(c, xv[mid])
    return out
