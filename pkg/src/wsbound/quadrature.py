"""Small quadrature toolkit: composite Simpson with a Richardson error
estimate, the 3/8 variant as an independent same-grid rule, and
Gauss-Legendre for callable integrands."""

from __future__ import annotations

import functools

import numpy as np

from .errors import DomainError


def simpson_uniform(y, h: float) -> float:
    """Composite Simpson on a uniform grid of an odd number of points.

    An even count is handled by Simpson on the first len-1 points plus a
    trapezoid on the final interval; callers that care about full
    fourth-order accuracy should supply odd counts.
    """
    arr = np.asarray(y, dtype=float)
    n = arr.shape[0]
    if n < 3:
        raise DomainError("need at least 3 samples")
    if h <= 0.0:
        raise DomainError("spacing must be positive")
    tail = 0.0
    if n % 2 == 0:
        tail = 0.5 * h * (arr[-2] + arr[-1])
        arr = arr[:-1]
        n -= 1
    s = arr[0] + arr[-1] + 4.0 * arr[1:-1:2].sum() + 2.0 * arr[2:-2:2].sum()
    return float(h / 3.0 * s + tail)


def simpson_with_estimate(y, h: float) -> tuple[float, float]:
    """(integral, error estimate) via Simpson on h and on 2h.

    The estimate is |I_h - I_2h| / 15, the usual Richardson factor for a
    fourth-order rule.  Needs an odd sample count of at least 5 for the
    coarse grid to telescope; otherwise the estimate falls back to the
    h-vs-trapezoid difference.
    """
    arr = np.asarray(y, dtype=float)
    fine = simpson_uniform(arr, h)
    if arr.shape[0] >= 5 and arr.shape[0] % 2 == 1:
        coarse = simpson_uniform(arr[::2], 2.0 * h)
        return fine, abs(fine - coarse) / 15.0
    trap = float(np.trapezoid(arr, dx=h))
    return fine, abs(fine - trap)


def simpson38_uniform(y, h: float) -> float:
    """Composite Simpson 3/8; the interval count must be divisible by 3."""
    arr = np.asarray(y, dtype=float)
    n = arr.shape[0]
    if n < 4 or (n - 1) % 3 != 0:
        raise DomainError("simpson 3/8 needs 3k+1 samples")
    s = arr[0] + arr[-1] + 3.0 * (arr[1:-1].sum() - arr[3:-1:3].sum()) + 2.0 * arr[3:-1:3].sum()
    return float(3.0 * h / 8.0 * s)


@functools.lru_cache(maxsize=8)
def _leggauss(nodes: int):
    return np.polynomial.legendre.leggauss(nodes)


def gauss_legendre(f, a: float, b: float, nodes: int = 64) -> float:
    """Gauss-Legendre quadrature of a callable on [a, b]."""
    if not b > a:
        raise DomainError("need b > a")
    x, w = _leggauss(nodes)
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    return float(half * np.sum(w * np.asarray(f(mid + half * x), dtype=float)))
