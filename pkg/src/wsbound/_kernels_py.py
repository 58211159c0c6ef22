"""Pure-Python tridiagonal kernels.

Reference implementations of the two sequential inner loops that dominate
the finite-difference solver: Sturm-sequence pivot counting and the
shifted tridiagonal solve used by inverse iteration.  wsbound.kernels
selects these automatically when the compiled twin is unavailable; the
algorithms and results are identical, only the speed differs.

All kernels assume a symmetric tridiagonal matrix with a constant
off-diagonal, which is what the radial discretization produces.
"""

from __future__ import annotations

import math

import numpy as np

# Smallest normal double; the LAPACK-style pivot floor is SAFMIN * max(1, off^2)
# so that off^2 / pivot never overflows.
SAFMIN = 2.2250738585072014e-308


def default_pivmin(off: float) -> float:
    b2 = off * off
    return SAFMIN * (b2 if b2 > 1.0 else 1.0)


def sturm_count(diag, off: float, shift: float, pivmin: float = -1.0) -> int:
    """Number of eigenvalues strictly below `shift`.

    Counts negative pivots of the LDL^T factorization of (T - shift*I).
    Pivots smaller in magnitude than the floor are replaced by the floor
    with their own sign (exact zeros become +pivmin, which makes the count
    strict: an eigenvalue exactly at `shift` is not counted).
    """
    b2 = off * off
    piv = pivmin if pivmin > 0.0 else default_pivmin(off)
    count = 0
    d = 1.0
    first = True
    for a in np.asarray(diag, dtype=float).tolist():
        if first:
            d = a - shift
            first = False
        else:
            d = (a - shift) - b2 / d
        if abs(d) < piv:
            d = math.copysign(piv, d)
        if d < 0.0:
            count += 1
    return count


def tridiag_solve(diag, off: float, shift: float, rhs):
    """Solve (T - shift*I) x = rhs by banded LU with partial pivoting.

    T is symmetric tridiagonal with main diagonal `diag` and constant
    off-diagonal `off`.  Partial pivoting introduces one extra
    superdiagonal of fill-in; near-singular systems (the normal case for
    inverse iteration) are handled by flooring tiny pivots, which only
    scales the returned vector.
    """
    d = np.asarray(diag, dtype=float)
    n = d.shape[0]
    x = np.array(rhs, dtype=float, copy=True)
    if n == 1:
        den = d[0] - shift
        if abs(den) < SAFMIN:
            den = math.copysign(SAFMIN, den)
        x[0] /= den
        return x

    u0 = np.empty(n)
    u1 = np.empty(n)
    u2 = np.zeros(n)
    piv = default_pivmin(off)

    b = (d - shift).tolist()
    xl = x.tolist()
    c1 = b[0]
    c2 = off
    c3 = 0.0
    for i in range(n - 1):
        b_next = b[i + 1]
        c_next = off if i + 1 < n - 1 else 0.0
        if abs(off) > abs(c1):
            # swap row i with row i+1
            if abs(off) < piv:
                m = 0.0
                u0[i] = math.copysign(piv, off) if off != 0.0 else piv
            else:
                m = c1 / off
                u0[i] = off
            u1[i] = b_next
            u2[i] = c_next
            new_c1 = c2 - m * b_next
            new_c2 = c3 - m * c_next
            xi = xl[i]
            xl[i] = xl[i + 1]
            xl[i + 1] = xi - m * xl[i]
            c1, c2, c3 = new_c1, new_c2, 0.0
        else:
            den = c1 if abs(c1) >= piv else math.copysign(piv, c1)
            m = off / den
            u0[i] = den
            u1[i] = c2
            u2[i] = c3
            c1 = b_next - m * c2
            c2 = c_next - m * c3
            c3 = 0.0
            xl[i + 1] -= m * xl[i]
    u0[n - 1] = c1 if abs(c1) >= piv else math.copysign(piv, c1)
    u1[n - 1] = 0.0

    xl[n - 1] = xl[n - 1] / u0[n - 1]
    xl[n - 2] = (xl[n - 2] - u1[n - 2] * xl[n - 1]) / u0[n - 2]
    for i in range(n - 3, -1, -1):
        xl[i] = (xl[i] - u1[i] * xl[i + 1] - u2[i] * xl[i + 2]) / u0[i]
    return np.array(xl)
