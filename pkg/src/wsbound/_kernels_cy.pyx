# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled tridiagonal kernels.

Mirrors wsbound._kernels_py exactly: Sturm-sequence pivot counting and
the shifted banded-PLU solve.  Kept free of any algorithmic cleverness
the fallback does not share, so the two backends are interchangeable.
"""

from libc.math cimport fabs, copysign

import numpy as np

cdef double SAFMIN = 2.2250738585072014e-308


cpdef double default_pivmin(double off):
    cdef double b2 = off * off
    return SAFMIN * (b2 if b2 > 1.0 else 1.0)


def sturm_count(double[::1] diag, double off, double shift, double pivmin=-1.0):
    """Number of eigenvalues strictly below `shift` (negative LDL^T pivots)."""
    cdef Py_ssize_t n = diag.shape[0]
    cdef double b2 = off * off
    cdef double piv = pivmin if pivmin > 0.0 else default_pivmin(off)
    cdef Py_ssize_t i, count = 0
    cdef double d
    if n == 0:
        return 0
    d = diag[0] - shift
    if fabs(d) < piv:
        d = copysign(piv, d)
    if d < 0.0:
        count += 1
    for i in range(1, n):
        d = (diag[i] - shift) - b2 / d
        if fabs(d) < piv:
            d = copysign(piv, d)
        if d < 0.0:
            count += 1
    return count


def tridiag_solve(double[::1] diag, double off, double shift, double[::1] rhs):
    """Solve (T - shift*I) x = rhs by banded LU with partial pivoting."""
    cdef Py_ssize_t n = diag.shape[0]
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] x = out
    cdef Py_ssize_t i
    cdef double den, m, c1, c2, c3, b_next, c_next, xi
    cdef double piv = default_pivmin(off)

    for i in range(n):
        x[i] = rhs[i]
    if n == 1:
        den = diag[0] - shift
        if fabs(den) < SAFMIN:
            den = copysign(SAFMIN, den)
        x[0] /= den
        return out

    u0_arr = np.empty(n, dtype=np.float64)
    u1_arr = np.empty(n, dtype=np.float64)
    u2_arr = np.zeros(n, dtype=np.float64)
    cdef double[::1] u0 = u0_arr
    cdef double[::1] u1 = u1_arr
    cdef double[::1] u2 = u2_arr

    c1 = diag[0] - shift
    c2 = off
    c3 = 0.0
    for i in range(n - 1):
        b_next = diag[i + 1] - shift
        c_next = off if i + 1 < n - 1 else 0.0
        if fabs(off) > fabs(c1):
            if fabs(off) < piv:
                m = 0.0
                u0[i] = copysign(piv, off) if off != 0.0 else piv
            else:
                m = c1 / off
                u0[i] = off
            u1[i] = b_next
            u2[i] = c_next
            xi = x[i]
            x[i] = x[i + 1]
            x[i + 1] = xi - m * x[i]
            c1 = c2 - m * b_next
            c2 = c3 - m * c_next
            c3 = 0.0
        else:
            den = c1 if fabs(c1) >= piv else copysign(piv, c1)
            m = off / den
            u0[i] = den
            u1[i] = c2
            u2[i] = c3
            c1 = b_next - m * c2
            c2 = c_next - m * c3
            c3 = 0.0
            x[i + 1] -= m * x[i]
    u0[n - 1] = c1 if fabs(c1) >= piv else copysign(piv, c1)
    u1[n - 1] = 0.0

    x[n - 1] = x[n - 1] / u0[n - 1]
    x[n - 2] = (x[n - 2] - u1[n - 2] * x[n - 1]) / u0[n - 2]
    for i in range(n - 3, -1, -1):
        x[i] = (x[i] - u1[i] * x[i + 1] - u2[i] * x[i + 2]) / u0[i]
    return out
