# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled triangular kernels for the L1 product-integration scheme.

The hot loop of every time-fractional operator here is the full-history
weighted sum

    out[j] = scale * sum_{i=1..j} w[j-i] * inc[i-1],   j = 0..n

applied column-wise to an ``(n, m)`` array of per-step increments.  This is
O(n^2 m) and dominates residual evaluation and operator application on long
trajectories; ``fracdyn._l1core_py`` holds the NumPy fallback with identical
semantics.
"""

import numpy as np

cimport cython


def l1_apply_real(double[:, ::1] inc, double[::1] w, double scale):
    """Triangular weighted history sum for real increments.

    ``inc`` has shape (n, m): row i-1 holds the increment over step i.
    Returns an (n+1, m) array whose row j is the weighted sum above; row 0
    is zero.
    """
    cdef Py_ssize_t n = inc.shape[0]
    cdef Py_ssize_t m = inc.shape[1]
    cdef Py_ssize_t j, i, c
    cdef double wji
    out_arr = np.zeros((n + 1, m), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    for j in range(1, n + 1):
        for i in range(j):
            wji = w[j - 1 - i]
            for c in range(m):
                out[j, c] += wji * inc[i, c]
        for c in range(m):
            out[j, c] *= scale
    return out_arr


def l1_apply_complex(double complex[:, ::1] inc, double[::1] w, double scale):
    """Complex-valued counterpart of :func:`l1_apply_real`."""
    cdef Py_ssize_t n = inc.shape[0]
    cdef Py_ssize_t m = inc.shape[1]
    cdef Py_ssize_t j, i, c
    cdef double wji
    out_arr = np.zeros((n + 1, m), dtype=np.complex128)
    cdef double complex[:, ::1] out = out_arr
    for j in range(1, n + 1):
        for i in range(j):
            wji = w[j - 1 - i]
            for c in range(m):
                out[j, c] = out[j, c] + wji * inc[i, c]
        for c in range(m):
            out[j, c] = out[j, c] * scale
    return out_arr
