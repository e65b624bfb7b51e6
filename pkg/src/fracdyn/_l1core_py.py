"""Pure NumPy fallback for the compiled triangular L1 kernels.

Same contract as ``fracdyn._l1core``: per-row dot products of the reversed
weight prefix with the increment history.
"""

import numpy as np


def _apply(inc, w, scale, dtype):
    n, m = inc.shape
    out = np.zeros((n + 1, m), dtype=dtype)
    for j in range(1, n + 1):
        out[j] = w[j - 1::-1] @ inc[:j]
        out[j] *= scale
    return out


def l1_apply_real(inc, w, scale):
    return _apply(inc, w, scale, np.float64)


def l1_apply_complex(inc, w, scale):
    return _apply(inc, w, scale, np.complex128)
