"""Backend selection for the triangular L1 history kernels.

Prefers the compiled extension; falls back to the NumPy implementation when
the extension is absent or when ``FRACDYN_PURE`` is set in the environment.
Both backends implement the same functions and agree to rounding error.
"""

import os

import numpy as np

if os.environ.get("FRACDYN_PURE"):
    from . import _l1core_py as _impl
    BACKEND = "python"
else:
    try:
        from . import _l1core as _impl
        BACKEND = "compiled"
    except ImportError:
        from . import _l1core_py as _impl
        BACKEND = "python"


def l1_apply(increments, weights, scale):
    """Weighted history sums ``out[j] = scale * sum_i w[j-i] inc[i-1]``.

    ``increments`` may be 1-D (a single scalar history) or 2-D ``(n, m)``;
    the output has one more row than the input.
    """
    inc = np.asarray(increments)
    squeeze = inc.ndim == 1
    if squeeze:
        inc = inc[:, None]
    w = np.ascontiguousarray(weights, dtype=np.float64)
    if np.iscomplexobj(inc):
        out = _impl.l1_apply_complex(np.ascontiguousarray(inc, dtype=np.complex128),
                                     w, float(scale))
    else:
        out = _impl.l1_apply_real(np.ascontiguousarray(inc, dtype=np.float64),
                                  w, float(scale))
    return out[:, 0] if squeeze else out
