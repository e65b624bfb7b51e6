"""Benchmark: compiled triangular L1 kernels vs the pure NumPy fallback.

The workload is the full-history weighted sum behind every time-fractional
operator, O(n_steps^2 * n_nodes).  Run:

    python benchmarks/bench_l1.py
"""

import time

import numpy as np

from fracdyn import BACKEND
from fracdyn import _l1core_py as py_impl
from fracdyn.fracops import l1_weights

try:
    from fracdyn import _l1core as cy_impl
except ImportError:
    cy_impl = None

SHAPES = [(500, 1), (2000, 1), (8000, 1), (500, 64), (2000, 64), (1000, 256),
          (4000, 256)]


def _time(fn, *args, repeat=3):
    best = np.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    print(f"active backend: {BACKEND}")
    print(f"{'n_steps':>8} {'n_nodes':>8} {'numpy (s)':>12} {'compiled (s)':>13} {'speedup':>8}")
    rng = np.random.default_rng(0)
    for n, m in SHAPES:
        inc = np.ascontiguousarray(rng.standard_normal((n, m)))
        w = l1_weights(0.5, n)
        t_py = _time(py_impl.l1_apply_real, inc, w, 1.0)
        if cy_impl is None:
            print(f"{n:>8} {m:>8} {t_py:>12.4f} {'(not built)':>13} {'-':>8}")
            continue
        t_cy = _time(cy_impl.l1_apply_real, inc, w, 1.0)
        print(f"{n:>8} {m:>8} {t_py:>12.4f} {t_cy:>13.4f} {t_py / t_cy:>8.2f}")


if __name__ == "__main__":
    main()
