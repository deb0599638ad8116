"""
Dense bit-packed vectors vs sparse index sets
=============================================

The same register can live in two representations: a numpy uint64
bit-plane per field dimension, or a dictionary of nonzero coefficients.
They must agree everywhere; they differ only in speed profile.  Dense
wins when supports grow (the decider spreads to 2^n terms mid-run),
sparse wins when supports stay tiny.
"""

import time

import numpy as np

from modalq import point_function, run_unique_sat

rng = np.random.default_rng(3)

print(f"{'n':>3} {'dense [ms]':>12} {'sparse [ms]':>12}  agree")
for n in (6, 10, 14, 18):
    a = int(rng.integers(0, 1 << n))
    fn = point_function(n, a)
    times = {}
    results = {}
    for backend in ("dense", "sparse"):
        best = float("inf")
        for _ in range(3):
            t0 = time.perf_counter()
            results[backend] = run_unique_sat(fn, backend=backend)
            best = min(best, time.perf_counter() - t0)
        times[backend] = best * 1e3
    agree = (
        results["dense"].verdict is results["sparse"].verdict
        and results["dense"].final_support == results["sparse"].final_support
    )
    print(f"{n:>3} {times['dense']:>12.2f} {times['sparse']:>12.2f}  {agree}")

# supports can be compared element for element, not just by verdict
print()
r_dense = run_unique_sat(point_function(12, 0b101010101010), backend="dense")
r_sparse = run_unique_sat(point_function(12, 0b101010101010), backend="sparse")
print("n=12 final support size:", len(r_dense.final_support),
      "| backends identical:", r_dense.final_support == r_sparse.final_support)
