"""Compare the compiled and pure-Python convolution kernels.

Times the three kernel entry points on the workloads the library actually
runs: subset-sum products, truncated denominator products, and their
convolution.  Run as a script:

    python benchmarks/bench_kernels.py
"""

import time

from qblocks.charring import _Packing, full_support_height
from qblocks.kernels import _pykernels

try:
    from qblocks.kernels import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, max_repeats=5, budget=2.0):
    """Best wall time over up to max_repeats runs, stopping after budget seconds."""
    best = float("inf")
    spent = 0.0
    out = None
    for _ in range(max_repeats):
        t0 = time.perf_counter()
        out = fn()
        dt = time.perf_counter() - t0
        best = min(best, dt)
        spent += dt
        if spent > budget:
            break
    return best, out


def workloads():
    # Convolution support grows like the full height simplex, so its rank
    # stops at 5; the rank-6 product would take hours in either backend.
    for n in (5, 6, 7):
        packing = _Packing(n, full_support_height(n))
        roots = packing.packed_positive_roots()
        yield (
            f"subset sums, rank {n}",
            "binomial_product",
            (roots, packing.bound, packing.hshift),
        )
    for n in (4, 5, 6):
        packing = _Packing(n, full_support_height(n))
        roots = packing.packed_positive_roots()
        yield (
            f"denominator, rank {n}",
            "geometric_product",
            (roots, packing.bound, packing.hshift),
        )
    for n in (4, 5):
        packing = _Packing(n, full_support_height(n))
        roots = packing.packed_positive_roots()
        bound, hshift = packing.bound, packing.hshift
        binom = _pykernels.binomial_product(roots, bound, hshift)
        geom = _pykernels.geometric_product(roots, bound, hshift)
        yield f"convolution, rank {n}", "convolve", (binom, geom, bound, hshift)


def main():
    if _ckernels is None:
        print("compiled kernels are not built; nothing to compare")
        print("(pip install -e . runs the build when Cython is present)")
        return
    header = f"{'workload':<22} {'pure':>10} {'compiled':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, op, args in workloads():
        t_py, out_py = best_of(lambda: getattr(_pykernels, op)(*args))
        t_c, out_c = best_of(lambda: getattr(_ckernels, op)(*args))
        assert out_py == out_c, f"backend mismatch on {label}"
        print(
            f"{label:<22} {t_py * 1e3:>8.2f}ms {t_c * 1e3:>8.2f}ms "
            f"{t_py / t_c:>7.1f}x"
        )


if __name__ == "__main__":
    main()
