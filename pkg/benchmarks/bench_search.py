"""Time the compiled and NumPy closure kernels on the exhaustive search.

    python benchmarks/bench_search.py [--repeat 3]
"""
import argparse
import time

from crystal_sm import kernels, oracle
from crystal_sm.stratum import SuperbasicData
from crystal_sm.verify import grid

CASES = [(4, 7, (4, 3, 0, 0)), (4, 7, (3, 2, 2, 0)), (4, 5, (3, 1, 1, 0)), (3, 7, (5, 2, 0))]


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--full-grid", action="store_true", help="time every case of the n <= 4, m <= 7 grid")
    args = parser.parse_args()
    cases = grid((2, 3, 4), 7) if args.full_grid else CASES
    print(f"compiled backend available: {kernels.BACKEND == 'cython'}")
    print(f"{'n':>2} {'m':>2} {'mu':<12} {'classes':>7} {'cython_s':>9} {'numpy_s':>9} {'speedup':>8}")
    total = {"cython": 0.0, "numpy": 0.0}
    for n, m, mu in cases:
        data = SuperbasicData(n, m)
        oracle._candidates.cache_clear()
        oracle._candidates(n, m + n)  # exclude grid construction from both timings
        tc, rc = timed(lambda: oracle.enumerate_top_bruteforce(mu, data), args.repeat)
        tn, rn = timed(lambda: oracle.enumerate_top_bruteforce(mu, data, backend="numpy"), args.repeat)
        assert rc.classes == rn.classes
        total["cython"] += tc
        total["numpy"] += tn
        mu_s = ",".join(map(str, mu))
        print(f"{n:>2} {m:>2} {mu_s:<12} {len(rc.classes):>7} {tc:>9.3f} {tn:>9.3f} {tn / tc:>7.1f}x")
    print(f"total: cython {total['cython']:.2f}s, numpy {total['numpy']:.2f}s")


if __name__ == "__main__":
    main()
