"""Compare the compiled and pure-Python exact linear algebra kernels.

Usage: python benchmarks/bench_linalg.py [--size N] [--repeats R]

Both backends are imported directly so a single run times both; results
are cross-checked for exact agreement before timings are reported.
"""

import argparse
import random
import time

from qcap import _linalg_py
from qcap.scalars import QQ

try:
    from qcap import _linalg_cy
except ImportError:
    _linalg_cy = None


def random_matrix(rng, rows, cols):
    return [[QQ(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(cols)]
            for _ in range(rows)]


def bench(impl, mats, repeats):
    t0 = time.perf_counter()
    out = []
    for _ in range(repeats):
        out = [impl.rref(m) for m in mats]
    return time.perf_counter() - t0, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--size", type=int, default=40)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    rng = random.Random(20240817)
    mats = [
        random_matrix(rng, args.size, args.size),
        random_matrix(rng, args.size, args.size + 10),
        # low-rank case: nullspace extraction dominates
        [row[:] for row in random_matrix(rng, args.size // 2, args.size)] * 2,
    ]

    t_py, out_py = bench(_linalg_py, mats, args.repeats)
    print("python backend: %.3f s (%d rref calls, size ~%d)"
          % (t_py, args.repeats * len(mats), args.size))

    if _linalg_cy is None:
        print("cython backend: not built (install without QCAP_NO_EXT)")
        return

    t_cy, out_cy = bench(_linalg_cy, mats, args.repeats)
    assert out_py == out_cy, "backends disagree"
    print("cython backend: %.3f s" % t_cy)
    print("speedup: %.2fx" % (t_py / t_cy if t_cy else float("inf")))


if __name__ == "__main__":
    main()
