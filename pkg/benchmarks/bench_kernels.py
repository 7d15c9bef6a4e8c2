"""Time the compiled kernels against the pure-Python ones.

    python3 benchmarks/bench_kernels.py [--max-n 14] [--repeat 3]

Prints one row per kernel and size with the best time for each backend and
the speedup.  Results are checked for equality before timing.
"""

import argparse
import random
import timeit

from cutdim import _backend, _pykernels
from cutdim.graph import num_slots


def workloads(max_n, rng):
    for n in range(8, max_n + 1, 2):
        w = [rng.randint(0, 9) for _ in range(num_slots(n))]
        yield f"cut_weights n={n}", lambda impl, n=n, w=w: impl.cut_weights(n, w)
    for n in (8, 10, 12):
        masks = list(range(2, 1 << n, 2))
        cols = list(range(num_slots(n)))
        yield f"crossing_matrix n={n}", lambda impl, n=n, m=masks, c=cols: impl.crossing_matrix(n, m, c)
    for size in (20, 40, 66):
        rows = [[rng.randint(0, 1) for _ in range(size)] for _ in range(size + 10)]
        yield f"rank_int {size + 10}x{size}", lambda impl, r=rows: impl.rank_int(r)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=14)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    backends = _backend.available_backends()
    if "compiled" not in backends:
        print("compiled extension not built; only the Python kernels are available")
    rng = random.Random(args.seed)
    print(f"{'workload':28s} {'python s':>10s} {'compiled s':>11s} {'speedup':>8s}")
    for name, fn in workloads(args.max_n, rng):
        py = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=args.repeat))
        if "compiled" in backends:
            impl = backends["compiled"]
            assert fn(impl) == fn(_pykernels), name
            c = min(timeit.repeat(lambda: fn(impl), number=1, repeat=args.repeat))
            print(f"{name:28s} {py:10.4f} {c:11.4f} {py / c:7.1f}x")
        else:
            print(f"{name:28s} {py:10.4f} {'-':>11s} {'-':>8s}")


if __name__ == "__main__":
    main()
