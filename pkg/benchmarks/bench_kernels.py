"""Compare the numba and numpy paths of the staircase kernels.

    python benchmarks/bench_kernels.py [--n 5] [--q 60] [--repeat 5]

Numba compile time is excluded by one warm-up call per kernel.
"""
import argparse
import random
import time

import numpy as np

from pbwelim import _kernels
from pbwelim.suites import random_staircases


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=5)
    ap.add_argument("--q", type=int, default=60)
    ap.add_argument("--staircases", type=int, default=20)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    if not _kernels.HAVE_NUMBA:
        print("numba is not importable; only the numpy path can run")
        return

    rng = random.Random(args.seed)
    cases = [s for s in random_staircases(args.staircases * 4, seed=args.seed, max_n=args.n)
             if s.n == args.n][:args.staircases]
    weights = [rng.randint(1, 2) for _ in range(args.n)]
    subset_masks = [[rng.getrandbits(14) | 1 for _ in range(12)] for _ in range(args.staircases)]

    def hist(backend):
        return [_kernels.standard_histogram(list(s.generators), weights, args.q, backend=backend) for s in cases]

    def subsets(backend):
        return [_kernels.max_free_subset(m, 14, backend=backend) for m in subset_masks]

    print(f"{len(cases)} staircases, n={args.n}, Q={args.q}, weights={weights}; best of {args.repeat}")
    print(f"{'kernel':<22}{'numpy s':>10}{'numba s':>10}{'speedup':>9}")
    for label, fn in (("standard_histogram", hist), ("max_free_subset n=14", subsets)):
        fn("numba")  # compile
        t_np, out_np = best_of(lambda: fn("numpy"), args.repeat)
        t_nb, out_nb = best_of(lambda: fn("numba"), args.repeat)
        same = all(np.array_equal(np.asarray(a), np.asarray(b)) for a, b in zip(out_np, out_nb))
        flag = "" if same else "  MISMATCH"
        print(f"{label:<22}{t_np:>10.4f}{t_nb:>10.4f}{t_np / max(t_nb, 1e-9):>8.1f}x{flag}")


if __name__ == "__main__":
    main()
