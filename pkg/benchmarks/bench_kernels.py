"""Time the exhaustive subset scan under the numba and numpy backends.

    python benchmarks/bench_kernels.py [--repeat 3] [--specs theta:1,2,3,4,5,6,7 ...]

Each row scans one subset size completely (cap 0, so no early exit) and
reports the best of ``--repeat`` runs.  The JIT is compiled before timing.
"""

import argparse
import time
from math import comb

from thetadim import _kernels
from thetadim.model import distance_matrix, parse_spec

DEFAULT_CASES = [
    ("theta:1,2,3,4,5,6,7", 3),
    ("theta:2,2,2,2,2,2", 5),
    ("theta:4,4,4,4,4,4", 5),
    ("theta:3,3,4,4,5,5", 4),
    ("theta:6,6,6,6,6", 4),
    ("theta:4,4,4,4,4,4,4", 6),
]


def best_time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None) -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--cases", nargs="*", metavar="SPEC:K",
                        help="override cases, e.g. theta:2,2,2,2,2:4 (last field is the subset size)")
    args = parser.parse_args(argv)

    cases = DEFAULT_CASES
    if args.cases:
        cases = [(c.rsplit(":", 1)[0], int(c.rsplit(":", 1)[1])) for c in args.cases]

    backends = ["numpy"] + (["numba"] if _kernels.HAVE_NUMBA else [])
    if "numba" in backends:
        warm = distance_matrix(parse_spec("theta:1,1,1"))
        _kernels.scan_level(warm, 2, 1, "numba")

    print(f"{'spec':<22}{'k':>3}{'subsets':>12}" + "".join(f"{b + ' s':>12}" for b in backends) + f"{'speedup':>10}")
    for literal, k in cases:
        dist = distance_matrix(parse_spec(literal))
        times, counts = {}, set()
        for b in backends:
            counts.add(_kernels.scan_level(dist, k, 0, b)[0])
            times[b] = best_time(lambda: _kernels.scan_level(dist, k, 0, b), args.repeat)
        if len(counts) != 1:
            raise SystemExit(f"backends disagree on {literal} k={k}: {counts}")
        speed = f"{times['numpy'] / times['numba']:.1f}x" if "numba" in times else "n/a"
        row = f"{literal:<22}{k:>3}{comb(dist.shape[0], k):>12}"
        print(row + "".join(f"{times[b]:>12.4f}" for b in backends) + f"{speed:>10}")


if __name__ == "__main__":
    main()
