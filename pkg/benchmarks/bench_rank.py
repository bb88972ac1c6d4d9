"""Compiled vs pure-Python elimination kernels on total-derivative image matrices.

    python benchmarks/bench_rank.py --D 4 --p 3 --d 4..7 --repeat 3
"""

import argparse
import statistics
import time

from dncohomology import _kernels_py, linalg, theta
from dncohomology.linalg import _block_entries, _integer_rows


def parse_range(text):
    lo, _, hi = text.partition("..")
    return int(lo), int(hi or lo)


def blocks_of(D, p, d):
    M = theta.image_matrix(D, p, d)
    return M, [_integer_rows(r, c, e) for r, c, e in _block_entries(M)]


def best_time(fn, blocks, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        rank = sum(fn([row[:] for row in b]) for b in blocks)
        times.append(time.perf_counter() - t)
    return rank, min(times), statistics.median(times)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--D", type=int, default=4)
    ap.add_argument("--p", type=int, default=3)
    ap.add_argument("--d", type=parse_range, default=(4, 7))
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    if linalg.KERNEL != "compiled":
        print("compiled kernel not available; only the pure-Python timings are meaningful")
    print(f"{'D':>2} {'p':>2} {'d':>3} {'rows x cols':>13} {'rank':>6} {'compiled s':>11} {'python s':>10} {'speedup':>8}")
    for d in range(args.d[0], args.d[1] + 1):
        M, blocks = blocks_of(args.D, args.p, d)
        rc, tc, _ = best_time(linalg._kern.bareiss_rank, blocks, args.repeat)
        rp, tp, _ = best_time(_kernels_py.bareiss_rank, blocks, args.repeat)
        assert rc == rp, f"kernels disagree at d={d}: {rc} vs {rp}"
        speed = tp / tc if tc else float("inf")
        print(f"{args.D:>2} {args.p:>2} {d:>3} {f'{M.rows} x {M.cols}':>13} {rc:>6} {tc:>11.4f} {tp:>10.4f} {speed:>7.1f}x")


if __name__ == "__main__":
    main()
