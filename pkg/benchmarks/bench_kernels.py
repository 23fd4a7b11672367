"""Time the compiled and pure-Python scan kernels on the same inputs.

    python benchmarks/bench_kernels.py [--repeat 3] [--quick]

Prints one tab-separated row per kernel: name, python seconds, cython
seconds, speed-up.  Results of the two backends are compared as well.
"""
import argparse
import time

from hyperramsey import kernels
from hyperramsey.colorings import BaseTwoColoring, random_base


def timed(fn, repeat):
    best, out = None, None
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        took = time.perf_counter() - start
        best = took if best is None else min(best, took)
    return best, out


def cases(quick):
    N = 4 if quick else 5
    phi = BaseTwoColoring.constant(N, 6, 0)
    step = bytes(kernels.stepup_table(N, 6, phi.red, False))
    rank = random_base(14 if quick else 24, 3, 1)
    rank_tab = bytes(kernels.rank_table(rank.N, 3, rank.values))
    cls = bytes(kernels.class_table(N, 6))
    return [
        ("stepup_table", lambda b: bytes(kernels.stepup_table(N, 6, phi.red, False, b))),
        ("rank_table", lambda b: bytes(kernels.rank_table(rank.N, 3, rank.values, b))),
        ("red_scan stepup", lambda b: kernels.red_scan(1 << N, 6, step, 4, backend=b)),
        ("red_scan rank", lambda b: kernels.red_scan(rank.N, 3, rank_tab, 3, backend=b)),
        ("claim1_scan", lambda b: kernels.claim1_scan(N, 6, cls, b)),
        ("case1_scan k=4", lambda b: kernels.case1_scan(N, 4, backend=b)),
    ]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=1)
    ap.add_argument("--quick", action="store_true", help="smaller inputs")
    args = ap.parse_args(argv)
    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled backend not built; only timing the Python kernels")
    print("kernel\tpython_s\tcython_s\tspeedup\tsame_result")
    for name, fn in cases(args.quick):
        tp, rp = timed(lambda: fn("python"), args.repeat)
        if "cython" in backends:
            tc, rc = timed(lambda: fn("cython"), args.repeat)
            print(f"{name}\t{tp:.3f}\t{tc:.4f}\t{tp / max(tc, 1e-9):.0f}x\t{rp == rc}")
        else:
            print(f"{name}\t{tp:.3f}\t-\t-\t-")


if __name__ == "__main__":
    main()
