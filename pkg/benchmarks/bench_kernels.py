"""Timing comparison of the compiled and pure-Python kernel backends.

Run:  python benchmarks/bench_kernels.py [--n 200000]
"""

import argparse
import random
import time

from gamma_envelope import _kernels

try:
    from gamma_envelope import _ckernels
except ImportError:
    _ckernels = None


def _time(fn, args_list):
    best = float("inf")
    for _ in range(3):
        t0 = time.perf_counter()
        for args in args_list:
            fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=200000,
                    help="evaluations per function")
    args = ap.parse_args()

    rng = random.Random(20240811)
    xs = [(rng.uniform(1e-3, 1e4),) for _ in range(args.n)]
    kxs = [(rng.choice((1, 2, 3)), x) for (x,) in xs]

    cases = [
        ("ln_gamma", xs),
        ("digamma", xs),
        ("polygamma", kxs),
    ]

    print("%-10s %12s %12s %8s" % ("function", "pure [s]", "compiled [s]",
                                   "speedup"))
    for name, payload in cases:
        t_py = _time(getattr(_kernels, name), payload)
        if _ckernels is None:
            print("%-10s %12.4f %12s %8s" % (name, t_py, "n/a", "n/a"))
            continue
        t_c = _time(getattr(_ckernels, name), payload)
        print("%-10s %12.4f %12.4f %7.1fx" % (name, t_py, t_c, t_py / t_c))
    if _ckernels is None:
        print("\ncompiled backend unavailable; build it with "
              "`pip install -e . --no-build-isolation`")


if __name__ == "__main__":
    main()
