"""Compare the compiled and pure-Python (w, sigma) sweeps.

    python3 benchmarks/bench_kernels.py [--n 5] [--repeat 3]

Times one full sweep over all w of size n+1 for each available backend and
checks that the backends return identical counts.
"""
import argparse
import time

from braidnum.kernels import implementations
from braidnum.perms import all_permutations


def bench(impl, n, repeat):
    perms = list(all_permutations(n + 1))
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = [impl.sweep(w) for w in perms]
        best = min(best, time.perf_counter() - t0)
    return best, result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=5)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    pairs = 1
    for k in range(2, args.n + 2):
        pairs *= k
    for k in range(2, args.n + 1):
        pairs *= k
    results = {}
    print(f"n={args.n}: {pairs} pairs per sweep, best of {args.repeat}")
    for name, impl in implementations().items():
        sec, res = bench(impl, args.n, args.repeat)
        results[name] = (sec, res)
        print(f"  {name:<8} {sec:8.3f}s  {pairs / sec / 1e6:7.2f} Mpairs/s")
    if len(results) == 2:
        (ps, pr), (cs, cr) = results["python"], results["cython"]
        print(f"  speedup  {ps / cs:8.1f}x   identical={pr == cr}")
    else:
        print("  compiled kernels unavailable; only the fallback was timed")


if __name__ == "__main__":
    main()
