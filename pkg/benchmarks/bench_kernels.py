"""Timing comparison of the pure-Python digit loops against the compiled ones.

Run directly: python3 benchmarks/bench_kernels.py
"""

import math
import random
import time

from qadic import _pure

try:
    from qadic import _native
except ImportError:
    _native = None


def _workloads():
    rng = random.Random(4011)
    small, medium, long_period = [], [], []
    while len(small) < 600:
        den = rng.randrange(3, 1_000)
        num = rng.randrange(1, den)
        g = math.gcd(num, den)
        small.append((num // g, den // g, rng.randrange(2, 13)))
    while len(medium) < 150:
        den = rng.randrange(10_000, 300_000)
        num = rng.randrange(1, den)
        g = math.gcd(num, den)
        medium.append((num // g, den // g, rng.randrange(2, 13)))
    # primes with near-maximal period length for base 10
    for den in (99991, 100003, 100019, 100043):
        long_period.append((1, den, 10))
    return (("small dens", small), ("medium dens", medium), ("long periods", long_period))


def _time(fn, reps=3):
    best = math.inf
    for _ in range(reps):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def _bench_cycle(mod, cases):
    return _time(lambda: [mod.digit_cycle(n, d, b) for n, d, b in cases])


def _bench_scan(mod, cases):
    def run():
        for n, d, b in cases:
            mod.scan_allowed(n, d, b, (1 << b) - 1, 40)

    return _time(run)


def _bench_mask(mod, cases):
    def run():
        for n, d, b in cases:
            mod.digit_mask(n, d, b, 40)

    return _time(run)


def main():
    if _native is None:
        print("compiled backend not built; nothing to compare")
        return
    rows = []
    for label, cases in _workloads():
        for name, bench in (("digit_cycle", _bench_cycle), ("scan_allowed", _bench_scan), ("digit_mask", _bench_mask)):
            pure_t = bench(_pure, cases)
            native_t = bench(_native, cases)
            rows.append((f"{name} / {label}", pure_t, native_t, pure_t / native_t))
    width = max(len(r[0]) for r in rows)
    print(f"{'workload':<{width}}  {'pure':>10}  {'native':>10}  {'speedup':>8}")
    for label, pure_t, native_t, ratio in rows:
        print(f"{label:<{width}}  {pure_t * 1e3:>8.2f}ms  {native_t * 1e3:>8.2f}ms  {ratio:>7.1f}x")


if __name__ == "__main__":
    main()
