#!/usr/bin/env python3
"""Benchmark the pure-Python kernels against the compiled extension.

Three workloads dominate real runs:
  * reduced-form enumeration for a large discriminant (class-group build),
  * the fused qualifying-prime scan (the W-group inner loop),
  * composition/reduction throughput (subgroup closures).

Usage: python bench/bench_backends.py [--fast]
"""

import argparse
import sys
import time

from steinitzcalc._kernels import pure
from steinitzcalc.classgroup import is_fundamental

try:
    from steinitzcalc._kernels import _speedups
except ImportError:
    _speedups = None


def _time(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def _fundamental_below(start: int) -> int:
    d = start
    while not is_fundamental(d):
        d -= 1
    return d


def bench(fast: bool):
    backends = [("pure", pure)]
    if _speedups is not None:
        backends.append(("speedups", _speedups))
    else:
        print("compiled extension not available; benchmarking pure only\n")

    big_disc = _fundamental_below(-2_000_000 if fast else -8_000_000)
    scan_hi = 400_000 if fast else 2_000_000
    compose_disc = _fundamental_below(-800_000)
    compose_reps = 20_000 if fast else 100_000

    rows = []

    # 1. reduced-form enumeration
    results = {}
    for name, k in backends:
        secs, forms = _time(k.reduced_forms, big_disc, repeat=1)
        results[name] = (secs, len(forms))
    rows.append((f"reduced_forms({big_disc}) [h={results[backends[0][0]][1]}]", results))

    # 2. fused qualifying-prime scan
    results = {}
    for name, k in backends:
        secs, found = _time(
            k.scan_w_forms, -71, 15, frozenset({1, 14}), 2, scan_hi, repeat=1
        )
        results[name] = (secs, len(found))
    rows.append((f"scan_w_forms(-71, m=15, [2,{scan_hi}))", results))

    # 3. composition throughput
    forms = pure.reduced_forms(compose_disc)
    pairs = [
        (forms[i % len(forms)], forms[(i * 7 + 3) % len(forms)])
        for i in range(compose_reps)
    ]
    results = {}
    for name, k in backends:
        t0 = time.perf_counter()
        acc = 0
        for f, g in pairs:
            acc ^= k.compose_reduced(*f, *g)[0]
        results[name] = (time.perf_counter() - t0, acc)
    rows.append((f"{compose_reps}x compose_reduced (disc {compose_disc})", results))

    width = max(len(r[0]) for r in rows) + 2
    header = f"{'workload':<{width}}" + "".join(f"{n:>12}" for n, _ in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for label, results in rows:
        line = f"{label:<{width}}"
        for name, _ in backends:
            line += f"{results[name][0]:>11.3f}s"
        if len(backends) == 2:
            checks = {results[name][1] for name, _ in backends}
            assert len(checks) == 1, f"backends disagree on {label}: {checks}"
            line += f"{results['pure'][0] / results['speedups'][0]:>9.1f}x"
        print(line)
    if len(backends) == 2:
        print("\nresult checksums agree between backends")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--fast", action="store_true", help="smaller workloads")
    args = ap.parse_args()
    bench(args.fast)
    return 0


if __name__ == "__main__":
    sys.exit(main())
