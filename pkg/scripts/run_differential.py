#!/usr/bin/env python3
"""Long differential run: optimized operators vs the brute-force path.

Usage: python3 scripts/run_differential.py [--seed N] [--count N]
"""

import argparse
import sys
import time

from fuzzycover.checks import run_random


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--count", type=int, default=10000)
    args = ap.parse_args()

    t0 = time.time()
    report = run_random(seed=args.seed, count=args.count)
    elapsed = time.time() - t0
    print(report.describe())
    print(f"elapsed: {elapsed:.1f}s")
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
