#!/usr/bin/env python3
"""Sweep the unramified pairing identity over symbolic ranks.

Checks, fully symbolically, that the spherical-by-spherical lattice sum
matches the Euler product over all parameter pairs, for every
1 <= m <= n <= nmax at the requested truncation order.

Usage:
  python scripts/cauchy_sweep.py [--nmax 4] [--degree 8]
"""

import argparse
import sys
import time

from whittaker.ringcore import Scalar
from whittaker.rseng import cauchy_check


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--nmax", type=int, default=4)
    parser.add_argument("--degree", type=int, default=8)
    args = parser.parse_args()

    failures = 0
    for n in range(1, args.nmax + 1):
        xs = [Scalar.variable(f"x{i + 1}") for i in range(n)]
        for m in range(1, n + 1):
            ys = [Scalar.variable(f"y{j + 1}") for j in range(m)]
            start = time.perf_counter()
            report = cauchy_check(n, m, xs, ys, args.degree)
            elapsed = time.perf_counter() - start
            status = "pass" if report.passed else "FAIL"
            print(f"n={n} m={m} degree={args.degree}: {status} [{elapsed:.2f}s]")
            if not report.passed:
                failures += 1
                k, lhs_c, rhs_c = report.first_mismatch
                print(f"  first mismatch at t^{k}: lhs={lhs_c} rhs={rhs_c}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
