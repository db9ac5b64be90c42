#!/usr/bin/env python3
"""Print a timing table for the rotation kernels.

Times are medians of batched monotonic-clock measurements and vary by
machine; the multiplication and division counts of the specialized
alignment kernel are exact and machine-independent.
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from pairquat.bench import bench_kernels


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--iterations", type=int, default=50000)
    args = parser.parse_args()

    print(f"{'kernel':28s} {'ns/op':>10s} {'mul':>5s} {'div':>5s} {'sqrt':>5s}  checksum")
    for report in bench_kernels(seed=args.seed, iterations=args.iterations):
        fmt = lambda x: "-" if x is None else str(x)
        print(
            f"{report.kernel:28s} {report.ns_per_op:10.1f} {fmt(report.mul_count):>5s}"
            f" {fmt(report.div_count):>5s} {fmt(report.sqrt_count):>5s}  {report.checksum}"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
