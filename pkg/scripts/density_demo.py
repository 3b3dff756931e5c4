#!/usr/bin/env python3
"""Approach a target absolute trace (or trace-2) with explicit matrix families."""
import argparse
from fractions import Fraction

from symtrace.harness import density_report


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--r", type=Fraction, default=Fraction(15, 2))
    ap.add_argument("--kind", choices=["trace", "trace2"], default="trace2")
    ap.add_argument("--N", type=int, nargs="+", default=[10, 30, 100, 300, 1000])
    args = ap.parse_args()
    print(density_report(args.r, args.kind, args.N, human=True), end="")


if __name__ == "__main__":
    main()
