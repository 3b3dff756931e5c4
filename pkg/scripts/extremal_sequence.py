#!/usr/bin/env python3
"""Tabulate the path matrices M_n against the trace bounds.

Columns: n, Tr, Tr2, Tr2 - (6n - 5), and Tr_{2^k} - B(n, k) for k = 2..k_max.
"""
import argparse

from symtrace.constructions import path_matrix
from symtrace.measures import lower_bound_B, trace_k


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=20)
    ap.add_argument("--k-max", type=int, default=4)
    args = ap.parse_args()

    head = ["n", "Tr", "Tr2", "gap2"] + [f"margin{2 ** k}" for k in range(2, args.k_max + 1)]
    print(",".join(head))
    for n in range(1, args.n_max + 1):
        M = path_matrix(n)
        t2 = trace_k(M, 2)
        row = [n, trace_k(M, 1), t2, t2 - (6 * n - 5)]
        row += [trace_k(M, 2 ** k) - lower_bound_B(n, k) for k in range(2, args.k_max + 1)]
        print(",".join(map(str, row)))


if __name__ == "__main__":
    main()
