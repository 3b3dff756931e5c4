#!/usr/bin/env python3
"""Run the exhaustive bound-verification campaigns and write one JSON report each."""
import argparse
import pathlib
import time

from symtrace.harness import EnumSpec, verify_campaign

SPECS = {
    "n2_d4_o2": EnumSpec(2, 4, 2),
    "n3_d4_o2": EnumSpec(3, 4, 2),
    "n4_d3_o1": EnumSpec(4, 3, 1),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", default="results/campaigns")
    ap.add_argument("--k-max", type=int, default=2)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    out = pathlib.Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for name, spec in SPECS.items():
        t0 = time.perf_counter()
        rep = verify_campaign(spec, args.k_max, args.workers)
        (out / f"{name}.json").write_text(rep.to_json())
        margins = ", ".join(f"k={k}: {m}" for k, m in sorted(rep.min_margins.items()))
        print(f"{name}: {rep.count} matrices, min Tr {rep.min_trace}, min Tr2 {rep.min_trace2}, "
              f"min margins [{margins}], violations {len(rep.violations)} "
              f"({time.perf_counter() - t0:.1f}s)")


if __name__ == "__main__":
    main()
