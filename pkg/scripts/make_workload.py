#!/usr/bin/env python3
"""Generate a batch of graph + update-stream files over a seed range.

Thin wrapper over `decapsp generate`; one (graph, updates) pair per seed,
named <prefix>_s<seed>.graph / .updates in the output directory.
"""

import argparse
import pathlib
import sys

from decapsp import cli


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=64)
    ap.add_argument("--density", type=float, default=0.25)
    ap.add_argument("--W", type=int, default=10)
    ap.add_argument("--fraction", type=float, default=1.0)
    ap.add_argument("--seeds", type=int, default=5, help="seeds 0..seeds-1")
    ap.add_argument("--outdir", default="workloads")
    ap.add_argument("--prefix", default="w")
    args = ap.parse_args()

    outdir = pathlib.Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for seed in range(args.seeds):
        stem = outdir / f"{args.prefix}_s{seed}"
        rc = cli.main([
            "generate",
            "--n", str(args.n),
            "--density", str(args.density),
            "--W", str(args.W),
            "--fraction", str(args.fraction),
            "--seed", str(seed),
            "--graph", f"{stem}.graph",
            "--updates", f"{stem}.updates",
        ])
        if rc != 0:
            return rc
    return 0


if __name__ == "__main__":
    sys.exit(main())
