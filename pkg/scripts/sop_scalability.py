"""Multi-target pursuit on 40x40 at several team sizes.

Runs the battery for each (pursuers, targets) pair and writes one summary
per pair under --out.
"""
import argparse
import json
from pathlib import Path

from pursuit import sos
from pursuit.harness import ExperimentSpec, run_battery

PAIRS = [(8, 2), (16, 4), (32, 8), (64, 16)]


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--runs", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--search-policy", default="neural")
    ap.add_argument("--checkpoint", default=str(sos.DEFAULT_CHECKPOINT))
    ap.add_argument("--out", default="runs/sop_scalability")
    args = ap.parse_args()
    for n_p, n_t in PAIRS:
        spec = ExperimentSpec(
            mode="sop-run", n_pursuers=n_p, n_targets=n_t, runs=args.runs, seed=args.seed,
            workers=args.workers, search_policy=args.search_policy, checkpoint=args.checkpoint,
            out=str(Path(args.out) / f"p{n_p}_t{n_t}"),
        )
        summary = run_battery(spec)
        summary.pop("spec")
        print(json.dumps({"pursuers": n_p, "targets": n_t, **summary}))


if __name__ == "__main__":
    main()
