"""Single-target capture on a 6x6 world with four pursuers, both capture rules.

Prints capture rate, mean/std episode length and collisions over seeded runs.
"""
import argparse
import json
import time

import numpy as np

from pursuit.fsc2 import Fsc2Config, run_episode


def battery(strict: bool, runs: int, seed: int) -> dict:
    cfg = Fsc2Config(width=6, height=6, n_targets=1, n_pursuers=4, strict_four_pursuers=strict, record_dc=False)
    t0 = time.perf_counter()
    ms = [run_episode(cfg, seed + i) for i in range(runs)]
    lengths = [m.episode_length for m in ms]
    return {
        "rule": "four pursuers" if strict else "pursuer or obstacle",
        "capture_rate": float(np.mean([m.capture_rate for m in ms])),
        "length_mean": float(np.mean(lengths)),
        "length_std": float(np.std(lengths)),
        "collisions": int(sum(m.collisions for m in ms)),
        "seconds": time.perf_counter() - t0,
    }


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--runs", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    for strict in (False, True):
        print(json.dumps(battery(strict, args.runs, args.seed)))


if __name__ == "__main__":
    main()
