"""Desk-scale search training: 8 agents, 50 targets, 40x40.

Writes train_log.jsonl and final.sos under --out, then compares the trained
policy with the random-walk baseline over 100 seeded evaluation episodes.
"""
import argparse
import json
from pathlib import Path

from pursuit import sos
from pursuit.train import TrainConfig, evaluate, train_sos


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--episodes", type=int, default=2000)
    ap.add_argument("--n-envs", type=int, default=2)
    ap.add_argument("--max-steps", type=int, default=200)
    ap.add_argument("--optimizer", default="adam")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default="runs/sos_desk")
    args = ap.parse_args()

    cfg = TrainConfig(
        episodes=args.episodes, n_envs=args.n_envs, max_steps=args.max_steps,
        optimizer=args.optimizer, seed=args.seed, out_dir=args.out, checkpoint_every=250,
    )

    def log(rec):
        if rec["episode"] % 50 == 0:
            print(json.dumps(rec), flush=True)

    params, _ = train_sos(cfg, log=log)
    trained = evaluate(sos.NeuralPolicy(params), cfg, episodes=100, seed=10_000)
    baseline = evaluate(sos.RandomWalkPolicy(), cfg, episodes=100, seed=10_000)
    dist = sos.empty_obs_distribution(params, runs=100, steps=1000, seed=0)
    summary = {
        "trained": trained,
        "random_walk": baseline,
        "empty_obs_distribution": dist.tolist(),
        "entropy": sos.entropy(dist),
    }
    Path(args.out, "eval.json").write_text(json.dumps(summary, indent=2))
    print(json.dumps(summary, indent=2))


if __name__ == "__main__":
    main()
