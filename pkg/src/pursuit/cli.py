"""Command-line entry point: ``pursuit <mode> [--config FILE] [flags]``.

Values come from the JSON config first; any flag given on the command line
overrides the file.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .harness import MODES, ExperimentSpec, dc_analyze, render_episode, run_battery, run_training

FLAG_KEYS = {
    "width": int, "height": int, "targets": int, "pursuers": int, "runs": int,
    "seed": int, "max_steps": int, "checkpoint": str, "out": str,
    "target_policy": str, "uniformity": str, "search_policy": str,
    "clustering": str, "workers": int, "trace_runs": int, "episodes": int,
    "n_envs": int, "optimizer": str, "trace": str, "format": str,
}
RENAMES = {"targets": "n_targets", "pursuers": "n_pursuers"}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pursuit", description="Multi-agent search and pursuit experiments.")
    ap.add_argument("mode", choices=MODES)
    ap.add_argument("--config", type=Path, help="JSON document with ExperimentSpec fields")
    for key, kind in FLAG_KEYS.items():
        ap.add_argument("--" + key.replace("_", "-"), dest=key, type=kind, default=None)
    ap.add_argument("--strict-four-pursuers", action="store_true", default=None)
    ap.add_argument("--greedy", action="store_true", default=None)
    ap.add_argument("--halo", action="store_true", default=None)
    return ap


def spec_from_args(args: argparse.Namespace) -> ExperimentSpec:
    data = {}
    if args.config is not None:
        data.update(json.loads(args.config.read_text()))
    data["mode"] = args.mode
    for key in [*FLAG_KEYS, "strict_four_pursuers", "greedy", "halo"]:
        value = getattr(args, key)
        if value is not None:
            data[RENAMES.get(key, key)] = value
    return ExperimentSpec.from_dict(data)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = spec_from_args(args)
        if spec.mode in ("sop-run", "sos-eval", "stp-eval"):
            result = run_battery(spec)
            result.pop("spec", None)
        elif spec.mode in ("sos-train", "stp-train"):
            result = run_training(spec)
        elif spec.mode == "dc-analyze":
            result = dc_analyze()
            Path(spec.out).mkdir(parents=True, exist_ok=True)
            Path(spec.out, "dc.json").write_text(json.dumps(result, indent=2) + "\n")
        else:
            if spec.trace is None:
                raise ValueError("render needs --trace")
            frames = render_episode(spec.trace, spec.format, Path(spec.out) / "frames", halo=spec.halo)
            if spec.format == "ascii":
                print("\n\n".join(frames))
            result = {"frames": len(frames)}
    except (OSError, ValueError) as exc:
        print(f"pursuit: error: {exc}", file=sys.stderr)
        return 1
    print(json.dumps(result, indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
