"""Per-agent decision latency against the number of visible agents and targets."""
import argparse
import json

from pursuit.harness import complexity_probe


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--radius", type=int, default=10)
    ap.add_argument("--repeats", type=int, default=20)
    args = ap.parse_args()
    print(json.dumps(complexity_probe(radius=args.radius, repeats=args.repeats), indent=2))


if __name__ == "__main__":
    main()
