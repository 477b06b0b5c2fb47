"""Exact decision consistency for the two allocation scenarios, fuzzy vs hard."""
import json

from pursuit.harness import dc_analyze

if __name__ == "__main__":
    print(json.dumps(dc_analyze(), indent=2))
