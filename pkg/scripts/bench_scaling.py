#!/usr/bin/env python3
"""Run the cost harness and print the scaling table.

Defaults to data/bench_gf7.json (N = 3*7^h, h = 1..4): the reduction +
contraction path stays below (3(u-1) + 2p^2) * N operations while direct
synthesis grows quadratically.
"""

import argparse
import json
from pathlib import Path

from lincomp.bench import bench_config_from_dict, render_bench_table, run_bench

DEFAULT = Path(__file__).resolve().parent.parent / "data" / "bench_gf7.json"


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("config", nargs="?", default=DEFAULT, help="bench config JSON")
    parser.add_argument("--json", action="store_true", help="emit raw JSON")
    args = parser.parse_args()
    with open(args.config, encoding="utf-8") as fh:
        cfg = bench_config_from_dict(json.load(fh))
    result = run_bench(cfg)
    if args.json:
        print(json.dumps(result, sort_keys=True))
    else:
        print(render_bench_table(result))


if __name__ == "__main__":
    main()
