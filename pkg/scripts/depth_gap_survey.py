"""Survey parameter-depth gaps over random extensions, written as CSV.

    python scripts/depth_gap_survey.py --samples 200 --seed 3 > gaps.csv
"""
from __future__ import annotations

import argparse
import csv
import json
import random
import sys
from dataclasses import dataclass

from hasse_herbrand import codec
from hasse_herbrand.depth import depth_report
from hasse_herbrand.ramification import ramification_index
from hasse_herbrand.rational import format_rational
from hasse_herbrand.verify import random_rational, random_spec


@dataclass
class Config:
    samples: int = 100
    seed: int = 0
    max_depth: int = 20


def run(cfg: Config, out=sys.stdout) -> None:
    rng = random.Random(cfg.seed)
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["spec", "e", "character_depth", "parameter_depth", "gap", "preserved"])
    for _ in range(cfg.samples):
        spec = random_spec(rng)
        r = random_rational(rng, hi=cfg.max_depth)
        rep = depth_report(spec, r)
        w.writerow([
            json.dumps(codec.spec_to_dict(spec), sort_keys=True),
            ramification_index(spec),
            format_rational(rep.character_depth),
            format_rational(rep.parameter_depth),
            format_rational(rep.gap),
            str(rep.preserved).lower(),
        ])


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--samples", type=int, default=Config.samples)
    ap.add_argument("--seed", type=int, default=Config.seed)
    args = ap.parse_args()
    run(Config(samples=args.samples, seed=args.seed))


if __name__ == "__main__":
    main()
